#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "space.hpp"

namespace ultratree {

/// G_X: vertices are the points of X, edges join pairs at distance exactly diam X.
class DiametricalGraph {
 public:
  explicit DiametricalGraph(const FiniteUltrametricSpace& s) : n_(s.size()), adj_(n_ * n_, false) {
    const Rational diam = diameter(s);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (s.distance(u, v) == diam) {
          adj_[u * n_ + v] = adj_[v * n_ + u] = true;
          edges_.emplace_back(u, v);
        }
  }

  std::size_t vertex_count() const { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v]; }
  std::size_t degree(std::size_t u) const {
    return static_cast<std::size_t>(std::count(adj_.begin() + static_cast<std::ptrdiff_t>(u * n_),
                                               adj_.begin() + static_cast<std::ptrdiff_t>((u + 1) * n_), true));
  }

 private:
  std::size_t n_;
  std::vector<bool> adj_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

inline DiametricalGraph diametrical_graph(const FiniteUltrametricSpace& s) { return DiametricalGraph(s); }

/// Parts of a complete multipartite graph, each sorted, ordered by least member.
struct MultipartiteDecomposition {
  std::vector<std::vector<std::size_t>> parts;

  bool has_singleton_part() const {
    return std::any_of(parts.begin(), parts.end(), [](const auto& p) { return p.size() == 1; });
  }
};

/// Parts are the connected components of the complement graph; the result is
/// verified to be complete across parts and empty within them.
inline MultipartiteDecomposition multipartite_parts(const DiametricalGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw Error(ErrorKind::TooSmall, "multipartite structure needs at least two vertices");

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) {
        const std::size_t a = find(u), b = find(v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }

  MultipartiteDecomposition out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = find(v);
    if (slot[root] == n) {
      slot[root] = out.parts.size();
      out.parts.emplace_back();
    }
    out.parts[slot[root]].push_back(v);
  }
  if (out.parts.size() < 2)
    throw Error(ErrorKind::NotCompleteMultipartite, "the graph has a single part (no diametrical pairs)");
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if ((find(u) == find(v)) == g.adjacent(u, v))
        throw Error(ErrorKind::NotCompleteMultipartite,
                    "vertices " + std::to_string(u) + " and " + std::to_string(v) + " break the part structure");
  return out;
}

struct StarCertificate {
  std::size_t center;
};

/// Least-index vertex adjacent to every other vertex, if any.
inline std::optional<StarCertificate> spanning_star(const DiametricalGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw Error(ErrorKind::TooSmall, "a spanning star needs at least two vertices");
  for (std::size_t c = 0; c < n; ++c)
    if (g.degree(c) == n - 1) return StarCertificate{c};
  return std::nullopt;
}

}  // namespace ultratree

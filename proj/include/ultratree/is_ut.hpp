#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "error.hpp"
#include "fence.hpp"
#include "labeled_tree.hpp"
#include "random_tree.hpp"
#include "space.hpp"
#include "tree_metric.hpp"

namespace ultratree {

/// Searches for a non-degenerately labeled tree on the points of s whose
/// d_l reproduces s exactly.
///
/// Spaces with |X| >= 2 and C(X) != {0, diam X} are rejected at once. Otherwise
/// every labeled tree shape on the n points is visited through its Pruefer
/// sequence, and labels are drawn from D(X) (a labeling with values in D(X)
/// exists whenever any does). A vertex label never exceeds the nearest
/// distance from that vertex, and every edge must carry
/// max(l(u), l(v)) = d(u, v); candidates surviving both prunings are
/// replayed through distance_matrix before being returned.
inline std::optional<LabeledTree> is_ut(const FiniteUltrametricSpace& s, std::size_t limit = kIsUtFence) {
  const std::size_t n = s.size();
  require_within_fence(n, std::min(limit, kIsUtFence), "UT membership search");

  RawTree raw;
  raw.vertices = s.points();
  if (n == 1) {
    raw.labels.emplace_back(s.point(0), Rational(0));
    return validate_tree(raw);
  }

  const DistanceSet dist = distance_set(s);
  if (center_of_distances(s) != DistanceSet{Rational(0), diameter(s)}) return std::nullopt;

  std::vector<std::vector<Rational>> choices(n);
  for (std::size_t v = 0; v < n; ++v) {
    Rational nearest = diameter(s);
    for (std::size_t u = 0; u < n; ++u)
      if (u != v) nearest = std::min(nearest, s.distance(u, v));
    for (const Rational& value : dist.values())
      if (value <= nearest) choices[v].push_back(value);
  }

  std::vector<std::size_t> code(n - 2, 0);
  std::vector<Rational> labels(n);
  while (true) {
    const std::vector<Edge> edges = prufer_to_edges(code, n);
    std::vector<std::vector<std::size_t>> earlier(n);  // neighbors with a smaller index
    for (const auto& [u, v] : edges) earlier[std::max(u, v)].push_back(std::min(u, v));

    std::optional<LabeledTree> found;
    auto assign = [&](auto&& self, std::size_t v) -> bool {
      if (v == n) {
        RawTree candidate = raw;
        for (std::size_t i = 0; i < n; ++i) candidate.labels.emplace_back(s.point(i), labels[i]);
        for (const auto& [a, b] : edges) candidate.edges.emplace_back(s.point(a), s.point(b));
        LabeledTree tree = validate_tree(candidate);
        if (!is_nondegenerate(tree) || !(distance_matrix(tree) == s)) return false;
        found = std::move(tree);
        return true;
      }
      for (const Rational& l : choices[v]) {
        bool ok = true;
        for (std::size_t u : earlier[v]) ok = ok && std::max(labels[u], l) == s.distance(u, v);
        if (!ok) continue;
        labels[v] = l;
        if (self(self, v + 1)) return true;
      }
      return false;
    };
    if (assign(assign, 0)) return found;

    // Next Pruefer sequence in odometer order.
    std::size_t pos = 0;
    while (pos < code.size() && ++code[pos] == n) code[pos++] = 0;
    if (pos == code.size()) break;
  }
  return std::nullopt;
}

}  // namespace ultratree

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

/// The constant k when every pair of distinct points is at distance k.
inline std::optional<Rational> is_equidistant(const FiniteUltrametricSpace& s) {
  if (s.size() < 2) throw Error(ErrorKind::TooSmall, "equidistance needs at least two points");
  const Rational& k = s.distance(0, 1);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s.distance(i, j) != k) return std::nullopt;
  return k;
}

/// Weak similarity a -> b: a point bijection Phi and the strictly increasing
/// bijection f : D(b) -> D(a) with d_a(x,y) = f(d_b(Phi x, Phi y)).
/// scale_map lists the pairs (t, f(t)) in increasing order of t.
struct WeakSimilarityWitness {
  std::vector<std::size_t> point_bijection;
  std::vector<std::pair<Rational, Rational>> scale_map;
};

namespace detail {

inline std::vector<std::size_t> rank_matrix(const FiniteUltrametricSpace& s, const DistanceSet& d) {
  const std::size_t n = s.size();
  std::vector<std::size_t> r(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i * n + j] = d.rank_of(s.distance(i, j));
  return r;
}

}  // namespace detail

/// Backtracking search for a weak similarity. On finite spaces f is forced to
/// be the rank pairing of the two distance sets, so the search only has to
/// match rank patterns; candidates are pruned by sorted row-rank multisets and
/// points with the fewest candidates are placed first.
inline std::optional<WeakSimilarityWitness> weak_similarity(const FiniteUltrametricSpace& a,
                                                            const FiniteUltrametricSpace& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  const DistanceSet da = distance_set(a), db = distance_set(b);
  if (da.size() != db.size()) return std::nullopt;

  const auto ra = detail::rank_matrix(a, da);
  const auto rb = detail::rank_matrix(b, db);
  auto signature = [n](const std::vector<std::size_t>& r, std::size_t i) {
    std::vector<std::size_t> row(r.begin() + static_cast<std::ptrdiff_t>(i * n),
                                 r.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
    std::sort(row.begin(), row.end());
    return row;
  };
  std::vector<std::vector<std::size_t>> sig_a(n), sig_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    sig_a[i] = signature(ra, i);
    sig_b[i] = signature(rb, i);
  }

  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      if (sig_a[x] == sig_b[y]) candidates[x].push_back(y);
    if (candidates[x].empty()) return std::nullopt;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return candidates[x].size() < candidates[y].size(); });

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> phi(n, kUnset);
  std::vector<bool> used(n, false);

  auto place = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t x = order[depth];
    for (std::size_t y : candidates[x]) {
      if (used[y]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const std::size_t x2 = order[k];
        ok = ra[x * n + x2] == rb[y * n + phi[x2]];
      }
      if (!ok) continue;
      phi[x] = y;
      used[y] = true;
      if (self(self, depth + 1)) return true;
      used[y] = false;
      phi[x] = kUnset;
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;

  WeakSimilarityWitness w;
  w.point_bijection = std::move(phi);
  for (std::size_t i = 0; i < da.size(); ++i) w.scale_map.emplace_back(db.values()[i], da.values()[i]);
  return w;
}

/// Checks that w is a weak similarity a -> b.
inline bool verify_weak_similarity(const FiniteUltrametricSpace& a, const FiniteUltrametricSpace& b,
                                   const WeakSimilarityWitness& w) {
  const std::size_t n = a.size();
  if (b.size() != n || w.point_bijection.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t y : w.point_bijection) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  for (std::size_t i = 1; i < w.scale_map.size(); ++i)
    if (!(w.scale_map[i - 1].first < w.scale_map[i].first) || !(w.scale_map[i - 1].second < w.scale_map[i].second))
      return false;
  auto f = [&](const Rational& t) -> std::optional<Rational> {
    for (const auto& [from, to] : w.scale_map)
      if (from == t) return to;
    return std::nullopt;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto mapped = f(b.distance(w.point_bijection[x], w.point_bijection[y]));
      if (!mapped || *mapped != a.distance(x, y)) return false;
    }
  return distance_set(a).size() == w.scale_map.size() && distance_set(b).size() == w.scale_map.size();
}

/// The witness b -> a obtained by inverting both bijections.
inline WeakSimilarityWitness invert(const WeakSimilarityWitness& w) {
  WeakSimilarityWitness out;
  out.point_bijection.resize(w.point_bijection.size());
  for (std::size_t x = 0; x < w.point_bijection.size(); ++x) out.point_bijection[w.point_bijection[x]] = x;
  for (const auto& [from, to] : w.scale_map) out.scale_map.emplace_back(to, from);
  return out;
}

/// Composition of a -> b (first) and b -> c (second) into a -> c.
inline WeakSimilarityWitness compose(const WeakSimilarityWitness& first, const WeakSimilarityWitness& second) {
  WeakSimilarityWitness out;
  for (std::size_t y : first.point_bijection) out.point_bijection.push_back(second.point_bijection.at(y));
  // f_ac = f_ab o f_bc; both maps are rank pairings of equally sized sets.
  for (std::size_t i = 0; i < second.scale_map.size(); ++i)
    out.scale_map.emplace_back(second.scale_map[i].first, first.scale_map.at(i).second);
  return out;
}

}  // namespace ultratree

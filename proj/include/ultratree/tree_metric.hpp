#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "balls.hpp"
#include "error.hpp"
#include "labeled_tree.hpp"
#include "path_max.hpp"
#include "space.hpp"

namespace ultratree {

namespace detail {

inline void require_nondegenerate(const LabeledTree& t) {
  if (auto check = is_nondegenerate(t); !check) {
    const auto [u, v] = *check.violating_edge;
    throw Error(ErrorKind::DegenerateLabeling,
                "edge {" + t.id(u) + ", " + t.id(v) + "} has both end labels equal to 0");
  }
}

}  // namespace detail

/// The ultrametric space (V(T), d_l) on the tree's vertex identifiers.
inline FiniteUltrametricSpace distance_matrix(const LabeledTree& t) {
  detail::require_nondegenerate(t);
  const PathMaxIndex idx(t);
  const std::size_t n = t.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) m[u][v] = m[v][u] = idx.query(u, v);
  return validate_ultrametric(t.ids(), m);
}

/// l*(u) = l(u) when l(u) is a realized distance, 0 otherwise. Keeps d_l
/// unchanged and makes the nonzero labels cover D(V(T)) \ {0}.
inline LabeledTree canonical_labeling(const LabeledTree& t) {
  const DistanceSet d = distance_set(distance_matrix(t));
  std::vector<Rational> labels;
  labels.reserve(t.size());
  for (const Rational& l : t.labels()) labels.push_back(d.contains(l) ? l : Rational(0));
  return t.with_labels(labels);
}

/// The subtree induced by an open ball of (V(T), d_l), with the restricted labeling.
inline LabeledTree ball_subtree(const LabeledTree& t, const std::vector<std::string>& ball_ids) {
  const FiniteUltrametricSpace s = distance_matrix(t);
  PointSet members(s.size());
  for (const auto& id : ball_ids) members.insert(t.index_of(id));
  if (members.empty()) throw Error(ErrorKind::NotABall, "the empty set is not an open ball");
  const auto balls = enumerate_balls(s, BallKind::Open);
  if (std::none_of(balls.begin(), balls.end(), [&](const Ball& b) { return b.members == members; }))
    throw Error(ErrorKind::NotABall, s.describe(members) + " is not an open ball");

  RawTree raw;
  for (std::size_t v : members.indices()) {
    raw.vertices.push_back(t.id(v));
    raw.labels.emplace_back(t.id(v), t.label(v));
  }
  for (const auto& [u, v] : t.edges())
    if (members.contains(u) && members.contains(v)) raw.edges.emplace_back(t.id(u), t.id(v));
  return validate_tree(raw);
}

}  // namespace ultratree

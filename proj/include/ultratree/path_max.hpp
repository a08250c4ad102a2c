#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "labeled_tree.hpp"
#include "rational.hpp"

namespace ultratree {

/// Binary-lifting index answering "maximum label on the path u..v" in
/// O(log n) per query after O(n log n) preprocessing.
///
/// Labels are compressed to dense ranks so the tables hold plain integers;
/// the tree is rooted at vertex 0. up_[k][v] is the 2^k-th ancestor of v and
/// best_[k][v] the largest rank among the 2^k vertices v, parent(v), ...
/// strictly below that ancestor.
class PathMaxIndex {
 public:
  explicit PathMaxIndex(LabeledTree tree) : tree_(std::move(tree)) {
    const std::size_t n = tree_.size();
    // Few distinct labels in practice, so a map keeps rational comparisons at O(n log k).
    std::map<Rational, std::uint32_t> ranks;
    for (const Rational& l : tree_.labels()) ranks.emplace(l, 0);
    for (auto& [value, r] : ranks) {
      r = static_cast<std::uint32_t>(values_.size());
      values_.push_back(value);
    }
    rank_.resize(n);
    for (std::size_t v = 0; v < n; ++v) rank_[v] = ranks.find(tree_.label(v))->second;

    std::size_t levels = 1;
    while ((std::size_t{1} << levels) < n) ++levels;
    up_.assign(levels, std::vector<std::uint32_t>(n, 0));
    best_.assign(levels, std::vector<std::uint32_t>(n, 0));
    depth_.assign(n, 0);

    std::vector<std::uint32_t> order;
    order.reserve(n);
    std::vector<bool> seen(n, false);
    order.push_back(0);
    seen[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const std::uint32_t v = order[head];
      for (std::size_t w : tree_.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = true;
        up_[0][w] = v;
        depth_[w] = depth_[v] + 1;
        order.push_back(static_cast<std::uint32_t>(w));
      }
    }
    for (std::size_t v = 0; v < n; ++v) best_[0][v] = rank_[v];
    for (std::size_t k = 1; k < levels; ++k)
      for (std::uint32_t v : order) {
        const std::uint32_t mid = up_[k - 1][v];
        up_[k][v] = up_[k - 1][mid];
        best_[k][v] = std::max(best_[k - 1][v], best_[k - 1][mid]);
      }
  }

  const LabeledTree& tree() const { return tree_; }

  /// Maximum label over the path from u to v, both endpoints included.
  const Rational& query(std::size_t u, std::size_t v) const { return values_[query_rank(u, v)]; }

  std::uint32_t query_rank(std::size_t u, std::size_t v) const {
    check(u);
    check(v);
    std::uint32_t acc = std::max(rank_[u], rank_[v]);
    if (depth_[u] < depth_[v]) std::swap(u, v);
    std::uint32_t diff = depth_[u] - depth_[v];
    for (std::size_t k = 0; diff != 0; ++k, diff >>= 1)
      if (diff & 1U) {
        acc = std::max(acc, best_[k][u]);
        u = up_[k][u];
      }
    if (u == v) return std::max(acc, rank_[u]);
    for (std::size_t k = up_.size(); k-- > 0;)
      if (up_[k][u] != up_[k][v]) {
        acc = std::max({acc, best_[k][u], best_[k][v]});
        u = up_[k][u];
        v = up_[k][v];
      }
    return std::max({acc, rank_[u], rank_[v], rank_[up_[0][u]]});
  }

 private:
  void check(std::size_t v) const {
    if (v >= tree_.size()) throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
  }

  LabeledTree tree_;
  std::vector<Rational> values_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::vector<std::uint32_t>> up_;
  std::vector<std::vector<std::uint32_t>> best_;
};

/// d_l(u, v): 0 when u == v, else the largest label on the path joining them.
inline Rational dl(const PathMaxIndex& idx, std::size_t u, std::size_t v) {
  if (u == v) {
    if (u >= idx.tree().size()) throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(u) + " out of range");
    return Rational(0);
  }
  return idx.query(u, v);
}

inline Rational dl(const PathMaxIndex& idx, std::string_view u, std::string_view v) {
  return dl(idx, idx.tree().index_of(u), idx.tree().index_of(v));
}

}  // namespace ultratree

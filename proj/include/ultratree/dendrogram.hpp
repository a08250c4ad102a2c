#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "fence.hpp"
#include "space.hpp"

namespace ultratree {

/// Leveled rooted tree: leaves sit at level 0, every internal node has at
/// least two children and a level strictly above each child's level.
/// The leaf-pair LCA levels form a finite ultrametric; with the level set
/// {1, ..., k} fully occupied the dendrogram names one weak-similarity class.
class Dendrogram {
 public:
  struct Node {
    int level = 0;
    std::vector<std::size_t> children;
  };

  static Dendrogram leaf() { return Dendrogram({Node{}}, 0); }

  static Dendrogram join(int level, const std::vector<Dendrogram>& children) {
    if (children.size() < 2) throw Error(ErrorKind::InvalidInput, "an internal node needs at least two children");
    Dendrogram out;
    Node top{level, {}};
    for (const Dendrogram& child : children) {
      if (child.height() >= level)
        throw Error(ErrorKind::InvalidInput, "child level must be below the parent level");
      const std::size_t offset = out.nodes_.size();
      for (Node node : child.nodes_) {
        for (auto& c : node.children) c += offset;
        out.nodes_.push_back(std::move(node));
      }
      top.children.push_back(offset + child.root_);
    }
    out.root_ = out.nodes_.size();
    out.nodes_.push_back(std::move(top));
    return out;
  }

  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t root() const { return root_; }
  int height() const { return nodes_[root_].level; }

  /// Leaves in depth-first order; this is the point order of the induced space.
  std::vector<std::size_t> leaves() const {
    std::vector<std::size_t> out;
    collect_leaves(root_, out);
    return out;
  }
  std::size_t leaf_count() const { return leaves().size(); }

  /// Whether the internal levels used are exactly {1, ..., height()}.
  bool levels_surjective() const {
    std::vector<bool> used(static_cast<std::size_t>(height()) + 1, false);
    for (const Node& node : nodes_)
      if (!node.children.empty()) used[static_cast<std::size_t>(node.level)] = true;
    return std::all_of(used.begin() + 1, used.end(), [](bool b) { return b; });
  }

  /// Order-independent encoding: "*" for a leaf, "h(c1,c2,...)" with sorted child encodings.
  std::string canonical() const { return encode(root_); }

  friend bool operator==(const Dendrogram& a, const Dendrogram& b) { return a.canonical() == b.canonical(); }

 private:
  Dendrogram() = default;
  Dendrogram(std::vector<Node> nodes, std::size_t root) : nodes_(std::move(nodes)), root_(root) {}

  void collect_leaves(std::size_t v, std::vector<std::size_t>& out) const {
    if (nodes_[v].children.empty()) {
      out.push_back(v);
      return;
    }
    for (std::size_t c : nodes_[v].children) collect_leaves(c, out);
  }

  std::string encode(std::size_t v) const {
    if (nodes_[v].children.empty()) return "*";
    std::vector<std::string> parts;
    for (std::size_t c : nodes_[v].children) parts.push_back(encode(c));
    std::sort(parts.begin(), parts.end());
    std::string out = std::to_string(nodes_[v].level) + "(";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
    return out + ")";
  }

  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

/// Points x1..xn in leaf order; d(x, y) is the level of their lowest common ancestor.
inline FiniteUltrametricSpace dendrogram_to_space(const Dendrogram& d) {
  const auto leaves = d.leaves();
  const std::size_t n = leaves.size();
  std::vector<std::size_t> position(d.nodes().size(), 0);
  for (std::size_t i = 0; i < n; ++i) position[leaves[i]] = i;

  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  auto below = [&](auto&& self, std::size_t v) -> std::vector<std::size_t> {
    const auto& node = d.nodes()[v];
    if (node.children.empty()) return {position[v]};
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t c : node.children) groups.push_back(self(self, c));
    for (std::size_t a = 0; a < groups.size(); ++a)
      for (std::size_t b = a + 1; b < groups.size(); ++b)
        for (std::size_t x : groups[a])
          for (std::size_t y : groups[b]) m[x][y] = m[y][x] = Rational(node.level);
    std::vector<std::size_t> all;
    for (const auto& g : groups) all.insert(all.end(), g.begin(), g.end());
    return all;
  };
  below(below, d.root());

  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i + 1));
  return validate_ultrametric(std::move(ids), m);
}

/// The class dendrogram of a space: distances replaced by their rank in D(X).
/// Two spaces are weakly similar iff their canonical dendrograms coincide.
inline Dendrogram canonical_dendrogram(const FiniteUltrametricSpace& s) {
  const DistanceSet dist = distance_set(s);
  auto build = [&](auto&& self, const std::vector<std::size_t>& pts) -> Dendrogram {
    if (pts.size() == 1) return Dendrogram::leaf();
    Rational top(0);
    for (std::size_t x : pts) top = std::max(top, s.distance(pts.front(), x));
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t x : pts) {
      auto it = std::find_if(blocks.begin(), blocks.end(),
                             [&](const auto& b) { return s.distance(b.front(), x) < top; });
      if (it == blocks.end())
        blocks.push_back({x});
      else
        it->push_back(x);
    }
    std::vector<Dendrogram> children;
    for (const auto& b : blocks) children.push_back(self(self, b));
    return Dendrogram::join(static_cast<int>(dist.rank_of(top)), children);
  };
  std::vector<std::size_t> all(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) all[i] = i;
  return build(build, all);
}

inline Dendrogram star_dendrogram(std::size_t n) {
  if (n == 1) return Dendrogram::leaf();
  return Dendrogram::join(1, std::vector<Dendrogram>(n, Dendrogram::leaf()));
}

/// 2^depth leaves; every node at height j above the leaves has level j.
inline Dendrogram perfect_binary_dendrogram(std::size_t depth) {
  Dendrogram d = Dendrogram::leaf();
  for (std::size_t j = 1; j <= depth; ++j) d = Dendrogram::join(static_cast<int>(j), {d, d});
  return d;
}

/// Caterpillar: a cherry at level 1, then one new leaf per level up to n - 1.
inline Dendrogram chain_dendrogram(std::size_t n) {
  Dendrogram d = Dendrogram::leaf();
  for (std::size_t j = 1; j < n; ++j) d = Dendrogram::join(static_cast<int>(j), {d, Dendrogram::leaf()});
  return d;
}

namespace detail {

/// Memoized pool of non-isomorphic leveled subtrees. Children of a node are
/// chosen as non-increasing sequences of pool ids, so every multiset of
/// children (and hence every subtree up to isomorphism) is produced once.
class ShapePool {
 public:
  struct Shape {
    int level;
    std::size_t leaves;
    std::vector<std::size_t> children;
    std::uint32_t level_mask;
  };

  ShapePool() { shapes_.push_back(Shape{0, 1, {}, 0}); }

  const Shape& shape(std::size_t id) const { return shapes_[id]; }

  /// Ids of all subtrees with m leaves and root level exactly h (m >= 2, h >= 1).
  const std::vector<std::size_t>& trees(std::size_t m, int h) {
    auto key = std::make_pair(m, h);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<std::size_t> ids;
    for_each_children(m, h, [&](const std::vector<std::size_t>& children) {
      ids.push_back(add(h, m, children));
    });
    return memo_.emplace(key, std::move(ids)).first->second;
  }

  /// Calls fn(children) for every child multiset of a level-h node with m leaves.
  template <typename Fn>
  void for_each_children(std::size_t m, int h, Fn&& fn) {
    std::vector<std::size_t> candidates{0};
    for (std::size_t k = 2; k < m; ++k)
      for (int level = 1; level < h; ++level) {
        const auto& ids = trees(k, level);
        candidates.insert(candidates.end(), ids.begin(), ids.end());
      }
    // Sorted by (leaves, id) so the positions that still fit are a prefix.
    std::sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
      return std::pair(shapes_[a].leaves, a) < std::pair(shapes_[b].leaves, b);
    });
    std::vector<std::size_t> fits(m + 1, 0);  // fits[r] = #candidates with leaves <= r
    for (std::size_t r = 0, pos = 0; r <= m; ++r) {
      while (pos < candidates.size() && shapes_[candidates[pos]].leaves <= r) ++pos;
      fits[r] = pos;
    }
    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::size_t limit, std::size_t remaining) -> void {
      if (remaining == 0) {
        if (chosen.size() >= 2) fn(chosen);
        return;
      }
      for (std::size_t pos = std::min(limit, fits[remaining]); pos-- > 0;) {
        const std::size_t id = candidates[pos];
        chosen.push_back(id);
        self(self, pos + 1, remaining - shapes_[id].leaves);
        chosen.pop_back();
      }
    };
    rec(rec, candidates.size(), m);
  }

  std::uint32_t mask_of(int h, const std::vector<std::size_t>& children) const {
    std::uint32_t mask = std::uint32_t{1} << h;
    for (std::size_t c : children) mask |= shapes_[c].level_mask;
    return mask;
  }

  Dendrogram build(int h, const std::vector<std::size_t>& children) const {
    std::vector<Dendrogram> parts;
    for (std::size_t c : children) parts.push_back(build(c));
    return Dendrogram::join(h, parts);
  }

  Dendrogram build(std::size_t id) const {
    const Shape& s = shapes_[id];
    if (s.children.empty()) return Dendrogram::leaf();
    return build(s.level, s.children);
  }

 private:
  std::size_t add(int h, std::size_t m, const std::vector<std::size_t>& children) {
    shapes_.push_back(Shape{h, m, children, mask_of(h, children)});
    return shapes_.size() - 1;
  }

  std::vector<Shape> shapes_;
  std::map<std::pair<std::size_t, int>, std::vector<std::size_t>> memo_;
};

}  // namespace detail

/// Streams every weak-similarity class of n-point ultrametric spaces exactly
/// once, ordered by height and then by generation order. Fenced at n <= 10.
template <typename Fn>
void for_each_dendrogram(std::size_t n, Fn&& fn) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be at least 1");
  require_within_fence(n, kEnumerationFence, "dendrogram enumeration");
  if (n == 1) {
    fn(Dendrogram::leaf());
    return;
  }
  detail::ShapePool pool;
  for (int k = 1; k < static_cast<int>(n); ++k) {
    const std::uint32_t full = ((std::uint32_t{1} << (k + 1)) - 1) & ~std::uint32_t{1};
    pool.for_each_children(n, k, [&](const std::vector<std::size_t>& children) {
      if (pool.mask_of(k, children) == full) fn(pool.build(k, children));
    });
  }
}

inline std::vector<Dendrogram> enumerate_dendrograms(std::size_t n) {
  std::vector<Dendrogram> out;
  for_each_dendrogram(n, [&](Dendrogram d) { out.push_back(std::move(d)); });
  return out;
}

}  // namespace ultratree

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"

namespace ultratree {

/// Subset of the points {0, ..., universe-1} of a space.
///
/// Stored as a 64-bit mask when the universe has at most 64 points and as a
/// sorted index list otherwise. Two sets over the same universe always share
/// a representation, so comparisons never mix them.
class PointSet {
 public:
  static constexpr std::size_t kMaskLimit = 64;

  explicit PointSet(std::size_t universe = 0) : universe_(universe) {
    if (universe_ > kMaskLimit) rep_ = std::vector<std::size_t>{};
  }

  PointSet(std::size_t universe, std::span<const std::size_t> members) : PointSet(universe) {
    for (std::size_t i : members) insert(i);
  }
  PointSet(std::size_t universe, std::initializer_list<std::size_t> members)
      : PointSet(universe, std::span<const std::size_t>(members.begin(), members.size())) {}

  static PointSet all(std::size_t universe) {
    PointSet s(universe);
    if (s.is_mask()) {
      s.rep_ = universe == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << universe) - 1);
    } else {
      auto& v = std::get<std::vector<std::size_t>>(s.rep_);
      v.resize(universe);
      for (std::size_t i = 0; i < universe; ++i) v[i] = i;
    }
    return s;
  }

  /// Mask-form constructor used by subset scans (universe <= 64 only).
  static PointSet from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > kMaskLimit) throw Error(ErrorKind::TooLarge, "mask sets hold at most 64 points");
    PointSet s(universe);
    s.rep_ = mask;
    return s;
  }

  std::size_t universe() const { return universe_; }

  void insert(std::size_t i) {
    check(i);
    if (is_mask()) {
      std::get<std::uint64_t>(rep_) |= std::uint64_t{1} << i;
    } else {
      auto& v = std::get<std::vector<std::size_t>>(rep_);
      auto it = std::lower_bound(v.begin(), v.end(), i);
      if (it == v.end() || *it != i) v.insert(it, i);
    }
  }

  bool contains(std::size_t i) const {
    if (i >= universe_) return false;
    if (is_mask()) return (std::get<std::uint64_t>(rep_) >> i) & 1U;
    const auto& v = std::get<std::vector<std::size_t>>(rep_);
    return std::binary_search(v.begin(), v.end(), i);
  }

  std::size_t size() const {
    if (is_mask()) return static_cast<std::size_t>(std::popcount(std::get<std::uint64_t>(rep_)));
    return std::get<std::vector<std::size_t>>(rep_).size();
  }

  bool empty() const { return size() == 0; }

  std::vector<std::size_t> indices() const {
    if (!is_mask()) return std::get<std::vector<std::size_t>>(rep_);
    std::vector<std::size_t> out;
    std::uint64_t m = std::get<std::uint64_t>(rep_);
    while (m != 0) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
      m &= m - 1;
    }
    return out;
  }

  bool is_subset_of(const PointSet& other) const {
    if (is_mask() && other.is_mask())
      return (std::get<std::uint64_t>(rep_) & ~std::get<std::uint64_t>(other.rep_)) == 0;
    for (std::size_t i : indices())
      if (!other.contains(i)) return false;
    return true;
  }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.universe_ == b.universe_ && a.rep_ == b.rep_;
  }

  /// Lexicographic order of the sorted member lists.
  friend std::strong_ordering operator<=>(const PointSet& a, const PointSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    const auto x = a.indices();
    const auto y = b.indices();
    return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
  }

 private:
  bool is_mask() const { return std::holds_alternative<std::uint64_t>(rep_); }

  void check(std::size_t i) const {
    if (i >= universe_) throw Error(ErrorKind::UnknownPoint, "point index " + std::to_string(i) + " out of range");
  }

  std::size_t universe_;
  std::variant<std::uint64_t, std::vector<std::size_t>> rep_{std::uint64_t{0}};
};

}  // namespace ultratree

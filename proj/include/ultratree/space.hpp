#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "point_set.hpp"
#include "rational.hpp"

namespace ultratree {

/// Strictly increasing list of distances that always contains 0.
/// Used for D(X), the pointwise sets D_p(X) and the center of distances C(X).
class DistanceSet {
 public:
  DistanceSet() : values_{Rational(0)} {}

  /// Sorts and deduplicates; throws InvalidInput if 0 is absent.
  explicit DistanceSet(std::vector<Rational> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    if (values_.empty() || !values_.front().is_zero())
      throw Error(ErrorKind::InvalidInput, "a distance set must contain 0");
  }
  DistanceSet(std::initializer_list<Rational> values) : DistanceSet(std::vector<Rational>(values)) {}

  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Rational& max() const { return values_.back(); }
  bool contains(const Rational& t) const { return std::binary_search(values_.begin(), values_.end(), t); }

  /// Position of t in the sorted list (t must be a member).
  std::size_t rank_of(const Rational& t) const {
    return static_cast<std::size_t>(std::lower_bound(values_.begin(), values_.end(), t) - values_.begin());
  }

  DistanceSet intersect(const DistanceSet& other) const {
    std::vector<Rational> out;
    std::set_intersection(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(),
                          std::back_inserter(out));
    return DistanceSet(std::move(out));
  }

  /// "{0, 1/2, 1}"
  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s += ", ";
      s += values_[i].str();
    }
    return s + "}";
  }

  friend bool operator==(const DistanceSet&, const DistanceSet&) = default;

 private:
  std::vector<Rational> values_;
};

class FiniteUltrametricSpace;
FiniteUltrametricSpace validate_ultrametric(std::vector<std::string> points,
                                            const std::vector<std::vector<Rational>>& matrix);

/// Validated finite ultrametric space: point identifiers plus an exact
/// symmetric distance matrix with zero diagonal, positive off-diagonal
/// entries and the strong triangle inequality on every triple.
/// Only obtainable through validate_ultrametric.
class FiniteUltrametricSpace {
 public:
  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point(std::size_t i) const { return points_.at(i); }

  std::size_t index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) throw Error(ErrorKind::UnknownPoint, "no point named \"" + std::string(id) + "\"");
    return it->second;
  }

  const Rational& distance(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }

  std::vector<std::vector<Rational>> matrix() const {
    std::vector<std::vector<Rational>> m(size(), std::vector<Rational>(size()));
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) m[i][j] = distance(i, j);
    return m;
  }

  std::string describe(const PointSet& s) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i : s.indices()) {
      if (!first) out += ", ";
      out += points_[i];
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const FiniteUltrametricSpace& a, const FiniteUltrametricSpace& b) {
    return a.points_ == b.points_ && a.dist_ == b.dist_;
  }

 private:
  friend FiniteUltrametricSpace validate_ultrametric(std::vector<std::string>,
                                                     const std::vector<std::vector<Rational>>&);
  FiniteUltrametricSpace() = default;

  std::vector<std::string> points_;
  std::vector<Rational> dist_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Checks every space invariant and reports the first offending pair or
/// triple by point identifier.
inline FiniteUltrametricSpace validate_ultrametric(std::vector<std::string> points,
                                                   const std::vector<std::vector<Rational>>& matrix) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "a space needs at least one point");
  if (matrix.size() != n) throw Error(ErrorKind::InvalidInput, "matrix row count does not match point count");
  for (const auto& row : matrix)
    if (row.size() != n) throw Error(ErrorKind::InvalidInput, "matrix is not square");

  FiniteUltrametricSpace s;
  for (std::size_t i = 0; i < n; ++i)
    if (!s.index_.emplace(points[i], i).second)
      throw Error(ErrorKind::InvalidInput, "duplicate point identifier \"" + points[i] + "\"");

  auto pair_name = [&](std::size_t i, std::size_t j) { return "(" + points[i] + ", " + points[j] + ")"; };
  for (std::size_t i = 0; i < n; ++i) {
    if (!matrix[i][i].is_zero())
      throw Error(ErrorKind::NonzeroDiagonal, "d" + pair_name(i, i) + " = " + matrix[i][i].str());
    for (std::size_t j = i + 1; j < n; ++j) {
      if (matrix[i][j] != matrix[j][i])
        throw Error(ErrorKind::NotSymmetric, "d" + pair_name(i, j) + " = " + matrix[i][j].str() + " but d" +
                                                 pair_name(j, i) + " = " + matrix[j][i].str());
      if (matrix[i][j].sign() <= 0)
        throw Error(ErrorKind::NonpositiveOffDiagonal, "d" + pair_name(i, j) + " = " + matrix[i][j].str());
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (matrix[x][y] > std::max(matrix[x][z], matrix[z][y]))
          throw Error(ErrorKind::StrongTriangleViolation,
                      "triple (" + points[x] + ", " + points[y] + ", " + points[z] + "): d" + pair_name(x, y) +
                          " = " + matrix[x][y].str() + " > max(" + matrix[x][z].str() + ", " +
                          matrix[z][y].str() + ")");
      }

  s.points_ = std::move(points);
  s.dist_.reserve(n * n);
  for (const auto& row : matrix) s.dist_.insert(s.dist_.end(), row.begin(), row.end());
  return s;
}

inline DistanceSet distance_set(const FiniteUltrametricSpace& s) {
  std::vector<Rational> values{Rational(0)};
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) values.push_back(s.distance(i, j));
  return DistanceSet(std::move(values));
}

/// D_p(X) = {d(p,x) : x in X}.
inline DistanceSet pointwise_distance_set(const FiniteUltrametricSpace& s, std::size_t p) {
  if (p >= s.size()) throw Error(ErrorKind::UnknownPoint, "point index " + std::to_string(p) + " out of range");
  std::vector<Rational> row;
  row.reserve(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) row.push_back(s.distance(p, x));
  return DistanceSet(std::move(row));
}

inline Rational diameter(const FiniteUltrametricSpace& s) {
  Rational best(0);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) best = std::max(best, s.distance(i, j));
  return best;
}

/// C(X) as the intersection of all pointwise distance sets.
inline DistanceSet center_of_distances(const FiniteUltrametricSpace& s) {
  DistanceSet acc = pointwise_distance_set(s, 0);
  for (std::size_t p = 1; p < s.size() && acc.size() > 1; ++p) acc = acc.intersect(pointwise_distance_set(s, p));
  return acc;
}

/// Subspace on the given points, in increasing index order.
inline FiniteUltrametricSpace restrict(const FiniteUltrametricSpace& s, const PointSet& subset) {
  if (subset.empty()) throw Error(ErrorKind::EmptySubset, "cannot restrict to an empty subset");
  const auto idx = subset.indices();
  std::vector<std::string> ids;
  std::vector<std::vector<Rational>> m(idx.size(), std::vector<Rational>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a) {
    ids.push_back(s.point(idx[a]));
    for (std::size_t b = 0; b < idx.size(); ++b) m[a][b] = s.distance(idx[a], idx[b]);
  }
  return validate_ultrametric(std::move(ids), m);
}

}  // namespace ultratree

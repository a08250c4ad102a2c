#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "error.hpp"
#include "point_set.hpp"
#include "rational.hpp"
#include "space.hpp"

namespace ultratree {

enum class BallKind { Open, Closed };

struct Ball {
  BallKind kind;
  std::size_t center;
  Rational radius;
  PointSet members;
};

/// Open ball {x : d(c,x) < r} (r > 0) or closed ball {x : d(c,x) <= r} (r >= 0).
inline Ball ball(const FiniteUltrametricSpace& s, std::size_t center, const Rational& radius, BallKind kind) {
  if (center >= s.size()) throw Error(ErrorKind::UnknownPoint, "point index " + std::to_string(center) + " out of range");
  if (kind == BallKind::Open ? radius.sign() <= 0 : radius.sign() < 0)
    throw Error(ErrorKind::NonpositiveRadius, "radius " + radius.str() + " is not allowed for this ball kind");
  PointSet members(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    const Rational& d = s.distance(center, x);
    if (kind == BallKind::Open ? d < radius : d <= radius) members.insert(x);
  }
  return Ball{kind, center, radius, std::move(members)};
}

/// Every distinct ball of the given kind, deduplicated by member set.
///
/// Membership of a ball around c only changes at the values of D_c(X), so
/// open radii are swept over D(X) \ {0} plus one sentinel above diam X and
/// closed radii over D(X). Each ball carries the least (center, radius)
/// among the swept certificates; results are ordered by that certificate.
inline std::vector<Ball> enumerate_balls(const FiniteUltrametricSpace& s, BallKind kind) {
  const DistanceSet dist = distance_set(s);
  std::vector<Rational> radii;
  for (const Rational& r : dist.values())
    if (kind == BallKind::Closed || !r.is_zero()) radii.push_back(r);
  if (kind == BallKind::Open) radii.push_back(dist.max() + Rational(1));

  std::map<PointSet, std::size_t> seen;
  std::vector<Ball> out;
  for (std::size_t c = 0; c < s.size(); ++c)
    for (const Rational& r : radii) {
      Ball b = ball(s, c, r, kind);
      if (seen.emplace(b.members, out.size()).second) out.push_back(std::move(b));
    }
  return out;
}

/// A set S = {x : d(x,c) = r} together with the center c and radius r that produce it.
struct SphereCertificate {
  std::size_t center;
  Rational radius;
  PointSet subset;
};

inline PointSet centered_sphere(const FiniteUltrametricSpace& s, std::size_t center, const Rational& radius) {
  PointSet out(s.size());
  out.insert(center);
  for (std::size_t x = 0; x < s.size(); ++x)
    if (s.distance(x, center) == radius) out.insert(x);
  return out;
}

/// Least certificate (c, r) with c in subset reproducing subset exactly.
///
/// For a fixed center with |subset| >= 2 the radius is forced to be the
/// distance from c to any other member, so one candidate per center suffices.
inline std::optional<SphereCertificate> is_centered_sphere(const FiniteUltrametricSpace& s, const PointSet& subset) {
  if (subset.empty()) throw Error(ErrorKind::EmptySubset, "the empty set is never a centered sphere");
  const auto members = subset.indices();
  if (members.size() == 1) return SphereCertificate{members.front(), Rational(0), subset};
  for (std::size_t c : members) {
    const std::size_t other = members.front() == c ? members[1] : members.front();
    const Rational& r = s.distance(c, other);
    bool ok = true;
    for (std::size_t x = 0; x < s.size() && ok; ++x) {
      if (x == c) continue;
      ok = (s.distance(c, x) == r) == subset.contains(x);
    }
    if (ok) return SphereCertificate{c, r, subset};
  }
  return std::nullopt;
}

/// All centered spheres, deduplicated by subset, ordered by least certificate.
inline std::vector<SphereCertificate> enumerate_centered_spheres(const FiniteUltrametricSpace& s) {
  std::map<PointSet, std::size_t> seen;
  std::vector<SphereCertificate> out;
  for (std::size_t c = 0; c < s.size(); ++c) {
    const DistanceSet row = pointwise_distance_set(s, c);
    for (const Rational& r : row.values()) {
      PointSet subset = centered_sphere(s, c, r);
      if (seen.emplace(subset, out.size()).second) out.push_back(SphereCertificate{c, r, std::move(subset)});
    }
  }
  return out;
}

inline constexpr std::size_t kSubsetScanLimit = 20;

struct SubsetVerdict {
  PointSet subset;
  std::optional<SphereCertificate> certificate;
};

/// Checks every non-empty subset, in increasing bitmask order. Fenced at 20 points.
inline std::vector<SubsetVerdict> scan_subsets_for_spheres(const FiniteUltrametricSpace& s) {
  if (s.size() > kSubsetScanLimit)
    throw Error(ErrorKind::TooLarge, "subset scans are limited to " + std::to_string(kSubsetScanLimit) + " points");
  const std::uint64_t count = std::uint64_t{1} << s.size();
  std::vector<SubsetVerdict> out;
  out.reserve(static_cast<std::size_t>(count - 1));
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    PointSet subset = PointSet::from_mask(s.size(), mask);
    auto cert = is_centered_sphere(s, subset);
    out.push_back(SubsetVerdict{std::move(subset), std::move(cert)});
  }
  return out;
}

/// Whether all 2^n - 1 non-empty subsets are centered spheres.
inline bool every_subset_is_centered_sphere(const FiniteUltrametricSpace& s) {
  if (s.size() >= 63) return false;  // at most n^2 spheres exist
  return enumerate_centered_spheres(s).size() == (std::uint64_t{1} << s.size()) - 1;
}

/// Greatest element of D_p(X) intersected with [0, r) (or [0, r] when inclusive).
inline std::optional<Rational> greatest_below(const DistanceSet& set, const Rational& r, bool inclusive) {
  std::optional<Rational> best;
  for (const Rational& t : set.values())
    if (inclusive ? t <= r : t < r) best = t;
  return best;
}

}  // namespace ultratree

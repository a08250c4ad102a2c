#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balls.hpp"
#include "dendrogram.hpp"
#include "diametrical.hpp"
#include "error.hpp"
#include "fence.hpp"
#include "is_ut.hpp"
#include "parallel.hpp"
#include "random_tree.hpp"
#include "similarity.hpp"
#include "space.hpp"
#include "tree_metric.hpp"

namespace ultratree {

enum class Verdict { Pass, Fail, Skipped, Consistent, Counterexample };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "SKIPPED";
    case Verdict::Consistent: return "CONSISTENT";
    case Verdict::Counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

/// Theorem checks fail; conjecture checks only report counterexamples.
enum class CheckKind { Theorem, Conjecture };

struct Witness {
  std::string description;
  std::optional<FiniteUltrametricSpace> space;
};

struct CheckResult {
  CheckResult() = default;
  CheckResult(std::string check_name, CheckKind check_kind) : name(std::move(check_name)), kind(check_kind) {}

  std::string name;
  CheckKind kind = CheckKind::Theorem;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::optional<Witness> witness;
  std::string note;

  Verdict verdict() const {
    if (failed > 0) return kind == CheckKind::Theorem ? Verdict::Fail : Verdict::Counterexample;
    if (passed > 0) return kind == CheckKind::Theorem ? Verdict::Pass : Verdict::Consistent;
    return Verdict::Skipped;
  }

  /// Folds another tally of the same check; the earliest witness wins.
  void absorb(const CheckResult& other) {
    passed += other.passed;
    failed += other.failed;
    skipped += other.skipped;
    if (!witness && other.witness) witness = other.witness;
  }
};

struct CampaignReport {
  std::string campaign;
  std::size_t n = 0;
  std::size_t classes_checked = 0;
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, std::string>> facts;

  bool all_passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.verdict() == Verdict::Fail; });
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  std::string fact(const std::string& key) const {
    for (const auto& [k, v] : facts)
      if (k == key) return v;
    return {};
  }

  /// Adds the check tallies of one instance report; instances merge in order.
  void absorb(const CampaignReport& instance) {
    ++classes_checked;
    for (const CheckResult& c : instance.checks) {
      auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& x) { return x.name == c.name; });
      if (it == checks.end())
        checks.push_back(c);
      else
        it->absorb(c);
    }
  }
};

/// The three-point space with d(x1,x3) = 1 and d(x1,x2) = d(x2,x3) = 2.
inline FiniteUltrametricSpace x3_space() {
  return validate_ultrametric({"x1", "x2", "x3"}, {{Rational(0), Rational(2), Rational(1)},
                                                   {Rational(2), Rational(0), Rational(2)},
                                                   {Rational(1), Rational(2), Rational(0)}});
}

inline std::size_t con3_bound(std::size_t n) { return static_cast<std::size_t>(std::bit_width(n)); }

/// The three statements tied together for UT-spaces: C(X) = {0, diam X},
/// a singleton part of G_X, and a spanning star of G_X.
struct DiametricalStatements {
  bool dichotomy;
  bool singleton_part;
  bool star;
};

inline DiametricalStatements diametrical_statements(const FiniteUltrametricSpace& s) {
  const DiametricalGraph g(s);
  return {center_of_distances(s) == DistanceSet{Rational(0), diameter(s)}, multipartite_parts(g).has_singleton_part(),
          spanning_star(g).has_value()};
}

/// Splits a partition with k >= 2 blocks into two unions of blocks whose
/// smaller side is at least as large as the smallest input block: the
/// smallest block starts alone, then blocks move across (smallest first)
/// while that raises the smaller side.
template <typename T>
std::pair<std::vector<T>, std::vector<T>> merge_parts(const std::vector<std::vector<T>>& parts) {
  if (parts.size() < 2) throw Error(ErrorKind::FewerThanTwoBlocks, "need at least two blocks");
  for (const auto& p : parts)
    if (p.empty()) throw Error(ErrorKind::InvalidInput, "blocks must be non-empty");

  std::vector<std::size_t> order(parts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return parts[a].size() < parts[b].size(); });

  std::vector<bool> left(parts.size(), false);
  left[order.front()] = true;
  std::size_t a = parts[order.front()].size(), b = 0;
  for (std::size_t i = 1; i < order.size(); ++i) b += parts[order[i]].size();
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i : order) {
      const std::size_t k = parts[i].size();
      if (left[i] || k >= b || std::min(a + k, b - k) <= std::min(a, b)) continue;
      left[i] = true;
      a += k;
      b -= k;
      moved = true;
      break;
    }
  }
  std::pair<std::vector<T>, std::vector<T>> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto& side = left[i] ? out.first : out.second;
    side.insert(side.end(), parts[i].begin(), parts[i].end());
  }
  return out;
}

namespace detail {

inline CheckResult tally(std::string name, CheckKind kind, bool ok, const FiniteUltrametricSpace& s, std::string why) {
  CheckResult r{std::move(name), kind};
  if (ok) {
    r.passed = 1;
  } else {
    r.failed = 1;
    r.witness = Witness{std::move(why), s};
  }
  return r;
}

inline CheckResult skip(std::string name, CheckKind kind, std::string note) {
  CheckResult r{std::move(name), kind};
  r.skipped = 1;
  r.note = std::move(note);
  return r;
}

/// C(X) by its definition: t such that every point has some point at distance t.
inline DistanceSet center_by_definition(const FiniteUltrametricSpace& s) {
  std::vector<Rational> out;
  const DistanceSet all = distance_set(s);
  for (const Rational& t : all.values()) {
    bool everywhere = true;
    for (std::size_t p = 0; p < s.size() && everywhere; ++p) {
      bool hit = false;
      for (std::size_t x = 0; x < s.size() && !hit; ++x) hit = s.distance(p, x) == t;
      everywhere = hit;
    }
    if (everywhere) out.push_back(t);
  }
  return DistanceSet(std::move(out));
}

inline std::string parts_string(const FiniteUltrametricSpace& s, const MultipartiteDecomposition& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.parts.size(); ++i) {
    if (i) out += ", ";
    out += s.describe(PointSet(s.size(), m.parts[i]));
  }
  return out + "}";
}

inline std::vector<PointSet> member_sets(const std::vector<Ball>& balls) {
  std::vector<PointSet> out;
  for (const Ball& b : balls) out.push_back(b.members);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<PointSet> member_sets(const std::vector<SphereCertificate>& spheres) {
  std::vector<PointSet> out;
  for (const auto& c : spheres) out.push_back(c.subset);
  std::sort(out.begin(), out.end());
  return out;
}

/// First ball of the given kind that is not a centered sphere, if any.
inline std::optional<Ball> ball_not_sphere(const FiniteUltrametricSpace& s, BallKind kind) {
  for (Ball& b : enumerate_balls(s, kind))
    if (!is_centered_sphere(s, b.members)) return std::move(b);
  return std::nullopt;
}

inline std::string ball_string(const FiniteUltrametricSpace& s, const Ball& b) {
  return std::string(b.kind == BallKind::Open ? "open" : "closed") + " ball " + s.describe(b.members) + " (center " +
         s.point(b.center) + ", radius " + b.radius.str() + ")";
}

}  // namespace detail

/// Runs every applicable invariant on one space. UT-only checks are skipped
/// unless is_ut_hint says the space is tree-generated.
inline CampaignReport check_theorem_suite(const FiniteUltrametricSpace& s, bool is_ut_hint) {
  using detail::skip;
  using detail::tally;
  constexpr auto T = CheckKind::Theorem;
  constexpr auto C = CheckKind::Conjecture;

  CampaignReport r{"suite", s.size(), 1, {}, {}};
  const std::size_t n = s.size();
  const DistanceSet center = center_of_distances(s);
  const Rational diam = diameter(s);

  r.checks.push_back(tally("center contains 0", T, center.contains(Rational(0)), s, "0 missing from C(X)"));
  r.checks.push_back(tally("center contains diameter", T, center.contains(diam), s, "diameter missing from C(X)"));
  r.checks.push_back(tally("center equals intersection of pointwise sets", T, detail::center_by_definition(s) == center,
                           s, "intersection " + center.str() + " differs from the definition"));

  {
    std::optional<std::string> bad;
    for (std::size_t p = 0; p < n && !bad; ++p)
      if (pointwise_distance_set(s, p).max() != diam) bad = "row of " + s.point(p) + " has a different maximum";
    r.checks.push_back(tally("diameter equals every row maximum", T, !bad, s, bad.value_or("")));
  }

  const auto open_balls = enumerate_balls(s, BallKind::Open);
  {
    std::optional<std::string> bad;
    for (const Ball& b : open_balls)
      for (std::size_t a : b.members.indices())
        if (!bad && !(ball(s, a, b.radius, BallKind::Open).members == b.members))
          bad = detail::ball_string(s, b) + " changes when centered at " + s.point(a);
    r.checks.push_back(tally("every ball member is a center", T, !bad, s, bad.value_or("")));
  }
  {
    std::optional<std::string> bad;
    for (const Ball& b : open_balls) {
      const bool inside = is_centered_sphere(s, b.members).has_value();
      const bool relative = is_centered_sphere(restrict(s, b.members), PointSet::all(b.members.size())).has_value();
      if (!bad && inside != relative) bad = detail::ball_string(s, b) + " disagrees with its own subspace";
    }
    r.checks.push_back(tally("ball is a sphere iff it is one in its subspace", T, !bad, s, bad.value_or("")));
  }
  {
    bool ok = true;
    const DistanceSet all = distance_set(s);
    for (std::size_t p = 0; p < n; ++p) {
      const DistanceSet row = pointwise_distance_set(s, p);
      for (const Rational& r0 : all.values())
        for (const Rational& radius : {r0, r0 + Rational(1, 2), diam + Rational(1)})
          if (radius.sign() > 0) ok = ok && greatest_below(row, radius, false).has_value();
    }
    r.checks.push_back(tally("greatest distance below every radius", T, ok, s, "no greatest element below a radius"));
  }

  const auto spheres = enumerate_centered_spheres(s);
  if (n >= 2) {
    const auto balls_sets = detail::member_sets(open_balls);
    const auto sphere_sets = detail::member_sets(spheres);
    const bool equidistant = is_equidistant(s).has_value();
    const bool same = balls_sets == sphere_sets;
    const bool contained = std::all_of(sphere_sets.begin(), sphere_sets.end(), [&](const PointSet& x) {
      return std::binary_search(balls_sets.begin(), balls_sets.end(), x);
    });
    r.checks.push_back(tally("equidistant iff spheres equal balls iff spheres are balls", T,
                             equidistant == same && same == contained, s,
                             std::string("equidistant=") + (equidistant ? "yes" : "no") + ", equal=" + (same ? "yes" : "no") +
                                 ", contained=" + (contained ? "yes" : "no")));

    const DiametricalGraph g(s);
    std::optional<MultipartiteDecomposition> parts;
    try {
      parts = multipartite_parts(g);
    } catch (const Error& e) {
      r.checks.push_back(tally("diametrical graph is complete multipartite", T, false, s, e.what()));
    }
    if (parts) {
      r.checks.push_back(tally("diametrical graph is complete multipartite", T, true, s, ""));
      const auto star = spanning_star(g);
      const bool dichotomy = center == DistanceSet{Rational(0), diam};
      const bool singleton = parts->has_singleton_part();
      r.checks.push_back(tally("spanning star iff singleton part", T, star.has_value() == singleton, s,
                               "star and singleton part disagree"));
      r.checks.push_back(tally("spanning star implies C = {0, diam}", T, !star || dichotomy, s,
                               "star present but C(X) = " + center.str()));
      auto three = tally("C = {0, diam} iff singleton part iff spanning star", C,
                         dichotomy == singleton && singleton == star.has_value(), s,
                         "C(X) = " + center.str() + " but the diametrical graph " +
                             (star ? "has" : "has no") + " spanning star");
      three.note = "holds on UT-spaces; not implied for general finite ultrametric spaces";
      r.checks.push_back(std::move(three));
      r.facts.emplace_back("star_center", star ? s.point(star->center) : "none");
      r.facts.emplace_back("parts", detail::parts_string(s, *parts));
    }
  } else {
    for (const char* name : {"equidistant iff spheres equal balls iff spheres are balls",
                             "diametrical graph is complete multipartite", "spanning star iff singleton part",
                             "spanning star implies C = {0, diam}"})
      r.checks.push_back(skip(name, T, "needs at least two points"));
    r.checks.push_back(skip("C = {0, diam} iff singleton part iff spanning star", C, "needs at least two points"));
  }

  if (is_ut_hint) {
    bool interior = false;
    for (const Rational& t : center.values()) interior = interior || (t.sign() > 0 && t < diam);
    r.checks.push_back(tally("UT: C = {0, diam} with no interior value", T,
                             !interior && center.contains(diam) && center.size() == (n >= 2 ? 2u : 1u), s,
                             "C(X) = " + center.str()));
    bool whole = false;
    for (std::size_t c = 0; c < n && !whole; ++c) whole = centered_sphere(s, c, diam) == PointSet::all(n);
    r.checks.push_back(tally("UT: X is a centered sphere of radius diam", T, whole, s, "no center reaches every point at diam"));
    if (n >= 2) {
      const auto st = diametrical_statements(s);
      r.checks.push_back(tally("UT: dichotomy, singleton part and spanning star all hold", T,
                               st.dichotomy && st.singleton_part && st.star, s, "one of the three statements fails"));
    } else {
      r.checks.push_back(skip("UT: dichotomy, singleton part and spanning star all hold", T, "needs at least two points"));
    }
    const auto open_bad = detail::ball_not_sphere(s, BallKind::Open);
    r.checks.push_back(tally("UT: every open ball is a centered sphere", T, !open_bad, s,
                             open_bad ? detail::ball_string(s, *open_bad) + " is not a centered sphere" : ""));
    const auto closed_bad = detail::ball_not_sphere(s, BallKind::Closed);
    r.checks.push_back(tally("UT: every closed ball is a centered sphere", C, !closed_bad, s,
                             closed_bad ? detail::ball_string(s, *closed_bad) + " is not a centered sphere" : ""));
  } else {
    for (const char* name : {"UT: C = {0, diam} with no interior value", "UT: X is a centered sphere of radius diam",
                             "UT: dichotomy, singleton part and spanning star all hold",
                             "UT: every open ball is a centered sphere"})
      r.checks.push_back(skip(name, T, "not known to be a UT-space"));
    r.checks.push_back(skip("UT: every closed ball is a centered sphere", C, "not known to be a UT-space"));
  }

  r.facts.insert(r.facts.begin(), {"center", center.str()});
  r.facts.insert(r.facts.begin() + 1, {"diameter", diam.str()});
  return r;
}

namespace detail {

/// Streams classes in enumeration order, handing fixed-size batches to
/// parallel_map so memory stays bounded and the merge order is fixed.
template <typename Fn, typename Sink>
void for_each_class_batched(std::size_t n, std::size_t jobs, Fn&& analyse, Sink&& sink) {
  constexpr std::size_t kBatch = 2048;
  std::vector<Dendrogram> batch;
  auto flush = [&] {
    auto results = parallel_map(batch, jobs, analyse);
    for (std::size_t i = 0; i < batch.size(); ++i) sink(batch[i], results[i]);
    batch.clear();
  };
  for_each_dendrogram(n, [&](Dendrogram d) {
    batch.push_back(std::move(d));
    if (batch.size() == kBatch) flush();
  });
  if (!batch.empty()) flush();
}

}  // namespace detail

/// Largest |C(X)| over all classes of n-point spaces against 1 + floor(log2 n).
inline CampaignReport check_con3(std::size_t n, std::size_t jobs = 1) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be at least 1");
  require_within_fence(n, kEnumerationFence, "center-size campaign");
  const std::size_t bound = con3_bound(n);

  CampaignReport r{"con3", n, 0, {}, {}};
  CheckResult upper{"center size at most 1 + floor(log2 n)", CheckKind::Conjecture};
  std::size_t best = 0;
  std::optional<Dendrogram> best_class;
  detail::for_each_class_batched(
      n, jobs, [](const Dendrogram& d) { return center_of_distances(dendrogram_to_space(d)).size(); },
      [&](const Dendrogram& d, std::size_t size) {
        ++r.classes_checked;
        if (size <= bound) {
          ++upper.passed;
        } else {
          ++upper.failed;
          if (!upper.witness) upper.witness = Witness{"class " + d.canonical() + " has |C| = " + std::to_string(size),
                                                      dendrogram_to_space(d)};
        }
        if (!best_class || size > best) {
          best = size;
          best_class = d;
        }
      });

  const FiniteUltrametricSpace extremal = dendrogram_to_space(*best_class);
  CheckResult attained{"bound attained", CheckKind::Theorem};
  (best == bound ? attained.passed : attained.failed) = 1;
  attained.witness = Witness{"class " + best_class->canonical() + " has |C| = " + std::to_string(best), extremal};
  r.checks.push_back(std::move(upper));
  r.checks.push_back(std::move(attained));
  if (std::has_single_bit(n)) {
    CheckResult binary{"perfect binary class is the extremal witness", CheckKind::Theorem};
    const Dendrogram perfect = perfect_binary_dendrogram(static_cast<std::size_t>(std::bit_width(n) - 1));
    (*best_class == perfect ? binary.passed : binary.failed) = 1;
    r.checks.push_back(std::move(binary));
  }
  r.facts = {{"bound", std::to_string(bound)},
             {"max_center_size", std::to_string(best)},
             {"witness_class", best_class->canonical()},
             {"witness_center", center_of_distances(extremal).str()}};
  return r;
}

/// Classes in which every non-empty subset is a centered sphere, compared with X3.
inline CampaignReport check_hol(std::size_t n, std::size_t jobs = 1) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "the subset campaign needs n >= 3");
  require_within_fence(n, kHolFence, "subset campaign");
  const FiniteUltrametricSpace x3 = x3_space();

  CampaignReport r{"hol", n, 0, {}, {}};
  CheckResult only{"all-subset classes are weakly similar to X3", CheckKind::Conjecture};
  std::vector<std::string> satisfying;
  detail::for_each_class_batched(
      n, jobs, [](const Dendrogram& d) { return every_subset_is_centered_sphere(dendrogram_to_space(d)); },
      [&](const Dendrogram& d, bool all_spheres) {
        ++r.classes_checked;
        if (!all_spheres) {
          ++only.passed;
          return;
        }
        const FiniteUltrametricSpace s = dendrogram_to_space(d);
        const bool similar = weak_similarity(s, x3).has_value();
        satisfying.push_back(d.canonical() + (similar ? " (weakly similar to X3)" : " (not weakly similar to X3)"));
        if (similar) {
          ++only.passed;
        } else {
          ++only.failed;
          if (!only.witness) only.witness = Witness{"class " + d.canonical() + " has every subset a centered sphere", s};
        }
      });
  r.checks.push_back(std::move(only));
  r.facts.emplace_back("satisfying_count", std::to_string(satisfying.size()));
  for (std::size_t i = 0; i < satisfying.size(); ++i) r.facts.emplace_back("satisfying_" + std::to_string(i + 1), satisfying[i]);
  return r;
}

namespace detail {

inline CampaignReport ball_checks(const FiniteUltrametricSpace& s) {
  CampaignReport one{"closed-balls", s.size(), 1, {}, {}};
  const auto open_bad = ball_not_sphere(s, BallKind::Open);
  one.checks.push_back(tally("every open ball is a centered sphere", CheckKind::Theorem, !open_bad, s,
                             open_bad ? ball_string(s, *open_bad) + " is not a centered sphere" : ""));
  const auto closed_bad = ball_not_sphere(s, BallKind::Closed);
  one.checks.push_back(tally("every closed ball is a centered sphere", CheckKind::Conjecture, !closed_bad, s,
                             closed_bad ? ball_string(s, *closed_bad) + " is not a centered sphere" : ""));
  return one;
}

}  // namespace detail

/// Ball checks over the UT classes among all n-point classes (UT membership
/// decided by is_ut, so n is fenced at the is_ut limit).
inline CampaignReport check_closed_balls(std::size_t n, std::size_t jobs = 1) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be at least 1");
  require_within_fence(n, kIsUtFence, "ball campaign over enumerated classes");
  CampaignReport r{"closed-balls", n, 0, {}, {}};
  std::size_t ut = 0;
  detail::for_each_class_batched(
      n, jobs,
      [](const Dendrogram& d) -> std::optional<CampaignReport> {
        const FiniteUltrametricSpace s = dendrogram_to_space(d);
        if (!is_ut(s)) return std::nullopt;
        return detail::ball_checks(s);
      },
      [&](const Dendrogram&, const std::optional<CampaignReport>& one) {
        if (one) {
          ++ut;
          r.absorb(*one);
        } else {
          ++r.classes_checked;
        }
      });
  r.facts = {{"source", "enumerated classes"}, {"ut_classes", std::to_string(ut)},
             {"non_ut_classes", std::to_string(r.classes_checked - ut)}};
  return r;
}

/// Deterministic corpus of random non-degenerate labeled trees: tree i has
/// min_n + (i mod (max_n - min_n + 1)) vertices and seed base_seed + i.
struct RandomCorpus {
  std::size_t count = 1000;
  std::size_t min_n = 2;
  std::size_t max_n = 12;
  std::vector<Rational> pool{Rational(0), Rational(1), Rational(2), Rational(3), Rational(7, 2)};
  std::uint64_t base_seed = 1;

  LabeledTree tree(std::size_t i) const {
    if (min_n < 1 || max_n < min_n) throw Error(ErrorKind::InvalidInput, "corpus size range is empty");
    return random_labeled_tree(min_n + i % (max_n - min_n + 1), pool, base_seed + i);
  }
};

/// Ball checks over a random tree corpus; every instance is UT by construction.
inline CampaignReport check_closed_balls(const RandomCorpus& corpus, std::size_t jobs = 1) {
  std::vector<std::size_t> ids(corpus.count);
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  const auto results =
      parallel_map(ids, jobs, [&](std::size_t i) { return detail::ball_checks(distance_matrix(corpus.tree(i))); });
  CampaignReport r{"closed-balls", corpus.max_n, 0, {}, {}};
  for (const auto& one : results) r.absorb(one);
  r.facts = {{"source", "random labeled trees"},
             {"trees", std::to_string(corpus.count)},
             {"size_range", std::to_string(corpus.min_n) + ".." + std::to_string(corpus.max_n)},
             {"base_seed", std::to_string(corpus.base_seed)}};
  return r;
}

/// Theorem suite over every n-point class. UT status is decided by is_ut up
/// to its limit; beyond that the UT-only checks are skipped.
inline CampaignReport check_suite_enumerated(std::size_t n, std::size_t jobs = 1) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be at least 1");
  require_within_fence(n, kEnumerationFence, "theorem suite campaign");
  const bool decide_ut = n <= capacity_fence(kIsUtFence);
  CampaignReport r{"suite", n, 0, {}, {}};
  std::size_t ut = 0;
  detail::for_each_class_batched(
      n, jobs,
      [&](const Dendrogram& d) {
        const FiniteUltrametricSpace s = dendrogram_to_space(d);
        return check_theorem_suite(s, decide_ut && is_ut(s).has_value());
      },
      [&](const Dendrogram&, const CampaignReport& one) {
        if (one.find("UT: every open ball is a centered sphere")->skipped == 0) ++ut;
        r.absorb(one);
      });
  r.facts = {{"ut_decided", decide_ut ? "yes" : "no"}, {"ut_classes", decide_ut ? std::to_string(ut) : "unknown"}};
  return r;
}

}  // namespace ultratree

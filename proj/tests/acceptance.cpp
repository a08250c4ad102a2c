// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "oracles.hpp"

using namespace ultratree;
using oracle::q;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::size_t jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && secs > budget_s) {
    o.ok = false;
    o.detail = "over time budget";
  }
  if (!o.ok) ++failures;
  std::printf("[%s] %2d %s (%.3f s, budget %g s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs, budget_s,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

std::string fact_or(const CampaignReport& r, const std::string& key) { return r.fact(key); }

}  // namespace

int main() {
  criterion(1, "labeled path x1-x2-x3-x4 yields the expected distance matrix", 1e-3, [] {
    Outcome o;
    const FiniteUltrametricSpace s = distance_matrix(oracle::path_tree());
    o.require(s == oracle::path_space(), "matrix differs from the hand-written one");
    return o;
  });

  criterion(2, "diametrical graph of the labeled path: 5 edges, parts {x1},{x2},{x3,x4}, star at x1", 1e-3, [] {
    Outcome o;
    const FiniteUltrametricSpace s = oracle::path_space();
    const DiametricalGraph g(s);
    o.require(g.edges().size() == 5, "edge count " + std::to_string(g.edges().size()));
    const auto parts = multipartite_parts(g);
    const std::vector<std::vector<std::size_t>> want{{0}, {1}, {2, 3}};
    o.require(parts.parts == want, "parts " + detail::parts_string(s, parts));
    const auto star = spanning_star(g);
    o.require(star && star->center == 0, "no star at x1");
    return o;
  });

  criterion(3, "1000 random labeled trees (2..12 vertices): C = {0, diam}, nothing in between", 30, [] {
    Outcome o;
    const RandomCorpus corpus;
    for (std::size_t i = 0; i < corpus.count && o.ok; ++i) {
      const FiniteUltrametricSpace s = distance_matrix(corpus.tree(i));
      const std::vector<Rational> want{Rational(0), diameter(s)};
      o.require(oracle::center_by_definition(s) == want, "tree " + std::to_string(i) + " by definition");
      o.require(center_of_distances(s).values() == want, "tree " + std::to_string(i) + " via library");
    }
    return o;
  });

  criterion(4, "{x1, x2} of the labeled path is not a sphere; all 7 subsets of X3 are", 1e-3, [] {
    Outcome o;
    const FiniteUltrametricSpace s = oracle::path_space();
    PointSet pair(4);
    pair.insert(0);
    pair.insert(1);
    o.require(!is_centered_sphere(s, pair), "{x1, x2} reported as a sphere");
    const auto verdicts = scan_subsets_for_spheres(x3_space());
    o.require(verdicts.size() == 7, "subset count");
    for (const auto& v : verdicts) o.require(v.certificate.has_value(), "a subset of X3 is not a sphere");
    return o;
  });

  criterion(5, "open and closed balls of the random corpus are centered spheres", 60, [] {
    Outcome o;
    const CampaignReport r = check_closed_balls(RandomCorpus{}, jobs());
    const CheckResult* open = r.find("every open ball is a centered sphere");
    const CheckResult* closed = r.find("every closed ball is a centered sphere");
    o.require(open && open->verdict() == Verdict::Pass, "open balls");
    o.require(closed && closed->verdict() == Verdict::Consistent, "closed balls");
    if (o.ok)
      o.detail = std::to_string(r.classes_checked) + " trees, closed-ball conjecture " + to_string(closed->verdict());
    return o;
  });

  criterion(6, "classes with 2 <= n <= 6: equidistant iff spheres equal open balls", 60, [] {
    Outcome o;
    std::size_t count = 0;
    for (std::size_t n = 2; n <= 6; ++n)
      for_each_dendrogram(n, [&](const Dendrogram& d) {
        ++count;
        const FiniteUltrametricSpace s = dendrogram_to_space(d);
        const bool equidistant = is_equidistant(s).has_value();
        const bool same = oracle::spheres_brute(s) == oracle::open_balls_brute(s);
        o.require(equidistant == same, "class " + d.canonical());
        std::vector<PointSet> spheres, balls;
        for (const auto& c : enumerate_centered_spheres(s)) spheres.push_back(c.subset);
        for (const auto& b : enumerate_balls(s, BallKind::Open)) balls.push_back(b.members);
        std::sort(spheres.begin(), spheres.end());
        std::sort(balls.begin(), balls.end());
        o.require((spheres == balls) == equidistant, "library disagrees on class " + d.canonical());
      });
    if (o.ok) o.detail = std::to_string(count) + " classes";
    return o;
  });

  criterion(7, "center size bound 1 + floor(log2 n) for n = 1..8, attained, binary witness at 2, 4, 8", 600, [] {
    Outcome o;
    std::ostringstream seen;
    for (std::size_t n = 1; n <= 8; ++n) {
      const CampaignReport r = check_con3(n, jobs());
      o.require(r.all_passed(), "campaign failed at n = " + std::to_string(n));
      const auto* bound = r.find("center size at most 1 + floor(log2 n)");
      o.require(bound && bound->verdict() == Verdict::Consistent, "bound at n = " + std::to_string(n));
      o.require(fact_or(r, "max_center_size") == std::to_string(con3_bound(n)), "max below bound at n = " + std::to_string(n));
      if (n == 2 || n == 4 || n == 8) {
        const auto* w = r.find("perfect binary class is the extremal witness");
        o.require(w && w->verdict() == Verdict::Pass, "binary witness at n = " + std::to_string(n));
      }
      seen << (n > 1 ? " " : "") << fact_or(r, "max_center_size");
    }
    if (o.ok) o.detail = "max |C| = " + seen.str();
    return o;
  });

  criterion(8, "all-subset-sphere classes: exactly one at n = 3 (X3), none at n = 4, 5", 300, [] {
    Outcome o;
    const CampaignReport three = check_hol(3, jobs());
    o.require(three.all_passed(), "n = 3 campaign");
    o.require(fact_or(three, "satisfying_count") == "1", "n = 3 count " + fact_or(three, "satisfying_count"));
    o.require(weak_similarity(dendrogram_to_space(canonical_dendrogram(x3_space())), x3_space()).has_value(),
              "X3 round trip");
    for (std::size_t n : {4, 5}) {
      const CampaignReport r = check_hol(n, jobs());
      o.require(r.all_passed(), "campaign at n = " + std::to_string(n));
      o.require(fact_or(r, "satisfying_count") == "0", "count at n = " + std::to_string(n));
    }
    return o;
  });

  criterion(9, "brute-force class counts 2 (n = 3) and 6 (n = 4) match the enumeration", 10, [] {
    Outcome o;
    for (auto [n, h, want] : {std::tuple{3, 2, 2}, std::tuple{4, 3, 6}}) {
      const auto brute = oracle::brute_force_classes(n, h);
      const auto listed = enumerate_dendrograms(n);
      o.require(static_cast<int>(brute.size()) == want, "brute count at n = " + std::to_string(n));
      o.require(static_cast<int>(listed.size()) == want, "enumerated count at n = " + std::to_string(n));
      std::set<std::string> names;
      for (const auto& d : listed) names.insert(d.canonical());
      for (const auto& m : brute) {
        std::vector<std::string> ids;
        std::vector<std::vector<std::int64_t>> wide;
        for (std::size_t i = 0; i < m.size(); ++i) {
          ids.push_back("x" + std::to_string(i + 1));
          wide.emplace_back(m[i].begin(), m[i].end());
        }
        o.require(names.count(canonical_dendrogram(oracle::space(ids, wide)).canonical()) == 1,
                  "brute class missing from the enumeration");
      }
    }
    return o;
  });

  criterion(10, "p-adic: strong triangle and multiplicativity on 1e5 triples per p; 2-adic {0,1,2,3}", 30, [] {
    Outcome o;
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::int64_t> num(-100000, 100000), den(1, 100000);
    auto draw = [&] { return Rational(BigInt(num(rng)), BigInt(den(rng))); };
    for (std::uint64_t p : {2, 3, 5})
      for (int i = 0; i < 100000 && o.ok; ++i) {
        const Rational x = draw(), y = draw(), z = draw();
        o.require(dp(x, z, p) <= std::max(dp(x, y, p), dp(y, z, p)), "strong triangle, p = " + std::to_string(p));
        o.require(valuation(x * y, p).value() == valuation(x, p).value() * valuation(y, p).value(),
                  "multiplicativity, p = " + std::to_string(p));
      }
    const FiniteUltrametricSpace s = sample_space({q(0), q(1), q(2), q(3)}, PAdicMetric{2});
    o.require(center_of_distances(s).size() == 3, "|C| = " + std::to_string(center_of_distances(s).size()));
    o.require(!is_ut(s).has_value(), "2-adic sample reported as tree-generated");
    return o;
  });

  criterion(11, "path-max index on 1e5 vertices answers 1e5 queries, 100 DFS spot checks", 5, [] {
    Outcome o;
    const std::size_t n = 100000;
    const PathMaxIndex idx(random_labeled_tree(n, {q(0), q(1), q(2), q(3), q(7, 2)}, 11));
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uint64_t checksum = 0;
    for (int i = 0; i < 100000; ++i) checksum += idx.query_rank(pick(rng), pick(rng));
    const oracle::DfsPathMax dfs(idx.tree());
    for (int i = 0; i < 100; ++i) {
      const std::size_t u = pick(rng), v = pick(rng);
      o.require(idx.query(u, v) == dfs(u, v), "spot check " + std::to_string(i));
    }
    if (o.ok) o.detail = "rank checksum " + std::to_string(checksum);
    return o;
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}

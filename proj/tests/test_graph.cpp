#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace ultratree;
using oracle::q;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

std::vector<std::vector<std::string>> named_parts(const FiniteUltrametricSpace& s) {
  std::vector<std::vector<std::string>> out;
  for (const auto& part : multipartite_parts(DiametricalGraph(s)).parts) {
    out.emplace_back();
    for (std::size_t v : part) out.back().push_back(s.point(v));
  }
  return out;
}

std::vector<FiniteUltrametricSpace> classes(std::size_t n) {
  std::vector<FiniteUltrametricSpace> out;
  for (const Dendrogram& d : enumerate_dendrograms(n)) out.push_back(dendrogram_to_space(d));
  return out;
}

}  // namespace

TEST(Diametrical, LabeledPathSpace) {
  const auto s = oracle::path_space();
  const DiametricalGraph g(s);
  EXPECT_EQ(g.edges().size(), 5u);
  EXPECT_FALSE(g.adjacent(s.index_of("x3"), s.index_of("x4")));
  EXPECT_EQ(named_parts(s), (std::vector<std::vector<std::string>>{{"x1"}, {"x2"}, {"x3", "x4"}}));
  const auto star = spanning_star(g);
  ASSERT_TRUE(star.has_value());
  EXPECT_EQ(s.point(star->center), "x1");
}

TEST(Diametrical, EquidistantIsComplete) {
  const auto s = oracle::space({"a", "b", "c", "d"}, {{0, 5, 5, 5}, {5, 0, 5, 5}, {5, 5, 0, 5}, {5, 5, 5, 0}});
  EXPECT_EQ(DiametricalGraph(s).edges().size(), 6u);
  EXPECT_EQ(multipartite_parts(DiametricalGraph(s)).parts.size(), 4u);
}

TEST(Diametrical, SingletonIsEmpty) {
  const auto s = oracle::space({"a"}, {{0}});
  const DiametricalGraph g(s);
  EXPECT_TRUE(g.edges().empty());
  EXPECT_EQ(kind_of([&] { multipartite_parts(g); }), ErrorKind::TooSmall);
  EXPECT_EQ(kind_of([&] { spanning_star(g); }), ErrorKind::TooSmall);
}

TEST(Diametrical, X3Parts) {
  EXPECT_EQ(named_parts(x3_space()), (std::vector<std::vector<std::string>>{{"x1", "x3"}, {"x2"}}));
}

TEST(Diametrical, BalancedBipartiteHasNoStar) {
  const auto s = oracle::space({"a", "b", "c", "d"}, {{0, 1, 2, 2}, {1, 0, 2, 2}, {2, 2, 0, 1}, {2, 2, 1, 0}});
  EXPECT_FALSE(spanning_star(DiametricalGraph(s)).has_value());
  const auto two = oracle::space({"a", "b"}, {{0, 4}, {4, 0}});
  EXPECT_EQ(spanning_star(DiametricalGraph(two))->center, 0u);
}

TEST(Diametrical, EdgesAreExactlyDiameterPairs) {
  for (std::size_t n = 2; n <= 7; ++n)
    for (const auto& s : classes(n)) {
      const DiametricalGraph g(s);
      std::size_t count = 0;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
          EXPECT_EQ(g.adjacent(u, v), u != v && s.distance(u, v) == diameter(s));
          count += (u < v && g.adjacent(u, v)) ? 1 : 0;
        }
      EXPECT_EQ(g.edges().size(), count);
      const auto parts = multipartite_parts(g);
      EXPECT_GE(parts.parts.size(), 2u);
      // A star exists exactly when some part is a singleton, and then C(X) = {0, diam}.
      const auto star = spanning_star(g);
      EXPECT_EQ(star.has_value(), parts.has_singleton_part());
      if (star) {
        EXPECT_EQ(center_of_distances(s), (DistanceSet{q(0), diameter(s)}));
      }
    }
}

TEST(Diametrical, ThreeStatementsAgreeOnTreeGeneratedSpaces) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto s = distance_matrix(random_labeled_tree(2 + seed % 11, {q(0), q(1), q(2), q(3)}, seed));
    const auto st = diametrical_statements(s);
    EXPECT_TRUE(st.dichotomy && st.singleton_part && st.star) << seed;
  }
}

TEST(Diametrical, ThreeStatementsCanDisagreeOutsideTreeGeneratedSpaces) {
  // Two clusters of different internal distances: C(X) = {0, diam} but G_X = K_{2,2}.
  const auto s = oracle::space({"a", "b", "c", "d"}, {{0, 1, 3, 3}, {1, 0, 3, 3}, {3, 3, 0, 2}, {3, 3, 2, 0}});
  const auto st = diametrical_statements(s);
  EXPECT_TRUE(st.dichotomy);
  EXPECT_FALSE(st.singleton_part);
  EXPECT_FALSE(st.star);
  EXPECT_FALSE(oracle::ut_by_leaf_children(s));
}

TEST(Equidistant, Examples) {
  const auto eq = oracle::space({"a", "b", "c"}, {{0, 3, 3}, {3, 0, 3}, {3, 3, 0}});
  EXPECT_EQ(is_equidistant(eq), q(3));
  EXPECT_FALSE(is_equidistant(oracle::path_space()).has_value());
  EXPECT_FALSE(is_equidistant(x3_space()).has_value());
  EXPECT_EQ(kind_of([] { is_equidistant(oracle::space({"a"}, {{0}})); }), ErrorKind::TooSmall);
}

TEST(Equidistant, SpheresEqualBallsExactlyForEquidistantSpaces) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& s : classes(n)) {
      const auto spheres = oracle::spheres_brute(s);
      const auto balls = oracle::open_balls_brute(s);
      const bool contained = std::all_of(spheres.begin(), spheres.end(), [&](const PointSet& x) {
        return std::find(balls.begin(), balls.end(), x) != balls.end();
      });
      EXPECT_EQ(is_equidistant(s).has_value(), spheres == balls);
      EXPECT_EQ(spheres == balls, contained);
    }
}

TEST(WeakSimilarity, Examples) {
  const auto x3 = x3_space();
  const auto scaled = oracle::space({"a", "b", "c"}, {{0, 9, 7}, {9, 0, 9}, {7, 9, 0}});
  const auto w = weak_similarity(scaled, x3);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_weak_similarity(scaled, x3, *w));
  const std::vector<std::pair<Rational, Rational>> f{{q(0), q(0)}, {q(1), q(7)}, {q(2), q(9)}};
  EXPECT_EQ(w->scale_map, f);

  const auto eq = oracle::space({"a", "b", "c"}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  EXPECT_FALSE(weak_similarity(x3, eq).has_value());

  const auto self = weak_similarity(oracle::path_space(), oracle::path_space());
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(self->point_bijection, (std::vector<std::size_t>{0, 1, 2, 3}));
  for (const auto& [a, b] : self->scale_map) EXPECT_EQ(a, b);
}

TEST(WeakSimilarity, DifferentSizesAreNotSimilar) {
  EXPECT_FALSE(weak_similarity(x3_space(), oracle::path_space()).has_value());
}

TEST(WeakSimilarity, EquivalenceRelationOnRelabeledCopies) {
  // Relabel each class by a permutation and a monotone rescaling, then check
  // reflexivity, symmetry via invert and transitivity via compose.
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& a : classes(n)) {
      std::vector<std::size_t> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = (i + 1) % n;
      std::vector<std::string> ids;
      std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
      for (std::size_t i = 0; i < n; ++i) {
        ids.push_back("b" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
          const Rational d = a.distance(perm[i], perm[j]);
          m[i][j] = d.is_zero() ? d : d * d + Rational(1, 3);
        }
      }
      const auto b = validate_ultrametric(ids, m);
      const auto ab = weak_similarity(a, b);
      ASSERT_TRUE(ab.has_value());
      EXPECT_TRUE(verify_weak_similarity(a, b, *ab));
      EXPECT_TRUE(verify_weak_similarity(b, a, invert(*ab)));
      const auto bc = weak_similarity(b, a);
      ASSERT_TRUE(bc.has_value());
      EXPECT_TRUE(verify_weak_similarity(a, a, compose(*ab, *bc)));
      EXPECT_TRUE(weak_similarity(a, a).has_value());
    }
}

TEST(WeakSimilarity, CanonicalDendrogramDecidesSimilarity) {
  const auto all = classes(5);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j)
      EXPECT_EQ(weak_similarity(all[i], all[j]).has_value(), canonical_dendrogram(all[i]) == canonical_dendrogram(all[j]));
}

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace vizing;

namespace {
BipartiteGraph bip(const Graph& g) { return *bipartition(g); }
}  // namespace

TEST(Bounds, BipartitionUpper) {
  EXPECT_EQ(bipartition_upper_bound(bip(oracle::star(9))).value, 1u);
  EXPECT_EQ(bipartition_upper_bound(bip(oracle::complete_bipartite(3, 3))).value, 3u);
  EXPECT_EQ(bipartition_upper_bound(bip(oracle::cycle(6))).value, 3u);
  EXPECT_TRUE(bipartition_upper_bound(bip(oracle::cycle(6))).in_hypothesis);
  EXPECT_FALSE(bipartition_upper_bound(bip(oracle::edgeless(3))).in_hypothesis);
}

TEST(Bounds, DegreeLower) {
  EXPECT_EQ(degree_lower_bound(oracle::complete_bipartite(3, 3)), 2u);
  EXPECT_EQ(degree_lower_bound(oracle::cycle(6)), 2u);
  auto ex = to_graph(BinaryMatrix::from_strings(oracle::worked_example_rows()));
  EXPECT_EQ(degree_lower_bound(ex), 3u);  // ceil(12/4) over both sides
  EXPECT_LE(degree_lower_bound(ex), gamma_exact(ex).gamma);
}

TEST(Imbalance, Examples) {
  auto stars = imbalance_criterion(bip(oracle::star(9)), bip(oracle::star(9)));
  EXPECT_EQ(stars.lhs, Rational(100));
  EXPECT_EQ(stars.rhs, Rational(19));
  EXPECT_TRUE(stars.satisfied);
  EXPECT_TRUE(check_vizing(oracle::star(9), oracle::star(9)).holds);

  auto c4 = imbalance_criterion(bip(oracle::cycle(4)), bip(oracle::cycle(4)));
  EXPECT_EQ(c4.lhs, Rational(4));
  EXPECT_EQ(c4.rhs, Rational(5));
  EXPECT_FALSE(c4.satisfied);

  auto k33 = imbalance_criterion(bip(oracle::complete_bipartite(3, 3)), bip(oracle::complete_bipartite(3, 3)));
  EXPECT_EQ(k33.lhs, Rational(4));
  EXPECT_EQ(k33.rhs, Rational(7));
  EXPECT_FALSE(k33.satisfied);
}

TEST(Imbalance, DegenerateAndDisconnected) {
  EXPECT_THROW(imbalance_criterion(bip(Graph(1)), bip(oracle::star(2))), DegenerateInputError);
  auto split = imbalance_criterion(bip(disjoint_union(oracle::star(3), oracle::star(3))), bip(oracle::star(3)));
  EXPECT_FALSE(split.in_hypothesis);
}

TEST(ImbalanceArbitrary, Examples) {
  auto v = imbalance_vs_arbitrary(bip(oracle::star(9)), 2, make_rational(1, 3));
  EXPECT_EQ(v.lhs, Rational(10));
  EXPECT_EQ(v.rhs, Rational(4));
  EXPECT_TRUE(v.satisfied);
  EXPECT_EQ(rho(oracle::cycle(6)).value, make_rational(1, 3));
  EXPECT_TRUE(check_vizing(oracle::star(9), oracle::cycle(6)).holds);

  auto balanced = imbalance_vs_arbitrary(bip(oracle::cycle(6)), 0, Rational(1));
  EXPECT_EQ(balanced.lhs, Rational(2));
  EXPECT_FALSE(balanced.satisfied);
}

TEST(ImbalanceArbitrary, MatchesTwoSidedCriterionForBipartitePairs) {
  // With ρ_H replaced by |A_H|/|V(H)| the one-sided form is the two-sided criterion divided through.
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    auto g = oracle::random_connected_bipartite(2 + t % 8, rng);
    auto h = oracle::random_connected_bipartite(2 + (t / 8) % 8, rng);
    auto bg = bip(g), bh = bip(h);
    auto two = imbalance_criterion(bg, bh);
    auto one = imbalance_vs_arbitrary(bg, max_degree(h), make_rational(bh.size_a(), h.order()));
    ASSERT_EQ(two.satisfied, one.satisfied);
    ASSERT_EQ(two.lhs, one.lhs * make_rational(h.order(), bh.size_a()));
  }
}

TEST(ImbalanceArbitrary, SoundOnSmallConnectedBipartitePairs) {
  std::vector<Graph> bipartite;
  for (std::size_t n = 2; n <= 5; ++n)
    for (auto& g : oracle::connected_graphs(n))
      if (bipartition(g)) bipartite.push_back(g);
  std::size_t fired = 0;
  for (const auto& g : bipartite)
    for (const auto& h : bipartite) {
      if (!imbalance_criterion(bip(g), bip(h)).satisfied) continue;
      ++fired;
      ASSERT_TRUE(check_vizing(g, h).holds);
    }
  EXPECT_GT(fired, 0u);
}

TEST(Regular, ConjecturedAndOrderBounds) {
  EXPECT_EQ(conjectured_kreg_bound(6, 3), 4u);
  EXPECT_EQ(conjectured_kreg_bound(6, 4), 4u);
  for (std::size_t k = 1; k <= 8; ++k) EXPECT_EQ(conjectured_kreg_bound(k, k), 2u);
  EXPECT_THROW(conjectured_kreg_bound(3, 4), PreconditionError);
  EXPECT_EQ(kreg_order_bound(5, 4), 2u);
  EXPECT_EQ(kreg_order_bound(6, 4), 4u);
  EXPECT_EQ(kreg_order_bound(6, 3), 6u);
  EXPECT_THROW(kreg_order_bound(4, 4), PreconditionError);
}

TEST(Threshold, Examples) {
  auto k4 = threshold_condition(4, 12, 12);
  EXPECT_TRUE(k4.satisfied);
  EXPECT_TRUE(k4.boundary);
  EXPECT_EQ(k4.lhs, make_rational(1, 9));
  EXPECT_EQ(k4.rhs, make_rational(1, 9));
  EXPECT_TRUE(threshold_condition(9, 9, 9).satisfied);
  EXPECT_FALSE(threshold_condition(3, 22, 22).satisfied);
  EXPECT_FALSE(threshold_condition(8, 8, 8).satisfied);
  EXPECT_THROW(threshold_condition(4, 3, 4), PreconditionError);
}

TEST(Threshold, NOfK) {
  const std::map<std::size_t, std::size_t> expected{{3, 23}, {5, 10}, {6, 10}, {7, 9}, {8, 9}};
  for (auto [k, n] : expected) {
    auto e = n_of_k(k);
    EXPECT_EQ(e.n, n) << k;
    EXPECT_FALSE(e.boundary) << k;
    EXPECT_EQ(e.strict_n, n) << k;
  }
  auto four = n_of_k(4);
  EXPECT_EQ(four.n, 12u);
  EXPECT_TRUE(four.boundary);
  EXPECT_EQ(four.strict_n, 13u);
  EXPECT_EQ(reference_thresholds().at(4), 13u);
  EXPECT_THROW(n_of_k(2), PreconditionError);
}

TEST(Threshold, MinimalityAndAutoRegime) {
  for (std::size_t k = 3; k <= 50; ++k) {
    auto e = n_of_k(k);
    ASSERT_GE(e.n, k);
    ASSERT_TRUE(threshold_condition(k, e.n, e.n).satisfied);
    if (e.n > k) {
      ASSERT_FALSE(threshold_condition(k, e.n - 1, e.n - 1).satisfied);
    }
    if (k >= 9) {
      ASSERT_TRUE(threshold_condition(k, k, k).satisfied);
      ASSERT_EQ(e.n, k);
    }
  }
  auto table = threshold_table(20);
  ASSERT_TRUE(table.auto_regime);
  EXPECT_EQ(*table.auto_regime, 9u);
}

TEST(Remainder, VerbatimList) {
  auto r = finite_remainder();
  EXPECT_EQ(r.pairs.size(), 12u);
  EXPECT_TRUE(r.contains(4, 6));
  EXPECT_TRUE(r.contains(4, 12));
  EXPECT_FALSE(r.contains(4, 13));
  EXPECT_TRUE(r.contains(6, 9));
  EXPECT_FALSE(r.contains(6, 10));
  EXPECT_TRUE(r.contains(5, 7));
  EXPECT_EQ(r.structural_offset, 2u);
  EXPECT_EQ(r.structural_gamma, 4u);
}

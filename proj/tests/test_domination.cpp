#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include "oracles.hpp"

using namespace vizing;

namespace {

Graph worked_example() { return to_graph(BinaryMatrix::from_strings(oracle::worked_example_rows())); }

// Rows are a1..a6 (vertices 0..5), columns b1..b6 (vertices 6..11).
VertexSet labelled(std::vector<std::size_t> a, std::vector<std::size_t> b) {
  std::vector<std::size_t> members;
  for (auto i : a) members.push_back(i - 1);
  for (auto j : b) members.push_back(6 + j - 1);
  return VertexSet::of(12, members);
}

}  // namespace

TEST(IsDominating, Examples) {
  auto c4 = oracle::cycle(4);
  EXPECT_TRUE(is_dominating(c4, VertexSet::of(4, std::vector<std::size_t>{0, 2})));
  EXPECT_TRUE(is_dominating(c4, VertexSet::of(4, std::vector<std::size_t>{1, 3})));
  EXPECT_FALSE(is_dominating(c4, VertexSet(4)));
  EXPECT_TRUE(is_dominating(worked_example(), labelled({2, 5}, {1, 4})));
  EXPECT_FALSE(is_dominating(worked_example(), labelled({2, 5}, {1})));
}

TEST(GammaExact, NamedGraphs) {
  auto p3 = gamma_exact(oracle::path(3));
  EXPECT_EQ(p3.gamma, 1u);
  EXPECT_EQ(p3.witness.vertices.members(), std::vector<std::size_t>{1});
  EXPECT_EQ(gamma_exact(worked_example()).gamma, 4u);
  EXPECT_EQ(gamma_exact(to_graph(BinaryMatrix::from_strings(oracle::block_form_rows()))).gamma, 4u);
  EXPECT_EQ(gamma_exact(Graph(1)).gamma, 1u);
  EXPECT_EQ(gamma_exact(oracle::edgeless(5)).gamma, 5u);
}

TEST(GammaExact, WorkedExampleWitnessIsLexMin) {
  auto r = gamma_exact(worked_example());
  ASSERT_EQ(r.witness.size, 4u);
  EXPECT_TRUE(is_dominating(worked_example(), r.witness.vertices));
  // Frozen: the smallest 4-subset in index order that dominates, found by the subset sweep below.
  EXPECT_EQ(r.witness.vertices.members(), (std::vector<std::size_t>{0, 1, 3, 11}));
  auto all = all_minimum_dominating_sets(worked_example(), 4);
  ASSERT_FALSE(all.empty());
  EXPECT_EQ(all.front().vertices, r.witness.vertices);
}

TEST(GammaBrute, Examples) {
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(gamma_brute(oracle::complete_bipartite(k, k)), k == 1 ? 1u : 2u);
  EXPECT_EQ(gamma_brute(oracle::cycle(6)), 2u);
  EXPECT_EQ(oracle::domination_number(oracle::cycle(6)), 2u);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(gamma_brute(oracle::edgeless(n)), n);
  EXPECT_EQ(gamma_brute(worked_example()), 4u);
  EXPECT_THROW(gamma_brute(oracle::path(25)), CapacityError);
}

TEST(GammaExact, MatchesBruteForceExhaustivelyUpToSeven) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      auto g = oracle::graph_from_mask(n, mask);
      auto r = gamma_exact(g);
      ASSERT_EQ(r.gamma, gamma_brute(g)) << emit_graph6(g);
      ASSERT_EQ(r.witness.size, r.gamma);
      ASSERT_TRUE(is_dominating(g, r.witness.vertices));
    }
  }
}

TEST(GammaExact, MatchesOraclesOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + t % 12;
    auto g = oracle::random_graph(n, 0.1 + 0.05 * (t % 10), rng);
    auto r = gamma_exact(g);
    ASSERT_EQ(r.gamma, gamma_brute(g)) << emit_graph6(g);
    ASSERT_EQ(r.gamma, oracle::domination_number(g)) << emit_graph6(g);
    ASSERT_TRUE(is_dominating(g, r.witness.vertices));
  }
}

TEST(GammaExact, LargerRandomGraphsAgreeWithBruteForce) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 40; ++t) {
    auto g = oracle::random_graph(16 + t % 6, 0.15, rng);
    ASSERT_EQ(gamma_exact(g).gamma, gamma_brute(g)) << emit_graph6(g);
  }
}

TEST(GammaExact, SandwichOnConnectedBipartite) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 1000; ++t) {
    auto g = oracle::random_connected_bipartite(2 + t % 11, rng);
    auto bg = bipartition(g);
    ASSERT_TRUE(bg);
    const auto gamma = gamma_exact(g).gamma;
    ASSERT_LE(degree_lower_bound(g), gamma);
    ASSERT_LE(gamma, bg->size_a());
  }
}

TEST(GammaExact, LeavesOnMinimumSetKeepGamma) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    auto g = oracle::random_graph(3 + t % 8, 0.35, rng);
    auto r = gamma_exact(g);
    auto grown = attach_leaves(g, r.witness.vertices);
    ASSERT_EQ(gamma_exact(grown).gamma, r.gamma);
    ASSERT_EQ(gamma_brute(grown), r.gamma);
  }
}

TEST(GammaExact, ProductOfStars) {
  auto product = cartesian_product(oracle::star(9), oracle::star(9));
  EXPECT_EQ(gamma_exact(product.graph).gamma, 10u);
}

TEST(AllMinimumSets, EnumeratesInLexOrder) {
  auto sets = all_minimum_dominating_sets(oracle::cycle(4), 2);
  // C4 dominating pairs: every pair except none; {0,1},{0,2},{0,3},{1,2},{1,3},{2,3} all dominate.
  ASSERT_EQ(sets.size(), 6u);
  EXPECT_EQ(sets.front().vertices.members(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(sets.back().vertices.members(), (std::vector<std::size_t>{2, 3}));
  auto c6 = all_minimum_dominating_sets(oracle::cycle(6), 2);
  EXPECT_EQ(c6.size(), 3u);  // antipodal pairs
}

TEST(Vizing, SmallPairs) {
  Graph k2(2, {{0, 1}});
  auto r = check_vizing(k2, k2);
  EXPECT_EQ(r.gamma_g, 1u);
  EXPECT_EQ(r.gamma_h, 1u);
  EXPECT_EQ(r.gamma_product, 2u);
  EXPECT_TRUE(r.holds);

  auto c4 = check_vizing(oracle::cycle(4), oracle::cycle(4));
  EXPECT_EQ(c4.gamma_g, 2u);
  EXPECT_EQ(c4.gamma_h, 2u);
  // Frozen from gamma_brute on the 16-vertex product.
  EXPECT_EQ(c4.gamma_product, 4u);
  EXPECT_EQ(gamma_brute(cartesian_product(oracle::cycle(4), oracle::cycle(4)).graph), 4u);
  EXPECT_TRUE(c4.holds);
  ASSERT_TRUE(c4.witness_product);

  auto p3 = check_vizing(oracle::path(3), oracle::path(3));
  EXPECT_EQ(p3.gamma_g * p3.gamma_h, 1u);
  EXPECT_TRUE(p3.holds);
}

TEST(Vizing, CapacityPropagates) {
  VizingOptions opts;
  opts.vertex_limit = 10;
  EXPECT_THROW(check_vizing(oracle::path(4), oracle::path(4), opts), CapacityError);
}

TEST(Vizing, HoldsForConnectedPairsUpToFive) {
  std::vector<Graph> catalog;
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto& g : oracle::connected_graphs(n)) catalog.push_back(g);
  ASSERT_EQ(catalog.size(), 1u + 1 + 2 + 6 + 21);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = i; j < catalog.size(); j += 3) {
      ASSERT_TRUE(check_vizing(catalog[i], catalog[j]).holds);
      ++pairs;
    }
  EXPECT_GT(pairs, 100u);
}

TEST(Cache, PersistsAcrossInstances) {
  const auto path = std::filesystem::temp_directory_path() / "vizing_test_cache.log";
  std::filesystem::remove(path);
  {
    GammaCache cache(path.string());
    EXPECT_EQ(gamma_number(worked_example(), &cache), 4u);
    EXPECT_EQ(cache.size(), 1u);
    EXPECT_EQ(cache.hits(), 0u);
    EXPECT_EQ(gamma_number(worked_example(), &cache), 4u);
    EXPECT_EQ(cache.hits(), 1u);
  }
  {
    std::FILE* f = std::fopen(path.string().c_str(), "a");
    std::fputs("garbage line without value\n", f);
    std::fclose(f);
    GammaCache cache(path.string());
    EXPECT_EQ(cache.size(), 1u);
    EXPECT_EQ(cache.lookup(GammaCache::key_for(worked_example())), 4u);
  }
  std::filesystem::remove(path);
}

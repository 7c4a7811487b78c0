#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace vizing;

namespace {
BiadjacencyMatrix worked_example() { return BiadjacencyMatrix::from_strings(oracle::worked_example_rows()); }
BiadjacencyMatrix figure_block() { return BiadjacencyMatrix::from_strings(oracle::block_form_rows()); }
}  // namespace

TEST(Rank, Examples) {
  EXPECT_EQ(rank_exact(worked_example().matrix()), 6u);
  EXPECT_EQ(oracle::gauss_rank(oracle::to_q(worked_example().matrix())), 6u);
  for (std::size_t n = 1; n <= 6; ++n) {
    BinaryMatrix ones(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) ones.set(r, c, true);
    EXPECT_EQ(rank_exact(ones), 1u);
  }
  // Frozen from the cofactor oracle: twin rows halve the rank of the block form.
  EXPECT_EQ(oracle::minor_rank(oracle::to_q(figure_block().matrix())), 3u);
  EXPECT_EQ(rank_exact(figure_block().matrix()), 3u);
  EXPECT_EQ(oracle::cofactor_det(oracle::to_q(worked_example().matrix())) != 0, true);
}

TEST(Rank, RationalEntries) {
  RationalMatrix m({{make_rational(1, 2), make_rational(1, 3)}, {Rational(3), Rational(2)}});
  EXPECT_EQ(rank_exact(m), 1u);
  RationalMatrix full({{make_rational(1, 2), make_rational(1, 3)}, {Rational(3), make_rational(7, 5)}});
  EXPECT_EQ(rank_exact(full), 2u);
  EXPECT_THROW(RationalMatrix({{Rational(1)}, {Rational(1), Rational(2)}}), PreconditionError);
}

TEST(Rank, AgreesWithNaiveEliminationOnRandomMatrices) {
  std::mt19937_64 rng(500);
  for (int t = 0; t < 500; ++t) {
    const std::size_t rows = 1 + t % 10, cols = 1 + (t / 10) % 10;
    auto m = oracle::random_matrix(rows, cols, 0.2 + 0.1 * (t % 6), rng);
    ASSERT_EQ(rank_exact(m), oracle::gauss_rank(oracle::to_q(m)));
  }
  for (int t = 0; t < 60; ++t) {
    auto m = oracle::random_matrix(5, 5, 0.5, rng);
    ASSERT_EQ(rank_exact(m), oracle::minor_rank(oracle::to_q(m)));
  }
}

TEST(Complement, IdentityHoldsForRegularMatrices) {
  EXPECT_TRUE(complement_identity_check(worked_example()));
  EXPECT_TRUE(complement_identity_check(figure_block()));
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      for (const auto& m : enumerate_kreg(n, k)) ASSERT_TRUE(complement_identity_check(m));
  auto broken = worked_example().matrix();
  broken.set(0, 5, true);
  EXPECT_THROW(complement_identity_check(broken), PreconditionError);
}

TEST(Cover, Examples) {
  EXPECT_FALSE(disjoint_row_cover(worked_example(), 2));
  auto ones = BiadjacencyMatrix::from_strings({"111", "111", "111"});
  EXPECT_EQ(disjoint_row_cover(ones, 1), std::vector<std::size_t>{0});
  auto identity = BiadjacencyMatrix::from_strings({"1000", "0100", "0010", "0001"});
  EXPECT_EQ(disjoint_row_cover(identity, 4), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_FALSE(disjoint_row_cover(identity, 3));
  EXPECT_THROW(disjoint_row_cover(identity, 0), PreconditionError);
  EXPECT_FALSE(disjoint_row_cover(figure_block(), 2));
}

TEST(Cover, AgreesWithSubsetSearch) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = 2 + t % 7, cols = 2 + (t / 7) % 6, want = 1 + t % 4;
    auto m = oracle::random_matrix(rows, cols, 0.35, rng);
    std::optional<std::vector<std::size_t>> first;
    // Lexicographically first subset of size `want` of nonzero rows that partition the columns.
    std::vector<std::size_t> pick(want);
    std::iota(pick.begin(), pick.end(), 0);
    while (want <= rows) {
      std::uint64_t seen = 0;
      bool ok = true;
      for (auto r : pick) {
        if ((seen & m.row(r)) || m.row(r) == 0) ok = false;
        seen |= m.row(r);
      }
      if (ok && seen == m.column_mask()) {
        first = pick;
        break;
      }
      std::size_t i = want;
      while (i > 0 && pick[i - 1] == rows - want + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < want; ++j) pick[j] = pick[j - 1] + 1;
    }
    ASSERT_EQ(disjoint_row_cover(m, want), first);
  }
}

TEST(Obstruction, Examples) {
  auto ex = obstruction_report(worked_example());
  EXPECT_EQ(ex.rank, 6u);
  EXPECT_TRUE(ex.full_rank);
  EXPECT_EQ(ex.m, 2u);
  EXPECT_TRUE(ex.m_integral);
  EXPECT_FALSE(ex.cover_exists);
  EXPECT_TRUE(ex.implication_holds);

  auto ones = obstruction_report(BiadjacencyMatrix::from_strings({"1111", "1111", "1111", "1111"}));
  EXPECT_EQ(ones.rank, 1u);
  EXPECT_FALSE(ones.full_rank);
  EXPECT_EQ(ones.m, 1u);
  EXPECT_TRUE(ones.cover_exists);

  auto odd = obstruction_report(enumerate_kreg(5, 2).front());
  EXPECT_FALSE(odd.m_integral);
  EXPECT_EQ(odd.m, 3u);
}

TEST(Obstruction, ImplicationAndCoverCertificate) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      for (const auto& m : enumerate_kreg(n, k)) {
        auto rep = obstruction_report(m);
        // k = 1: a permutation matrix is full rank and its n rows are themselves the cover.
        if (k == 1) {
          ASSERT_TRUE(rep.full_rank && rep.cover_exists);
          ASSERT_FALSE(rep.implication_holds);
        } else {
          ASSERT_TRUE(rep.implication_holds) << canonical_key(m);
        }
        ASSERT_EQ(rep.rank, oracle::gauss_rank(oracle::to_q(m.matrix())));
        if (!rep.cover_witness) continue;
        // The cover rows dominate every column vertex.
        const auto g = to_graph(m);
        auto rows = VertexSet::of(g.order(), *rep.cover_witness);
        for (std::size_t c = 0; c < n; ++c) ASSERT_TRUE(g.neighbors(n + c).intersects(rows));
        // With a matching column cover the union is a dominating set of size 2m.
        auto cols = disjoint_row_cover(m.matrix().transposed(), rep.m);
        if (!cols) continue;
        std::vector<std::size_t> members(rep.cover_witness->begin(), rep.cover_witness->end());
        for (auto c : *cols) members.push_back(n + c);
        auto d = VertexSet::of(g.order(), members);
        ASSERT_TRUE(is_dominating(g, d));
        ASSERT_EQ(d.count(), 2 * rep.m);
        ASSERT_LE(gamma_exact(g).gamma, 2 * rep.m);
      }
}

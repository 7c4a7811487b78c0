#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vizing/biadjacency.hpp"
#include "vizing/density.hpp"
#include "vizing/error.hpp"

namespace vizing {

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, std::vector<Rational>(cols)) {}
  explicit RationalMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
    cols_ = rows_.empty() ? 0 : rows_.front().size();
    for (const auto& r : rows_)
      if (r.size() != cols_) throw PreconditionError("rational matrix rows must have equal length");
  }
  static RationalMatrix from(const BinaryMatrix& m) {
    RationalMatrix out(m.row_count(), m.col_count());
    for (std::size_t r = 0; r < m.row_count(); ++r)
      for (std::size_t c = 0; c < m.col_count(); ++c)
        if (m.at(r, c)) out.rows_[r][c] = 1;
    return out;
  }

  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t col_count() const noexcept { return cols_; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  Rational& at(std::size_t r, std::size_t c) { return rows_[r][c]; }
  const std::vector<Rational>& row(std::size_t r) const { return rows_[r]; }

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<Rational>> rows_;
};

/// Rank over the rationals. Rows are scaled to integers, then reduced by
/// fraction-free (Bareiss) elimination with row pivoting.
inline std::size_t rank_exact(const RationalMatrix& m) {
  const std::size_t rows = m.row_count(), cols = m.col_count();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    BigInt scale = 1;
    for (std::size_t c = 0; c < cols; ++c) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(m.at(r, c)));
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational scaled = m.at(r, c) * Rational(scale);
      a[r][c] = boost::multiprecision::numerator(scaled);
    }
  }
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

inline std::size_t rank_exact(const BinaryMatrix& m) { return rank_exact(RationalMatrix::from(m)); }

/// Checks Σ rows = k·1 exactly, which writes every complement 1 - r as the
/// rational combination (1/k)Σ rows - r. Throws on a non-regular input.
inline bool complement_identity_check(const BinaryMatrix& m) {
  if (m.row_count() == 0 || m.col_count() == 0) throw PreconditionError("empty matrix");
  const std::size_t k = m.row_sum(0);
  for (std::size_t r = 0; r < m.row_count(); ++r)
    if (m.row_sum(r) != k) throw PreconditionError("row sums are not constant");
  for (std::size_t c = 0; c < m.col_count(); ++c)
    if (m.col_sum(c) != k) throw PreconditionError("column " + std::to_string(c) + " sum differs from k");
  if (k == 0) throw PreconditionError("k must be positive");
  const auto q = RationalMatrix::from(m);
  for (std::size_t c = 0; c < q.col_count(); ++c) {
    Rational sum = 0;
    for (std::size_t r = 0; r < q.row_count(); ++r) sum += q.at(r, c);
    if (sum != Rational(k)) return false;
  }
  return true;
}

inline bool complement_identity_check(const BiadjacencyMatrix& m) { return complement_identity_check(m.matrix()); }

namespace detail {

class RowCoverSearch {
 public:
  RowCoverSearch(const BinaryMatrix& m, std::size_t wanted) : m_(m), wanted_(wanted) {}

  std::optional<std::vector<std::size_t>> run() {
    std::vector<std::size_t> picked;
    recurse(0, picked);
    return best_;
  }

 private:
  void recurse(std::uint64_t covered, std::vector<std::size_t>& picked) {
    const std::uint64_t all = m_.column_mask();
    if (covered == all) {
      if (picked.size() == wanted_) {
        auto sorted = picked;
        std::sort(sorted.begin(), sorted.end());
        if (!best_ || sorted < *best_) best_ = sorted;
      }
      return;
    }
    if (picked.size() == wanted_) return;
    // Branch on the uncovered column with the fewest usable rows.
    std::size_t best_col = m_.col_count(), best_count = m_.row_count() + 1;
    for (std::size_t c = 0; c < m_.col_count(); ++c) {
      if ((covered >> c) & 1U) continue;
      std::size_t count = 0;
      for (std::size_t r = 0; r < m_.row_count(); ++r)
        if (((m_.row(r) >> c) & 1U) && !(m_.row(r) & covered)) ++count;
      if (count < best_count) best_count = count, best_col = c;
    }
    if (best_count == 0) return;
    for (std::size_t r = 0; r < m_.row_count(); ++r) {
      const std::uint64_t row = m_.row(r);
      if (!((row >> best_col) & 1U) || (row & covered)) continue;
      picked.push_back(r);
      recurse(covered | row, picked);
      picked.pop_back();
    }
  }

  const BinaryMatrix& m_;
  std::size_t wanted_;
  std::optional<std::vector<std::size_t>> best_;
};

}  // namespace detail

/// Exactly `rows_wanted` rows with pairwise disjoint supports covering every
/// column; the lexicographically first such index set, or nullopt.
inline std::optional<std::vector<std::size_t>> disjoint_row_cover(const BinaryMatrix& m, std::size_t rows_wanted) {
  if (rows_wanted < 1) throw PreconditionError("disjoint_row_cover needs rows_wanted >= 1");
  return detail::RowCoverSearch(m, rows_wanted).run();
}
inline std::optional<std::vector<std::size_t>> disjoint_row_cover(const BiadjacencyMatrix& m, std::size_t rows_wanted) {
  return disjoint_row_cover(m.matrix(), rows_wanted);
}

struct ObstructionReport {
  std::size_t rank = 0;
  bool full_rank = false;
  std::size_t m = 0;          // rows searched: n/k, or ceil(n/k) when k does not divide n
  bool m_integral = true;
  bool cover_exists = false;
  std::optional<std::vector<std::size_t>> cover_witness;
  /// full_rank implies no cover; false here is a finding.
  bool implication_holds = true;
};

/// Computes the rank and runs the cover search independently, then checks
/// that a full-rank matrix admits no m-row disjoint cover.
inline ObstructionReport obstruction_report(const BiadjacencyMatrix& m) {
  ObstructionReport r;
  r.rank = rank_exact(m.matrix());
  r.full_rank = r.rank == m.n();
  r.m_integral = m.n() % m.k() == 0;
  r.m = (m.n() + m.k() - 1) / m.k();
  r.cover_witness = disjoint_row_cover(m, r.m);
  r.cover_exists = r.cover_witness.has_value();
  r.implication_holds = !(r.full_rank && r.cover_exists);
  return r;
}

}  // namespace vizing

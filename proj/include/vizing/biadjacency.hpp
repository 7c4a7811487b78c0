#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vizing/error.hpp"
#include "vizing/graph.hpp"

namespace vizing {

/// Dense 0/1 matrix with at most 64 columns. Row r is a bitmask: bit j is entry (r, j).
class BinaryMatrix {
 public:
  static constexpr std::size_t kMaxColumns = 64;

  BinaryMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, 0) {
    if (cols > kMaxColumns) throw CapacityError("binary matrix wider than 64 columns");
  }
  BinaryMatrix(std::size_t cols, std::vector<std::uint64_t> rows) : cols_(cols), rows_(std::move(rows)) {
    if (cols > kMaxColumns) throw CapacityError("binary matrix wider than 64 columns");
    const std::uint64_t mask = column_mask();
    for (auto r : rows_)
      if (r & ~mask) throw PreconditionError("row bitmask has bits beyond column count");
  }

  /// Parses rows written as strings of '0'/'1', column 0 first.
  static BinaryMatrix from_strings(const std::vector<std::string>& lines) {
    if (lines.empty()) throw PreconditionError("matrix needs at least one row");
    std::vector<std::uint64_t> rows;
    for (const auto& line : lines) {
      if (line.size() != lines.front().size()) throw PreconditionError("ragged matrix rows");
      std::uint64_t r = 0;
      for (std::size_t j = 0; j < line.size(); ++j) {
        if (line[j] == '1') r |= std::uint64_t{1} << j;
        else if (line[j] != '0') throw PreconditionError("matrix entries must be 0 or 1");
      }
      rows.push_back(r);
    }
    return BinaryMatrix(lines.front().size(), std::move(rows));
  }

  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t col_count() const noexcept { return cols_; }
  std::uint64_t row(std::size_t r) const { return rows_[r]; }
  const std::vector<std::uint64_t>& rows() const noexcept { return rows_; }
  bool at(std::size_t r, std::size_t c) const { return (rows_[r] >> c) & 1U; }
  void set(std::size_t r, std::size_t c, bool value) {
    if (value) rows_[r] |= std::uint64_t{1} << c;
    else rows_[r] &= ~(std::uint64_t{1} << c);
  }

  std::uint64_t column_mask() const noexcept {
    return cols_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cols_) - 1;
  }
  std::size_t row_sum(std::size_t r) const { return static_cast<std::size_t>(std::popcount(rows_[r])); }
  std::size_t col_sum(std::size_t c) const {
    std::size_t s = 0;
    for (auto r : rows_) s += (r >> c) & 1U;
    return s;
  }

  BinaryMatrix transposed() const {
    BinaryMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (at(r, c)) t.set(c, r, true);
    return t;
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (auto r : rows_) {
      std::string s(cols_, '0');
      for (std::size_t j = 0; j < cols_; ++j)
        if ((r >> j) & 1U) s[j] = '1';
      out.push_back(std::move(s));
    }
    return out;
  }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t cols_;
  std::vector<std::uint64_t> rows_;
};

/// Square k-regular biadjacency matrix: every row and column sums to k, 1 <= k <= n.
/// Row r is vertex a_{r+1} of side A, column c is vertex b_{c+1} of side B.
class BiadjacencyMatrix {
 public:
  explicit BiadjacencyMatrix(BinaryMatrix m) : m_(std::move(m)) {
    const std::size_t n = m_.row_count();
    if (m_.col_count() != n) throw PreconditionError("biadjacency matrix must be square");
    k_ = m_.row_sum(0);
    if (k_ == 0) throw PreconditionError("biadjacency matrix must have k >= 1");
    for (std::size_t i = 0; i < n; ++i) {
      if (m_.row_sum(i) != k_)
        throw PreconditionError("row " + std::to_string(i) + " sum differs from k=" + std::to_string(k_));
      if (m_.col_sum(i) != k_)
        throw PreconditionError("column " + std::to_string(i) + " sum differs from k=" + std::to_string(k_));
    }
  }

  static BiadjacencyMatrix from_strings(const std::vector<std::string>& lines) {
    return BiadjacencyMatrix(BinaryMatrix::from_strings(lines));
  }

  std::size_t n() const noexcept { return m_.row_count(); }
  std::size_t k() const noexcept { return k_; }
  std::uint64_t row(std::size_t r) const { return m_.row(r); }
  std::uint64_t column(std::size_t c) const {
    std::uint64_t col = 0;
    for (std::size_t r = 0; r < n(); ++r)
      if (m_.at(r, c)) col |= std::uint64_t{1} << r;
    return col;
  }
  const BinaryMatrix& matrix() const noexcept { return m_; }

  friend bool operator==(const BiadjacencyMatrix&, const BiadjacencyMatrix&) = default;

 private:
  BinaryMatrix m_;
  std::size_t k_ = 0;
};

/// Bipartite graph of a biadjacency matrix: rows are vertices 0..r-1, columns r..r+c-1.
inline Graph to_graph(const BinaryMatrix& m) {
  std::vector<Edge> edges;
  const std::size_t r = m.row_count();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.col_count(); ++j)
      if (m.at(i, j)) edges.emplace_back(i, r + j);
  return Graph(r + m.col_count(), edges);
}

inline Graph to_graph(const BiadjacencyMatrix& m) { return to_graph(m.matrix()); }

}  // namespace vizing

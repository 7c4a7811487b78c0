#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "vizing/biadjacency.hpp"
#include "vizing/criteria.hpp"
#include "vizing/domination.hpp"
#include "vizing/error.hpp"
#include "vizing/graph.hpp"

namespace vizing {

inline constexpr std::size_t kScanMaxOrder = 7;
inline constexpr std::size_t kScanMaxOrderLarge = 8;

struct EnumerationOptions {
  bool allow_large = false;  // permit n = 8
  /// Also identify a matrix with its transpose (swapping the two sides).
  bool quotient_transpose = false;
  std::size_t jobs = 1;
};

namespace detail {

/// Row written with column 0 as the most significant of n bits.
inline std::uint32_t lex_row(std::uint64_t row, std::size_t n) {
  std::uint32_t v = 0;
  for (std::size_t j = 0; j < n; ++j)
    if ((row >> j) & 1U) v |= std::uint32_t{1} << (n - 1 - j);
  return v;
}

inline std::uint64_t row_from_lex(std::uint32_t v, std::size_t n) {
  std::uint64_t row = 0;
  for (std::size_t j = 0; j < n; ++j)
    if ((v >> (n - 1 - j)) & 1U) row |= std::uint64_t{1} << j;
  return row;
}

/// Lexicographically least row-sorted form over all column permutations,
/// as ascending lex-row values.
inline std::vector<std::uint32_t> canonical_rows(const BinaryMatrix& m) {
  const std::size_t n = m.col_count();
  if (n > kScanMaxOrderLarge) throw CapacityError("canonical form limited to 8 columns");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::uint32_t> best, cur(m.row_count());
  do {
    for (std::size_t r = 0; r < m.row_count(); ++r) {
      const std::uint64_t row = m.row(r);
      std::uint32_t v = 0;
      for (std::size_t i = 0; i < n; ++i) v = (v << 1) | static_cast<std::uint32_t>((row >> perm[i]) & 1U);
      cur[r] = v;
    }
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::string hex_key(const std::vector<std::uint32_t>& rows, std::size_t n) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t width = (n + 3) / 4;
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out.push_back('.');
    for (std::size_t d = width; d-- > 0;) out.push_back(kDigits[(rows[r] >> (4 * d)) & 15U]);
  }
  return out;
}

}  // namespace detail

/// Identical for two matrices iff they differ by row and column permutations.
/// Rows of the minimal form are printed in hex (column 0 most significant), separated by '.'.
inline std::string canonical_key(const BinaryMatrix& m) {
  return detail::hex_key(detail::canonical_rows(m), m.col_count());
}
inline std::string canonical_key(const BiadjacencyMatrix& m) { return canonical_key(m.matrix()); }

/// Key that additionally identifies a matrix with its transpose.
inline std::string canonical_key_up_to_transpose(const BiadjacencyMatrix& m) {
  return std::min(canonical_key(m.matrix()), canonical_key(m.matrix().transposed()));
}

/// The canonical representative encoded by `key`.
inline BiadjacencyMatrix matrix_from_key(const std::string& key, std::size_t n) {
  std::vector<std::uint64_t> rows;
  std::size_t start = 0;
  while (start <= key.size()) {
    auto dot = key.find('.', start);
    if (dot == std::string::npos) dot = key.size();
    rows.push_back(detail::row_from_lex(static_cast<std::uint32_t>(std::stoul(key.substr(start, dot - start), nullptr, 16)), n));
    start = dot + 1;
  }
  if (rows.size() != n) throw ParseError("key row count differs from n", 0);
  return BiadjacencyMatrix(BinaryMatrix(n, std::move(rows)));
}

namespace detail {

/// Generates every k-regular n×n matrix whose rows are nondecreasing (column 0
/// most significant) and whose columns are nondecreasing (row 0 most
/// significant). The lexicographically least form of every permutation class
/// satisfies both orderings, so the output meets every class at least once.
class RegularMatrixGenerator {
 public:
  RegularMatrixGenerator(std::size_t n, std::size_t k) : n_(n), k_(k) {
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v)
      if (static_cast<std::size_t>(std::popcount(v)) == k) candidates_.push_back(v);
  }

  std::size_t first_row_choices() const { return candidates_.size(); }

  /// Visits all completions whose first row is candidates_[first].
  void run_partition(std::size_t first, const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
    std::vector<std::uint32_t> rows;
    std::vector<std::size_t> col_sums(n_, 0);
    // tied[j]: columns j and j+1 agree on every row so far.
    std::vector<bool> tied(n_ > 0 ? n_ - 1 : 0, true);
    if (!admissible(candidates_[first], 0, col_sums, tied)) return;
    place(candidates_[first], rows, col_sums, tied);
    extend(first, rows, col_sums, tied, visit);
  }

 private:
  bool bit(std::uint32_t v, std::size_t col) const { return (v >> (n_ - 1 - col)) & 1U; }

  bool admissible(std::uint32_t v, std::size_t placed, const std::vector<std::size_t>& col_sums,
                  const std::vector<bool>& tied) const {
    const std::size_t remaining_after = n_ - placed - 1;
    for (std::size_t j = 0; j < n_; ++j) {
      const std::size_t s = col_sums[j] + (bit(v, j) ? 1 : 0);
      if (s > k_ || s + remaining_after < k_) return false;
    }
    for (std::size_t j = 0; j + 1 < n_; ++j)
      if (tied[j] && bit(v, j) && !bit(v, j + 1)) return false;
    return true;
  }

  void place(std::uint32_t v, std::vector<std::uint32_t>& rows, std::vector<std::size_t>& col_sums,
             std::vector<bool>& tied) const {
    rows.push_back(v);
    for (std::size_t j = 0; j < n_; ++j) col_sums[j] += bit(v, j) ? 1 : 0;
    for (std::size_t j = 0; j + 1 < n_; ++j)
      if (tied[j] && bit(v, j) != bit(v, j + 1)) tied[j] = false;
  }

  void extend(std::size_t from, std::vector<std::uint32_t>& rows, std::vector<std::size_t>& col_sums,
              std::vector<bool>& tied, const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
    if (rows.size() == n_) {
      visit(rows);
      return;
    }
    for (std::size_t c = from; c < candidates_.size(); ++c) {
      const std::uint32_t v = candidates_[c];
      if (!admissible(v, rows.size(), col_sums, tied)) continue;
      auto saved_sums = col_sums;
      auto saved_tied = tied;
      place(v, rows, col_sums, tied);
      extend(c, rows, col_sums, tied, visit);
      rows.pop_back();
      col_sums = std::move(saved_sums);
      tied = std::move(saved_tied);
    }
  }

  std::size_t n_, k_;
  std::vector<std::uint32_t> candidates_;
};

inline void check_scan_caps(std::size_t n, std::size_t k, const EnumerationOptions& opts) {
  if (k < 1 || k > n) throw PreconditionError("enumeration needs 1 <= k <= n");
  const std::size_t cap = opts.allow_large ? kScanMaxOrderLarge : kScanMaxOrder;
  if (n > cap)
    throw CapacityError("exhaustive enumeration capped at n <= " + std::to_string(cap) +
                        (opts.allow_large ? "" : " (n = 8 needs the large-scan override)"));
}

}  // namespace detail

/// One canonical representative per row/column-permutation class of k-regular
/// n×n biadjacency matrices, ordered by canonical key.
inline std::vector<BiadjacencyMatrix> enumerate_kreg(std::size_t n, std::size_t k, const EnumerationOptions& opts = {}) {
  detail::check_scan_caps(n, k, opts);
  detail::RegularMatrixGenerator gen(n, k);
  const std::size_t parts = gen.first_row_choices();
  std::vector<std::map<std::string, std::vector<std::uint32_t>>> found(parts);

  auto worker = [&](std::size_t part) {
    detail::RegularMatrixGenerator local(n, k);
    auto& out = found[part];
    local.run_partition(part, [&](const std::vector<std::uint32_t>& rows) {
      std::vector<std::uint64_t> bits;
      for (auto v : rows) bits.push_back(detail::row_from_lex(v, n));
      BinaryMatrix m(n, std::move(bits));
      auto canon = detail::canonical_rows(m);
      std::string key = detail::hex_key(canon, n);
      if (opts.quotient_transpose) {
        auto t = detail::canonical_rows(m.transposed());
        if (t < canon) {
          canon = std::move(t);
          key = detail::hex_key(canon, n);
        }
      }
      out.emplace(std::move(key), std::move(canon));
    });
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(opts.jobs, parts));
  if (jobs == 1) {
    for (std::size_t p = 0; p < parts; ++p) worker(p);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (std::size_t p = next++; p < parts; p = next++) worker(p);
      });
    for (auto& t : pool) t.join();
  }

  std::map<std::string, std::vector<std::uint32_t>> merged;
  for (auto& part : found) merged.merge(part);
  std::vector<BiadjacencyMatrix> classes;
  for (const auto& [key, canon] : merged) {
    std::vector<std::uint64_t> bits;
    for (auto v : canon) bits.push_back(detail::row_from_lex(v, n));
    classes.emplace_back(BinaryMatrix(n, std::move(bits)));
  }
  return classes;
}

enum class KPlus2Case { Gamma3Form, Gamma4Form };

inline const char* to_string(KPlus2Case c) { return c == KPlus2Case::Gamma4Form ? "gamma4-form" : "gamma3-form"; }

/// For n = k + 2: gamma4-form when, for every row a, the two columns missing
/// from a have identical neighbourhoods; gamma3-form otherwise.
inline KPlus2Case classify_k_plus_2(const BiadjacencyMatrix& m) {
  if (m.n() != m.k() + 2) throw PreconditionError("classify_k_plus_2 needs n = k + 2");
  const std::uint64_t all = m.matrix().column_mask();
  for (std::size_t a = 0; a < m.n(); ++a) {
    const std::uint64_t missing = all & ~m.row(a);
    const auto b1 = static_cast<std::size_t>(std::countr_zero(missing));
    const auto b2 = static_cast<std::size_t>(std::countr_zero(missing & (missing - 1)));
    if (m.column(b1) != m.column(b2)) return KPlus2Case::Gamma3Form;
  }
  return KPlus2Case::Gamma4Form;
}

struct FormCheck {
  bool holds = false;
  std::string note;
};

/// True iff m is, up to row and column permutations, all ones minus n/2
/// disjoint 2×2 zero blocks. Checked structurally: rows pair into identical
/// twins, columns likewise, and the twins' zero patterns tile the columns.
inline FormCheck is_unique_form(const BiadjacencyMatrix& m) {
  const std::size_t n = m.n();
  if (n != m.k() + 2) return {false, "n != k + 2"};
  if (n % 2 != 0) return {false, "odd order"};
  auto twins_pair_up = [](std::vector<std::uint64_t> lines) {
    std::sort(lines.begin(), lines.end());
    for (std::size_t i = 0; i < lines.size(); i += 2)
      if (lines[i] != lines[i + 1] || (i + 2 < lines.size() && lines[i + 2] == lines[i])) return false;
    return true;
  };
  std::vector<std::uint64_t> rows(m.matrix().rows()), cols;
  for (std::size_t c = 0; c < n; ++c) cols.push_back(m.column(c));
  if (!twins_pair_up(rows)) return {false, "rows do not pair into twins"};
  if (!twins_pair_up(cols)) return {false, "columns do not pair into twins"};
  const std::uint64_t all = m.matrix().column_mask();
  std::set<std::uint64_t> zero_patterns;
  for (auto r : rows) zero_patterns.insert(all & ~r);
  std::uint64_t tiled = 0;
  for (auto z : zero_patterns) {
    if (tiled & z) return {false, "zero blocks overlap"};
    tiled |= z;
  }
  if (tiled != all) return {false, "zero blocks do not tile the columns"};
  return {true, ""};
}

/// The canonical block form: all ones minus n/2 disjoint 2×2 diagonal zero blocks.
inline BiadjacencyMatrix block_form(std::size_t n) {
  if (n < 4 || n % 2 != 0) throw PreconditionError("block form needs even n >= 4");
  std::vector<std::uint64_t> rows(n);
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (std::size_t r = 0; r < n; ++r) rows[r] = all & ~(std::uint64_t{3} << (r / 2 * 2));
  return BiadjacencyMatrix(BinaryMatrix(n, std::move(rows)));
}

struct ScanRecord {
  std::string key;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t gamma = 0;
  std::size_t conj_bound = 0;
  std::optional<std::size_t> order_bound;  // absent when n == k
  std::string case_tag;  // gamma2 | gamma3 | gamma4-unique-form | other
  bool connected = false;
  bool unique_form = false;
  bool conj_violation = false;
  bool order_violation = false;
  /// For conjecture violations: γ recomputed by exhaustive search agrees.
  bool violation_confirmed = false;
  /// n = k + 2 structural classification disagrees with γ.
  bool classification_mismatch = false;
};

struct ScanReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<ScanRecord> records;
  std::size_t max_gamma = 0;
  std::size_t connected_classes = 0;
  std::size_t conj_violations = 0;       // confirmed by the exhaustive oracle
  std::size_t unconfirmed_violations = 0;  // solver disagreed with the oracle
  std::size_t order_violations = 0;
  std::size_t classification_mismatches = 0;
};

inline ScanRecord scan_class(const BiadjacencyMatrix& m, const std::string& key, GammaCache* cache = nullptr) {
  ScanRecord r;
  r.key = key;
  r.n = m.n();
  r.k = m.k();
  const Graph g = to_graph(m);
  r.gamma = gamma_number(g, cache);
  r.connected = is_connected(g);
  r.conj_bound = conjectured_kreg_bound(r.n, r.k);
  if (r.n > r.k) r.order_bound = kreg_order_bound(r.n, r.k);
  r.unique_form = is_unique_form(m).holds;
  r.conj_violation = r.gamma > r.conj_bound;
  r.order_violation = r.order_bound && r.gamma > *r.order_bound;
  if (r.conj_violation) r.violation_confirmed = gamma_brute(g) > r.conj_bound;

  if (r.n == r.k + 2) {
    const auto form = classify_k_plus_2(m);
    const std::size_t expected = form == KPlus2Case::Gamma4Form ? 4 : 3;
    r.classification_mismatch = r.gamma != expected || (form == KPlus2Case::Gamma4Form) != r.unique_form;
    r.case_tag = r.gamma == 4 && r.unique_form ? "gamma4-unique-form" : r.gamma == 3 ? "gamma3" : "other";
  } else if (r.gamma == 2) {
    r.case_tag = "gamma2";
  } else {
    r.case_tag = "other";
  }
  return r;
}

/// Enumerates (n, k), computes γ per class and compares it with both bounds.
inline ScanReport scan_conjecture(std::size_t n, std::size_t k, const EnumerationOptions& opts = {},
                                  GammaCache* cache = nullptr) {
  ScanReport rep;
  rep.n = n;
  rep.k = k;
  for (const auto& m : enumerate_kreg(n, k, opts)) {
    auto r = scan_class(m, opts.quotient_transpose ? canonical_key_up_to_transpose(m) : canonical_key(m), cache);
    rep.max_gamma = std::max(rep.max_gamma, r.gamma);
    rep.connected_classes += r.connected ? 1 : 0;
    if (r.conj_violation) (r.violation_confirmed ? rep.conj_violations : rep.unconfirmed_violations) += 1;
    rep.order_violations += r.order_violation ? 1 : 0;
    rep.classification_mismatches += r.classification_mismatch ? 1 : 0;
    rep.records.push_back(std::move(r));
  }
  return rep;
}

}  // namespace vizing

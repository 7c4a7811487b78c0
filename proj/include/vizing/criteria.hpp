#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vizing/density.hpp"
#include "vizing/error.hpp"
#include "vizing/graph.hpp"

namespace vizing {

/// Uniform result of every closed-form criterion: satisfied <=> lhs >= rhs.
struct CriterionVerdict {
  std::string name;
  bool satisfied = false;
  Rational lhs;
  Rational rhs;
  bool boundary = false;  // lhs == rhs
  /// False when an input falls outside the criterion's hypotheses (e.g. a disconnected host).
  bool in_hypothesis = true;
  std::string note;
};

inline CriterionVerdict make_verdict(std::string name, Rational lhs, Rational rhs) {
  CriterionVerdict v;
  v.name = std::move(name);
  v.satisfied = lhs >= rhs;
  v.boundary = lhs == rhs;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  return v;
}

struct BoundResult {
  std::size_t value = 0;
  bool in_hypothesis = true;
};

/// |A|: side A dominates a connected bipartite graph, so γ <= |A|.
inline BoundResult bipartition_upper_bound(const BipartiteGraph& bg) {
  return {bg.size_a(), is_connected(bg.graph())};
}

/// ceil(n / (Δ+1)) <= γ.
inline std::size_t degree_lower_bound(const Graph& g) {
  const std::size_t d = max_degree(g) + 1;
  return (g.order() + d - 1) / d;
}

/// (1 + |B_G|/|A_G|)(1 + |B_H|/|A_H|) >= Δ(G) + Δ(H) + 1 certifies the pair.
inline CriterionVerdict imbalance_criterion(const BipartiteGraph& bg_g, const BipartiteGraph& bg_h) {
  if (bg_g.size_a() == 0 || bg_h.size_a() == 0)
    throw DegenerateInputError("imbalance criterion needs a nonempty side A");
  Rational lhs = (1 + make_rational(bg_g.size_b(), bg_g.size_a())) * (1 + make_rational(bg_h.size_b(), bg_h.size_a()));
  Rational rhs(max_degree(bg_g.graph()) + max_degree(bg_h.graph()) + 1);
  auto v = make_verdict("imbalance", std::move(lhs), std::move(rhs));
  if (!is_connected(bg_g.graph()) || !is_connected(bg_h.graph())) {
    v.in_hypothesis = false;
    v.note = "out-of-hypothesis: disconnected factor";
  }
  return v;
}

/// (|A_G| + |B_G|) / |A_G| >= (Δ(G) + Δ(H) + 1) ρ_H, for an arbitrary second factor H.
inline CriterionVerdict imbalance_vs_arbitrary(const BipartiteGraph& bg_g, std::size_t delta_h, const Rational& rho_h) {
  if (bg_g.size_a() == 0) throw DegenerateInputError("imbalance criterion needs a nonempty side A");
  Rational lhs = make_rational(bg_g.size_a() + bg_g.size_b(), bg_g.size_a());
  Rational rhs = Rational(max_degree(bg_g.graph()) + delta_h + 1) * rho_h;
  auto v = make_verdict("imbalance-vs-arbitrary", std::move(lhs), std::move(rhs));
  if (!is_connected(bg_g.graph())) {
    v.in_hypothesis = false;
    v.note = "out-of-hypothesis: disconnected factor";
  }
  return v;
}

/// Conjectured bound γ <= 2 ceil(n/k) for balanced k-regular bipartite graphs.
inline std::size_t conjectured_kreg_bound(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw PreconditionError("conjectured bound needs 1 <= k <= n");
  return 2 * ((n + k - 1) / k);
}

/// 1/(2k+1) >= (1/k + 1/n_G)(1/k + 1/n_H).
inline CriterionVerdict threshold_condition(std::size_t k, std::size_t n_g, std::size_t n_h) {
  if (k < 1) throw PreconditionError("threshold condition needs k >= 1");
  if (n_g < k || n_h < k) throw PreconditionError("threshold condition needs n_G, n_H >= k");
  Rational lhs = make_rational(1, 2 * k + 1);
  Rational rhs = (make_rational(1, k) + make_rational(1, n_g)) * (make_rational(1, k) + make_rational(1, n_h));
  return make_verdict("threshold", std::move(lhs), std::move(rhs));
}

struct ThresholdEntry {
  std::size_t k = 0;
  std::size_t n = 0;       // smallest n >= k meeting the threshold condition (non-strict)
  bool boundary = false;   // equality holds at n
  std::size_t strict_n = 0;  // smallest n >= k meeting it strictly
};

/// N(k) for k >= 3 by exact scan upward from n = k.
inline ThresholdEntry n_of_k(std::size_t k) {
  if (k < 3) throw PreconditionError("N(k) is defined for k >= 3");
  ThresholdEntry e{k, 0, false, 0};
  for (std::size_t n = k;; ++n) {
    auto v = threshold_condition(k, n, n);
    if (v.satisfied && e.n == 0) {
      e.n = n;
      e.boundary = v.boundary;
    }
    if (v.satisfied && !v.boundary) {
      e.strict_n = n;
      return e;
    }
  }
}

/// Published reference values of N(k), for side-by-side display.
inline const std::map<std::size_t, std::size_t>& reference_thresholds() {
  static const std::map<std::size_t, std::size_t> table{{3, 23}, {4, 13}, {5, 10}, {6, 10}, {7, 9}, {8, 9}};
  return table;
}

struct ThresholdTable {
  std::vector<ThresholdEntry> entries;
  /// Smallest k from which n = k already satisfies the condition for every larger k in the table.
  std::optional<std::size_t> auto_regime;
};

inline ThresholdTable threshold_table(std::size_t k_max) {
  ThresholdTable t;
  for (std::size_t k = 3; k <= k_max; ++k) t.entries.push_back(n_of_k(k));
  for (auto it = t.entries.rbegin(); it != t.entries.rend() && it->n == it->k; ++it) t.auto_regime = it->k;
  return t;
}

/// 2r for n = k + r, r > 0.
inline std::size_t kreg_order_bound(std::size_t n, std::size_t k) {
  if (n <= k || n <= 1) throw PreconditionError("order bound needs n = k + r with r > 0 and n > 1");
  return 2 * (n - k);
}

struct RemainderSet {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (k, n)
  /// Structural case left open independently of the list: n = k + 2 with γ = 4.
  std::size_t structural_offset = 2;
  std::size_t structural_gamma = 4;

  bool contains(std::size_t k, std::size_t n) const {
    return std::find(pairs.begin(), pairs.end(), std::pair{k, n}) != pairs.end();
  }
};

/// The unresolved balanced k-regular (k, n) pairs.
inline RemainderSet finite_remainder() {
  RemainderSet r;
  for (std::size_t n = 6; n <= 12; ++n) r.pairs.emplace_back(4, n);
  for (std::size_t n = 7; n <= 9; ++n) r.pairs.emplace_back(5, n);
  for (std::size_t n = 8; n <= 9; ++n) r.pairs.emplace_back(6, n);
  return r;
}

}  // namespace vizing

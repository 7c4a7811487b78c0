#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vizing/criteria.hpp"
#include "vizing/density.hpp"
#include "vizing/domination.hpp"
#include "vizing/graph.hpp"
#include "vizing/graph_io.hpp"

namespace vizing {

enum class Side { A, B };

inline const char* to_string(Side s) { return s == Side::A ? "A" : "B"; }

/// How the dominating set D of a bipartite host falls across its two sides.
struct DominationSplit {
  DominatingSet dset;
  VertexSet d_in_a;
  VertexSet d_in_b;
  Rational prop_a;  // |D ∩ A| / |A|, 0 when A is empty
  Rational prop_b;
};

inline DominationSplit domination_split(const BipartiteGraph& bg, const DominatingSet& d) {
  if (!is_dominating(bg.graph(), d.vertices)) throw PreconditionError("domination_split needs a dominating set");
  DominationSplit s{d, d.vertices & bg.side_a(), d.vertices & bg.side_b(), Rational(0), Rational(0)};
  if (bg.size_a() > 0) s.prop_a = make_rational(s.d_in_a.count(), bg.size_a());
  if (bg.size_b() > 0) s.prop_b = make_rational(s.d_in_b.count(), bg.size_b());
  return s;
}

/// Smallest s with s/|X| > ρ_H (strict), provided s <= |D(X)|.
inline std::optional<std::size_t> m_star(std::size_t x_size, std::size_t dx_size, const Rational& rho_h) {
  if (x_size == 0) throw PreconditionError("m_star needs a nonempty side");
  if (dx_size > x_size) throw PreconditionError("m_star needs |D(X)| <= |X|");
  if (rho_h < 0) throw PreconditionError("m_star needs a non-negative density");
  const Rational scaled = rho_h * Rational(x_size);
  const BigInt floor_part = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
  const BigInt s = floor_part + 1;
  if (s > BigInt(dx_size)) return std::nullopt;
  return static_cast<std::size_t>(s);
}

/// Side and target set chosen for the leaf-attachment construction.
struct TransformChoice {
  DominatingSet dset;
  Side side = Side::A;
  std::size_t x_size = 0;
  std::size_t dx_size = 0;
  std::size_t m_star = 0;
  VertexSet targets;  // the m* lowest-indexed members of D(X)
};

struct HypothesisSearch {
  std::size_t gamma = 0;
  bool hypothesis_met = false;
  /// Some side met |D(X)|/|X| >= ρ_H only with equality, so no S satisfies the strict m* definition.
  bool gate_disagreement = false;
  std::size_t sets_examined = 0;
  std::optional<TransformChoice> choice;
};

/// Largest host order for which every minimum dominating set is examined;
/// above it only the solver's witness is used.
inline constexpr std::size_t kMinimumSetSweepOrder = 14;

/// Looks for a minimum dominating set and side X with |D(X)|/|X| >= ρ_H and
/// picks the pair minimising m* (ties: side A, then the lexicographically
/// first dominating set).
inline HypothesisSearch select_transform(const BipartiteGraph& bg, const Rational& rho_h) {
  const Graph& g = bg.graph();
  auto solved = gamma_exact(g);
  HypothesisSearch out;
  out.gamma = solved.gamma;
  std::vector<DominatingSet> candidates;
  if (g.order() <= kMinimumSetSweepOrder) candidates = all_minimum_dominating_sets(g, solved.gamma);
  else candidates.push_back(solved.witness);
  out.sets_examined = candidates.size();

  for (const auto& d : candidates) {
    for (Side side : {Side::A, Side::B}) {
      const VertexSet& x = side == Side::A ? bg.side_a() : bg.side_b();
      const std::size_t x_size = x.count();
      if (x_size == 0) continue;
      const VertexSet dx = d.vertices & x;
      const std::size_t dx_size = dx.count();
      const bool gate = make_rational(dx_size, x_size) >= rho_h;
      if (!gate) continue;
      out.hypothesis_met = true;
      auto m = m_star(x_size, dx_size, rho_h);
      if (!m) {
        out.gate_disagreement = true;
        continue;
      }
      if (out.choice && out.choice->m_star <= *m) continue;
      auto members = dx.members();
      members.resize(*m);
      out.choice = TransformChoice{d, side, x_size, dx_size, *m, VertexSet::of(g.order(), members)};
    }
  }
  return out;
}

struct ConstructiveReport {
  bool hypothesis_met = false;
  bool gate_disagreement = false;
  std::size_t gamma_g = 0;
  std::size_t gamma_h = 0;
  std::size_t gamma_product = 0;
  std::size_t order_h = 0;
  Density rho_h;
  std::optional<TransformChoice> choice;
  std::size_t lhs = 0;  // γ(G□H) + m*·|V(H)|
  std::size_t rhs = 0;  // γ(G)·γ(H)
  bool holds = false;
};

/// γ(G□H) + m*·|V(H)| >= γ(G)γ(H), every term computed exactly.
inline ConstructiveReport constructive_inequality_check(const BipartiteGraph& bg, const Graph& h,
                                                        const VizingOptions& opts = {}) {
  const Graph& g = bg.graph();
  auto product = cartesian_product(g, h, opts.vertex_limit);
  ConstructiveReport r;
  r.order_h = h.order();
  r.gamma_h = gamma_number(h, opts.cache);
  r.rho_h = make_density(r.gamma_h, h.order());
  auto search = select_transform(bg, r.rho_h.value);
  r.gamma_g = search.gamma;
  r.hypothesis_met = search.hypothesis_met;
  r.gate_disagreement = search.gate_disagreement;
  r.choice = search.choice;
  r.gamma_product = gamma_number(product.graph, opts.cache);
  r.rhs = r.gamma_g * r.gamma_h;
  if (r.choice) {
    r.lhs = r.gamma_product + r.choice->m_star * r.order_h;
    r.holds = r.lhs >= r.rhs;
  }
  return r;
}

struct TraceRound {
  std::size_t round = 0;
  std::string graph_key;  // graph6 of G^(t)
  std::size_t order = 0;
  std::size_t max_degree = 0;
  std::size_t x_size = 0;         // |X|, fixed across rounds
  std::size_t opposite_size = 0;  // |V(G^(t))| - |X|
  std::size_t a_size = 0;         // normalised bipartition of G^(t)
  std::size_t b_size = 0;
  /// |V(G^(t))|/|X| >= (Δ(G^(t)) + Δ(H) + 1) ρ_H with X held fixed.
  CriterionVerdict verdict;
  /// imbalance_vs_arbitrary on the re-normalised bipartition of G^(t).
  CriterionVerdict normalized_verdict;
  /// X is no longer the smaller side, so the |A| <= |B| normalisation would relabel it.
  bool relabeled = false;
  std::size_t gamma = 0;
  bool gamma_by_brute_force = false;
};

struct TransformTrace {
  bool hypothesis_met = false;
  bool gate_disagreement = false;
  std::optional<TransformChoice> choice;
  std::vector<TraceRound> rounds;
  std::optional<std::size_t> final_round;  // first satisfied round
  /// Termination bound from the slopes: ceil((rhs0 - lhs0) / (m*/|X| - ρ_H)) + 1.
  std::size_t round_bound = 0;
  bool gamma_invariant = true;
  std::string policy = "reuse-targets";
};

inline CriterionVerdict fixed_side_verdict(std::size_t order, std::size_t x_size, std::size_t delta_g,
                                           std::size_t delta_h, const Rational& rho_h) {
  return make_verdict("imbalance-fixed-side", make_rational(order, x_size), Rational(delta_g + delta_h + 1) * rho_h);
}

/// Repeatedly attaches one leaf to each target in S (the same S every round)
/// until the fixed-side imbalance condition holds or `max_rounds` attachments
/// have been made. γ is recomputed every round.
inline TransformTrace iterate_leaves(const BipartiteGraph& bg, std::size_t delta_h, const Rational& rho_h,
                                     std::size_t max_rounds) {
  if (max_rounds < 1) throw PreconditionError("iterate_leaves needs max_rounds >= 1");
  TransformTrace trace;
  auto search = select_transform(bg, rho_h);
  trace.hypothesis_met = search.hypothesis_met;
  trace.gate_disagreement = search.gate_disagreement;
  trace.choice = search.choice;
  if (!search.choice) return trace;
  const auto& choice = *search.choice;
  const std::size_t gamma0 = search.gamma;

  {
    auto v0 = fixed_side_verdict(bg.graph().order(), choice.x_size, max_degree(bg.graph()), delta_h, rho_h);
    const Rational slope = make_rational(choice.m_star, choice.x_size) - rho_h;
    std::size_t steps = 0;
    if (v0.rhs > v0.lhs) {
      const Rational q = (v0.rhs - v0.lhs) / slope;
      const BigInt num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
      steps = static_cast<std::size_t>((num + den - 1) / den);
    }
    trace.round_bound = steps + 1;
  }

  Graph current = bg.graph();
  VertexSet targets = choice.targets;
  for (std::size_t t = 0;; ++t) {
    TraceRound r;
    r.round = t;
    r.graph_key = emit_graph6(current);
    r.order = current.order();
    r.max_degree = max_degree(current);
    r.x_size = choice.x_size;
    r.opposite_size = r.order - r.x_size;
    r.relabeled = r.x_size > r.opposite_size;
    r.verdict = fixed_side_verdict(r.order, r.x_size, r.max_degree, delta_h, rho_h);
    if (auto grown = bipartition(current)) {
      r.a_size = grown->size_a();
      r.b_size = grown->size_b();
      r.normalized_verdict = imbalance_vs_arbitrary(*grown, delta_h, rho_h);
    }
    r.gamma_by_brute_force = current.order() <= kBruteForceMaxOrder;
    r.gamma = r.gamma_by_brute_force ? gamma_brute(current) : gamma_exact(current, {.lex_min_witness = false}).gamma;
    if (r.gamma != gamma0) trace.gamma_invariant = false;
    const bool satisfied = r.verdict.satisfied;
    trace.rounds.push_back(std::move(r));
    if (satisfied) {
      trace.final_round = t;
      break;
    }
    if (t == max_rounds) break;
    current = attach_leaves(current, targets.widened(current.order()));
  }
  return trace;
}

}  // namespace vizing

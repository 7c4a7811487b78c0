#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "vizing/error.hpp"
#include "vizing/graph.hpp"
#include "vizing/graph_io.hpp"
#include "vizing/vertex_set.hpp"

namespace vizing {

struct DominatingSet {
  VertexSet vertices;
  std::size_t size = 0;

  DominatingSet() = default;
  explicit DominatingSet(VertexSet v) : vertices(std::move(v)), size(vertices.count()) {}
};

/// True iff the closed neighbourhoods of `s` cover V(g).
inline bool is_dominating(const Graph& g, const VertexSet& s) {
  VertexSet covered(g.order());
  s.for_each([&](Vertex v) {
    covered |= g.neighbors(v);
    covered.set(v);
  });
  return covered.count() == g.order();
}

struct GammaOptions {
  /// Replace the first optimal witness by the lexicographically smallest one
  /// (ascending member lists compared lexicographically).
  bool lex_min_witness = true;
};

struct GammaResult {
  std::size_t gamma = 0;
  DominatingSet witness;
};

namespace detail {

/// Exact minimum dominating set by branch and bound.
///
/// Each node picks the undominated vertex with the fewest admissible
/// dominators and branches on those dominators (most new coverage first, then
/// higher degree, then lower index). A dominator that has been fully explored
/// is forbidden in later sibling branches. Nodes are pruned by two lower
/// bounds on the remaining cost:
///   - ceil(|U| / c) where c is the largest number of undominated vertices a
///     single admissible vertex still covers (at most Δ+1);
///   - a greedy packing of undominated vertices whose admissible dominator
///     sets are pairwise disjoint (a 2-packing of the uncovered region).
class DominationSolver {
 public:
  explicit DominationSolver(const Graph& g) : g_(g), n_(g.order()) {
    closed_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) closed_.push_back(g.closed_neighborhood(v));
  }

  GammaResult solve(const GammaOptions& opts) {
    seed_with_greedy();
    VertexSet chosen(n_);
    search(VertexSet::full(n_), VertexSet::full(n_), chosen, 0);
    GammaResult result{best_size_, DominatingSet(best_)};
    if (opts.lex_min_witness && best_size_ > 0) {
      VertexSet lex(n_);
      if (lex_search(0, VertexSet::full(n_), lex, 0)) result.witness = DominatingSet(lex);
    }
    return result;
  }

 private:
  static constexpr std::size_t kInfeasible = std::numeric_limits<std::size_t>::max() / 2;

  void seed_with_greedy() {
    VertexSet undominated = VertexSet::full(n_);
    VertexSet chosen(n_);
    while (undominated.any()) {
      std::size_t best_v = 0, best_gain = 0;
      for (Vertex v = 0; v < n_; ++v) {
        auto gain = closed_[v].intersection_count(undominated);
        if (gain > best_gain) best_gain = gain, best_v = v;
      }
      chosen.set(best_v);
      undominated.subtract(closed_[best_v]);
    }
    // Drop redundant members, highest index first.
    auto members = chosen.members();
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
      chosen.reset(*it);
      if (!dominates(chosen)) chosen.set(*it);
    }
    best_ = chosen;
    best_size_ = chosen.count();
  }

  bool dominates(const VertexSet& s) const {
    VertexSet covered(n_);
    s.for_each([&](Vertex v) { covered |= closed_[v]; });
    return covered.count() == n_;
  }

  std::size_t lower_bound(const VertexSet& undominated, const VertexSet& allowed) const {
    const std::size_t remaining = undominated.count();
    if (remaining == 0) return 0;
    std::size_t max_cover = 0;
    allowed.for_each([&](Vertex v) { max_cover = std::max(max_cover, closed_[v].intersection_count(undominated)); });
    if (max_cover == 0) return kInfeasible;
    const std::size_t by_degree = (remaining + max_cover - 1) / max_cover;

    scratch_.clear();
    bool stuck = false;
    undominated.for_each([&](Vertex u) {
      auto c = closed_[u].intersection_count(allowed);
      if (c == 0) stuck = true;
      scratch_.emplace_back(c, u);
    });
    if (stuck) return kInfeasible;
    std::sort(scratch_.begin(), scratch_.end());
    VertexSet used(n_);
    std::size_t packing = 0;
    for (auto [c, u] : scratch_) {
      VertexSet cand = closed_[u] & allowed;
      if (!cand.intersects(used)) {
        used |= cand;
        ++packing;
      }
    }
    return std::max(by_degree, packing);
  }

  void search(const VertexSet& undominated, VertexSet allowed, VertexSet& chosen, std::size_t depth) {
    if (undominated.none()) {
      if (depth < best_size_) {
        best_size_ = depth;
        best_ = chosen;
      }
      return;
    }
    if (depth + 1 >= best_size_) return;
    if (depth + lower_bound(undominated, allowed) >= best_size_) return;

    Vertex pivot = VertexSet::npos;
    std::size_t pivot_options = std::numeric_limits<std::size_t>::max();
    undominated.for_each([&](Vertex u) {
      auto c = closed_[u].intersection_count(allowed);
      if (c < pivot_options) pivot_options = c, pivot = u;
    });
    if (pivot_options == 0) return;

    std::vector<std::pair<std::size_t, Vertex>> branches;
    (closed_[pivot] & allowed).for_each([&](Vertex v) { branches.emplace_back(closed_[v].intersection_count(undominated), v); });
    std::sort(branches.begin(), branches.end(), [&](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first > y.first;
      auto dx = closed_[x.second].count(), dy = closed_[y.second].count();
      if (dx != dy) return dx > dy;
      return x.second < y.second;
    });

    for (auto [gain, v] : branches) {
      chosen.set(v);
      search(undominated - closed_[v], allowed, chosen, depth + 1);
      chosen.reset(v);
      allowed.reset(v);
      if (depth + 1 >= best_size_) return;
    }
  }

  // Include-first search in vertex index order for a dominating set of size best_size_.
  // The first hit is the lexicographically smallest optimal witness.
  bool lex_search(Vertex i, const VertexSet& undominated, VertexSet& chosen, std::size_t depth) {
    if (undominated.none()) return true;
    if (depth == best_size_ || i == n_) return false;
    VertexSet allowed(n_);
    for (Vertex v = i; v < n_; ++v) allowed.set(v);
    if (depth + lower_bound(undominated, allowed) > best_size_) return false;
    if (closed_[i].intersects(undominated)) {
      chosen.set(i);
      if (lex_search(i + 1, undominated - closed_[i], chosen, depth + 1)) return true;
      chosen.reset(i);
    }
    return lex_search(i + 1, undominated, chosen, depth);
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<VertexSet> closed_;
  VertexSet best_;
  std::size_t best_size_ = 0;
  mutable std::vector<std::pair<std::size_t, Vertex>> scratch_;
};

}  // namespace detail

/// γ(g) with a minimum dominating set witness.
inline GammaResult gamma_exact(const Graph& g, const GammaOptions& opts = {}) {
  return detail::DominationSolver(g).solve(opts);
}

inline constexpr std::size_t kBruteForceMaxOrder = 24;

/// γ(g) by enumerating subsets in increasing size. Independent of gamma_exact.
inline std::size_t gamma_brute(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kBruteForceMaxOrder)
    throw CapacityError("brute-force domination limited to " + std::to_string(kBruteForceMaxOrder) + " vertices");
  std::vector<std::uint32_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = std::uint32_t{1} << v;
    g.neighbors(v).for_each([&](Vertex w) { closed[v] |= std::uint32_t{1} << w; });
  }
  const std::uint32_t all = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  for (std::size_t size = 1; size <= n; ++size) {
    std::uint32_t subset = static_cast<std::uint32_t>((std::uint64_t{1} << size) - 1);
    while (subset <= all) {
      std::uint32_t covered = 0;
      for (std::uint32_t rest = subset; rest; rest &= rest - 1) covered |= closed[std::countr_zero(rest)];
      if (covered == all) return size;
      // Gosper's hack: next subset of the same size.
      const std::uint32_t low = subset & (~subset + 1);
      const std::uint64_t ripple = std::uint64_t{subset} + low;
      if (ripple > all) break;
      subset = static_cast<std::uint32_t>(ripple | (((ripple ^ subset) >> 2) / low));
    }
  }
  return n;
}

/// Every dominating set of size γ(g). Exhaustive, so guarded like gamma_brute.
inline std::vector<DominatingSet> all_minimum_dominating_sets(const Graph& g, std::size_t gamma) {
  const std::size_t n = g.order();
  if (n > kBruteForceMaxOrder) throw CapacityError("minimum dominating set sweep limited to 24 vertices");
  std::vector<DominatingSet> out;
  std::vector<Vertex> pick(gamma);
  std::iota(pick.begin(), pick.end(), Vertex{0});
  if (gamma == 0 || gamma > n) return out;
  while (true) {
    VertexSet s = VertexSet::of(n, pick);
    if (is_dominating(g, s)) out.emplace_back(std::move(s));
    std::size_t i = gamma;
    while (i > 0 && pick[i - 1] == n - gamma + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < gamma; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

/// Persistent map from graph key to γ, stored as an append-only text log of
/// "key value" lines. Unparseable lines (e.g. a torn final write) are skipped on load.
class GammaCache {
 public:
  GammaCache() = default;
  explicit GammaCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::string key;
      std::size_t value = 0;
      std::string extra;
      if (fields >> key >> value && !(fields >> extra)) entries_[key] = value;
    }
  }

  static std::string key_for(const Graph& g) { return "g6:" + emit_graph6(g); }

  std::optional<std::size_t> lookup(const std::string& key) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    ++hits_;
    return it->second;
  }

  void store(const std::string& key, std::size_t value) {
    std::lock_guard lock(mutex_);
    if (!entries_.emplace(key, value).second) return;
    if (!path_.empty()) {
      std::ofstream out(path_, std::ios::app);
      out << key << ' ' << value << '\n';
    }
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
  }
  std::size_t hits() const {
    std::lock_guard lock(mutex_);
    return hits_;
  }

 private:
  std::string path_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, std::size_t> entries_;
  mutable std::size_t hits_ = 0;
};

/// γ(g), consulting and filling the cache when one is given.
inline std::size_t gamma_number(const Graph& g, GammaCache* cache = nullptr) {
  if (cache == nullptr) return gamma_exact(g, {.lex_min_witness = false}).gamma;
  const auto key = GammaCache::key_for(g);
  if (auto hit = cache->lookup(key)) return *hit;
  const auto gamma = gamma_exact(g, {.lex_min_witness = false}).gamma;
  cache->store(key, gamma);
  return gamma;
}

struct VizingReport {
  std::size_t gamma_g = 0;
  std::size_t gamma_h = 0;
  std::size_t gamma_product = 0;
  bool holds = false;
  DominatingSet witness_g;
  DominatingSet witness_h;
  /// Absent when γ(G□H) came from the cache.
  std::optional<DominatingSet> witness_product;
};

struct VizingOptions {
  std::size_t vertex_limit = kDefaultVertexLimit;
  GammaCache* cache = nullptr;
};

/// Evaluates γ(G□H) >= γ(G)γ(H) exactly.
inline VizingReport check_vizing(const Graph& g, const Graph& h, const VizingOptions& opts = {}) {
  auto product = cartesian_product(g, h, opts.vertex_limit);
  VizingReport r;
  auto rg = gamma_exact(g);
  auto rh = gamma_exact(h);
  r.gamma_g = rg.gamma;
  r.gamma_h = rh.gamma;
  r.witness_g = std::move(rg.witness);
  r.witness_h = std::move(rh.witness);
  std::optional<std::size_t> cached;
  std::string key;
  if (opts.cache != nullptr) {
    key = GammaCache::key_for(product.graph);
    cached = opts.cache->lookup(key);
  }
  if (cached) {
    r.gamma_product = *cached;
  } else {
    auto rp = gamma_exact(product.graph, {.lex_min_witness = false});
    r.gamma_product = rp.gamma;
    r.witness_product = std::move(rp.witness);
    if (opts.cache != nullptr) opts.cache->store(key, rp.gamma);
  }
  r.holds = r.gamma_product >= r.gamma_g * r.gamma_h;
  return r;
}

}  // namespace vizing

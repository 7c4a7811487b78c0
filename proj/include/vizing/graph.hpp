#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vizing/error.hpp"
#include "vizing/vertex_set.hpp"

namespace vizing {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Default ceiling on the order of constructed product graphs.
inline constexpr std::size_t kDefaultVertexLimit = 4096;

/// Simple undirected graph stored as open-neighbourhood bitsets.
/// Immutable once built; always has at least one vertex.
class Graph {
 public:
  Graph(std::size_t n, std::span<const Edge> edges) : neighbors_(checked_order(n), VertexSet(n)) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") out of range for order " + std::to_string(n));
      if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
      neighbors_[u].set(v);
      neighbors_[v].set(u);
    }
  }
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : neighbors_(checked_order(n), VertexSet(n)) {}

  std::size_t order() const noexcept { return neighbors_.size(); }
  const VertexSet& neighbors(Vertex v) const { return neighbors_[v]; }
  VertexSet closed_neighborhood(Vertex v) const {
    VertexSet s = neighbors_[v];
    s.set(v);
    return s;
  }
  bool adjacent(Vertex u, Vertex v) const { return neighbors_[u].test(v); }
  std::size_t degree(Vertex v) const { return neighbors_[v].count(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : neighbors_) twice += nb.count();
    return twice / 2;
  }

  /// Edges (u, v) with u < v in ascending lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      for (auto v = neighbors_[u].next(u + 1); v != VertexSet::npos; v = neighbors_[u].next(v + 1))
        out.emplace_back(u, v);
    return out;
  }

  VertexSet all_vertices() const { return VertexSet::full(order()); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.neighbors_ == b.neighbors_; }

 private:
  static std::size_t checked_order(std::size_t n) {
    if (n == 0) throw PreconditionError("graph must have at least one vertex");
    return n;
  }

  std::vector<VertexSet> neighbors_;
};

/// Δ(G); 0 for edgeless graphs.
inline std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

inline std::size_t min_degree(const Graph& g) {
  std::size_t d = g.order();
  for (Vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

/// Degree if every vertex has the same degree.
inline std::optional<std::size_t> regular_degree(const Graph& g) {
  auto d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

/// Connected components, each listed in ascending vertex order; components ordered by lowest vertex.
inline std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  VertexSet seen(g.order());
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen.test(root)) continue;
    std::vector<Vertex> comp{root};
    seen.set(root);
    for (std::size_t i = 0; i < comp.size(); ++i)
      g.neighbors(comp[i]).for_each([&](Vertex w) {
        if (!seen.test(w)) {
          seen.set(w);
          comp.push_back(w);
        }
      });
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

/// A graph together with a certified bipartition (A, B), |A| <= |B|.
class BipartiteGraph {
 public:
  const Graph& graph() const noexcept { return graph_; }
  const VertexSet& side_a() const noexcept { return side_a_; }
  const VertexSet& side_b() const noexcept { return side_b_; }
  std::size_t size_a() const { return side_a_.count(); }
  std::size_t size_b() const { return side_b_.count(); }
  bool in_a(Vertex v) const { return side_a_.test(v); }

 private:
  BipartiteGraph(Graph g, VertexSet a, VertexSet b)
      : graph_(std::move(g)), side_a_(std::move(a)), side_b_(std::move(b)) {}
  friend std::optional<BipartiteGraph> bipartition(const Graph& g);

  Graph graph_;
  VertexSet side_a_;
  VertexSet side_b_;
};

/// Deterministic two-colouring, or nullopt when g has an odd cycle.
///
/// Components are processed in order of their lowest vertex. The colour class
/// holding that lowest vertex joins A when doing so keeps |A| <= |B| (ties go
/// to A), otherwise it joins B. The running totals therefore never violate
/// |A| <= |B|.
inline std::optional<BipartiteGraph> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  VertexSet a(n), b(n);
  std::size_t size_a = 0, size_b = 0;
  for (const auto& comp : components(g)) {
    colour[comp.front()] = 0;
    std::vector<Vertex> queue{comp.front()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex u = queue[i];
      bool odd = false;
      g.neighbors(u).for_each([&](Vertex w) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          odd = true;
        }
      });
      if (odd) return std::nullopt;
    }
    std::size_t p = 0, q = 0;
    for (auto v : comp) (colour[v] == 0 ? p : q) += 1;
    const bool lowest_to_a = size_a + p <= size_b + q;
    for (auto v : comp) {
      const bool to_a = (colour[v] == 0) == lowest_to_a;
      (to_a ? a : b).set(v);
    }
    size_a += lowest_to_a ? p : q;
    size_b += lowest_to_a ? q : p;
  }
  return BipartiteGraph(g, std::move(a), std::move(b));
}

/// Cartesian product G□H with row-major labelling: (g, h) -> g * |V(H)| + h.
struct LabeledProduct {
  Graph graph;
  std::size_t g_order;
  std::size_t h_order;

  Vertex index_of(Vertex g, Vertex h) const { return g * h_order + h; }
  std::pair<Vertex, Vertex> coords(Vertex v) const { return {v / h_order, v % h_order}; }
};

inline LabeledProduct cartesian_product(const Graph& g, const Graph& h,
                                        std::size_t vertex_limit = kDefaultVertexLimit) {
  const std::size_t ng = g.order(), nh = h.order();
  if (ng > vertex_limit / nh)
    throw CapacityError("product order " + std::to_string(ng) + "x" + std::to_string(nh) +
                        " exceeds vertex limit " + std::to_string(vertex_limit));
  std::vector<Edge> edges;
  edges.reserve(ng * h.edge_count() + nh * g.edge_count());
  for (Vertex x = 0; x < ng; ++x)
    for (auto [u, v] : h.edges()) edges.emplace_back(x * nh + u, x * nh + v);
  for (auto [u, v] : g.edges())
    for (Vertex y = 0; y < nh; ++y) edges.emplace_back(u * nh + y, v * nh + y);
  return LabeledProduct{Graph(ng * nh, edges), ng, nh};
}

/// Appends one pendant vertex per target, in ascending target order.
inline Graph attach_leaves(const Graph& g, const VertexSet& targets) {
  const std::size_t n = g.order();
  auto edges = g.edges();
  std::size_t next = n;
  targets.for_each([&](Vertex v) {
    if (v >= n) throw PreconditionError("leaf target " + std::to_string(v) + " out of range");
    edges.emplace_back(v, next++);
  });
  if (next == n) return g;
  return Graph(next, edges);
}

/// Vertex-disjoint union; vertices of h are shifted by |V(g)|.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  auto edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
  return Graph(g.order() + h.order(), edges);
}

}  // namespace vizing

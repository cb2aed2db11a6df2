#pragma once

// Finite multigraphs with an explicit edge order.
//
// Loops and parallel edges are ordinary values here. The position of an edge
// in edges() is part of the graph's identity: two graphs with the same edge
// multiset in different orders compare unequal, although their cohomology
// agrees.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chromcoh/error.hpp"

namespace chromcoh {

using Vertex = std::uint32_t;

struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  bool is_loop() const noexcept { return a == b; }
  Vertex lo() const noexcept { return std::min(a, b); }
  Vertex hi() const noexcept { return std::max(a, b); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Subset of edge positions: bit k set iff edge k belongs to the subset.
struct StateLabel {
  std::uint64_t bits = 0;

  int height() const noexcept { return std::popcount(bits); }
  bool contains(std::size_t edge) const noexcept { return (bits >> edge) & 1U; }
  StateLabel with(std::size_t edge) const noexcept { return {bits | (std::uint64_t{1} << edge)}; }

  friend auto operator<=>(const StateLabel&, const StateLabel&) = default;
};

// Largest edge count representable by a StateLabel.
inline constexpr std::size_t kMaxEdges = 63;

// Components of a spanning subgraph. Ids are 0..count-1, assigned in order of
// each component's smallest vertex.
struct ComponentPartition {
  std::vector<std::uint32_t> component_of;
  std::uint32_t count = 0;

  friend bool operator==(const ComponentPartition&, const ComponentPartition&) = default;
};

class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t vertex_count, std::vector<Edge> edges = {})
      : vertex_count_(vertex_count), edges_(std::move(edges)) {
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const Edge& e = edges_[k];
      if (e.a >= vertex_count_ || e.b >= vertex_count_) {
        throw std::out_of_range("edge " + std::to_string(k) + " has endpoint outside 0.." +
                                std::to_string(vertex_count_) + ")");
      }
    }
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t k) const { return edges_.at(k); }

  bool has_loop() const noexcept {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
  }

  // Loops contribute 2.
  std::size_t degree(Vertex v) const noexcept {
    std::size_t d = 0;
    for (const Edge& e : edges_) d += (e.a == v) + (e.b == v);
    return d;
  }

  StateLabel full_state() const noexcept {
    return {edges_.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges_.size()) - 1};
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

namespace detail {

// Union-find over vertex indices, union by smaller root.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }

  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

inline void require_edge_index(const Graph& g, std::size_t e) {
  if (e >= g.edge_count()) {
    throw std::out_of_range("edge index " + std::to_string(e) + " out of range (graph has " +
                            std::to_string(g.edge_count()) + " edges)");
  }
}

}  // namespace detail

// Components of [g:s], the spanning subgraph keeping only the edges in s.
inline ComponentPartition components(const Graph& g, StateLabel s) {
  const std::size_t v = g.vertex_count();
  detail::DisjointSets sets(v);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (s.contains(k)) sets.unite(g.edge(k).a, g.edge(k).b);
  }
  ComponentPartition p;
  p.component_of.resize(v);
  // Roots are minimal vertices, so a root is first reached at its own index.
  std::vector<std::uint32_t> id_of_root(v, 0);
  for (std::uint32_t u = 0; u < v; ++u) {
    const std::uint32_t r = sets.find(u);
    if (r == u) id_of_root[u] = p.count++;
    p.component_of[u] = id_of_root[r];
  }
  return p;
}

inline std::size_t component_count(const Graph& g) { return components(g, g.full_state()).count; }

// G - e: remaining edges keep their relative order.
inline Graph delete_edge(const Graph& g, std::size_t e) {
  detail::require_edge_index(g, e);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
  return Graph(g.vertex_count(), std::move(edges));
}

// Inverse of delete_edge: places `edge` at position `pos`.
inline Graph insert_edge(const Graph& g, std::size_t pos, Edge edge) {
  if (pos > g.edge_count()) throw std::out_of_range("insert position out of range");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.insert(edges.begin() + static_cast<std::ptrdiff_t>(pos), edge);
  return Graph(g.vertex_count(), std::move(edges));
}

// G / e: the larger endpoint is merged into the smaller one and vertices above
// it shift down by one. Parallel copies of e become loops.
inline Graph contract_edge(const Graph& g, std::size_t e) {
  detail::require_edge_index(g, e);
  const Edge target = g.edge(e);
  if (target.is_loop()) {
    throw LoopContractionError("cannot contract loop at edge " + std::to_string(e));
  }
  const Vertex keep = target.lo();
  const Vertex gone = target.hi();
  auto remap = [&](Vertex u) -> Vertex {
    if (u == gone) return keep;
    return u > gone ? u - 1 : u;
  };
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (k == e) continue;
    edges.push_back({remap(g.edge(k).a), remap(g.edge(k).b)});
  }
  return Graph(g.vertex_count() - 1, std::move(edges));
}

struct Simplified {
  Graph graph;
  bool has_loop = false;
};

// Drops parallel duplicates, keeping the earliest copy. Loops stay.
inline Simplified simplify(const Graph& g) {
  std::vector<Edge> kept;
  std::vector<std::pair<Vertex, Vertex>> seen;
  for (const Edge& e : g.edges()) {
    const std::pair<Vertex, Vertex> key{e.lo(), e.hi()};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    kept.push_back(e);
  }
  return {Graph(g.vertex_count(), std::move(kept)), g.has_loop()};
}

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  const auto shift = static_cast<Vertex>(g1.vertex_count());
  for (const Edge& e : g2.edges()) edges.push_back({e.a + shift, e.b + shift});
  return Graph(g1.vertex_count() + g2.vertex_count(), std::move(edges));
}

// G_sigma: the edge at position k of g lands at position sigma[k].
inline Graph permute_edge_order(const Graph& g, std::span<const std::size_t> sigma) {
  const std::size_t n = g.edge_count();
  if (sigma.size() != n) throw std::invalid_argument("permutation length does not match edge count");
  std::vector<Edge> edges(n);
  std::vector<bool> hit(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    if (sigma[k] >= n || hit[sigma[k]]) throw std::invalid_argument("sigma is not a permutation");
    hit[sigma[k]] = true;
    edges[sigma[k]] = g.edge(k);
  }
  return Graph(g.vertex_count(), std::move(edges));
}

inline std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> sigma) {
  std::vector<std::size_t> inv(sigma.size());
  for (std::size_t k = 0; k < sigma.size(); ++k) inv.at(sigma[k]) = k;
  return inv;
}

// Permutation sending edge e to the last position, others keeping order.
inline std::vector<std::size_t> move_to_last(std::size_t n, std::size_t e) {
  std::vector<std::size_t> sigma(n);
  for (std::size_t k = 0; k < n; ++k) sigma[k] = k < e ? k : k - 1;
  sigma.at(e) = n - 1;
  return sigma;
}

}  // namespace chromcoh

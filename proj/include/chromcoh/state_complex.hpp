#pragma once

// Enhanced-state cochain complex of a graph.
//
// An enhanced state is a pair (s, c): an edge subset s and a coloring of each
// component of [G:s] by 1 or x. Bidegree is (|s|, number of x). The cochain
// group C^{i,j} is free on the enhanced states of bidegree (i, j) and the
// differential adds one absent edge at a time:
//
//   d(S) = sum over e not in s of (-1)^{n(e)} S_e
//
// where n(e) counts the edges of s ordered before e, and S_e multiplies the
// colors of the two components joined by e (1*1 = 1, 1*x = x*1 = x,
// x*x = 0). An edge inside one component keeps the coloring.
//
// Colorings are bitmasks over canonical component ids (bit l set means
// component l is colored x). Each bidegree bucket is sorted by
// (state bits, coloring), which fixes the matrix bases.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromcoh/error.hpp"
#include "chromcoh/graph.hpp"
#include "chromcoh/sparse_matrix.hpp"

namespace chromcoh {

struct Limits {
  std::size_t max_edges = 20;
  std::size_t max_basis = std::size_t{1} << 24;
};

struct Bidegree {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

struct EnhancedState {
  StateLabel state;
  std::uint64_t coloring = 0;

  int i() const noexcept { return state.height(); }
  int j() const noexcept { return std::popcount(coloring); }

  friend auto operator<=>(const EnhancedState&, const EnhancedState&) = default;
};

namespace detail {

// Coloring of [G:s + e] induced from the coloring of [G:s]; nullopt for x*x.
inline std::optional<std::uint64_t> push_coloring(std::span<const std::uint32_t> before,
                                                  std::span<const std::uint32_t> after,
                                                  std::uint32_t components_before, const Edge& e,
                                                  std::uint64_t coloring) {
  const std::uint32_t ca = before[e.a];
  const std::uint32_t cb = before[e.b];
  if (ca != cb && ((coloring >> ca) & 1U) && ((coloring >> cb) & 1U)) return std::nullopt;
  std::uint64_t out = 0;
  std::uint32_t next_id = 0;
  // The first vertex carrying a given id is that component's minimal vertex.
  for (std::size_t u = 0; u < before.size() && next_id < components_before; ++u) {
    if (before[u] != next_id) continue;
    if ((coloring >> next_id) & 1U) out |= std::uint64_t{1} << after[u];
    ++next_id;
  }
  return out;
}

inline int sign_before(StateLabel s, std::size_t e) {
  const std::uint64_t below = s.bits & ((std::uint64_t{1} << e) - 1);
  return std::popcount(below) % 2 ? -1 : 1;
}

inline void require_budget(const Graph& g, const Limits& limits) {
  const std::size_t cap = std::min(limits.max_edges, kMaxEdges);
  if (g.edge_count() > cap) {
    throw CapacityError("graph has " + std::to_string(g.edge_count()) + " edges; edge budget is " +
                        std::to_string(cap));
  }
}

}  // namespace detail

class BasisIndex {
 public:
  static BasisIndex build(const Graph& g, const Limits& limits = {}) {
    detail::require_budget(g, limits);
    const std::size_t n = g.edge_count();
    const std::size_t v = g.vertex_count();
    // The empty state alone contributes 2^v colorings.
    if (v >= 63 || (std::size_t{1} << v) > limits.max_basis) {
      throw CapacityError("graph has " + std::to_string(v) + " vertices; basis budget " +
                          std::to_string(limits.max_basis) + " is exceeded by the 2^v empty-state colorings");
    }

    BasisIndex b;
    b.edges_ = n;
    b.vertices_ = v;
    const std::size_t subsets = std::size_t{1} << n;
    b.component_of_.resize(subsets * v);
    b.component_count_.resize(subsets);

    std::size_t total = 0;
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
      const ComponentPartition p = components(g, {bits});
      std::copy(p.component_of.begin(), p.component_of.end(), b.component_of_.begin() + bits * v);
      b.component_count_[bits] = p.count;
      total += std::size_t{1} << p.count;
      if (total > limits.max_basis) {
        throw CapacityError("enhanced-state basis exceeds budget of " + std::to_string(limits.max_basis) +
                            " states (" + std::to_string(n) + " edges, " + std::to_string(v) + " vertices)");
      }
    }

    b.buckets_.assign((n + 1) * (v + 1), {});
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
      const int i = std::popcount(bits);
      const std::uint64_t colorings = std::uint64_t{1} << b.component_count_[bits];
      for (std::uint64_t c = 0; c < colorings; ++c) {
        b.buckets_[b.slot(i, std::popcount(c))].push_back({{bits}, c});
      }
    }
    b.total_ = total;
    return b;
  }

  std::size_t edge_count() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_; }
  std::size_t total_size() const noexcept { return total_; }

  // Basis of C^{i,j}; empty outside 0..n x 0..v.
  std::span<const EnhancedState> at(int i, int j) const noexcept {
    if (!in_range(i, j)) return {};
    return buckets_[slot(i, j)];
  }

  std::size_t size(int i, int j) const noexcept { return at(i, j).size(); }

  std::optional<std::size_t> position(const EnhancedState& s) const {
    const auto bucket = at(s.i(), s.j());
    auto it = std::lower_bound(bucket.begin(), bucket.end(), s);
    if (it == bucket.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - bucket.begin());
  }

  std::span<const std::uint32_t> component_of(StateLabel s) const {
    return std::span<const std::uint32_t>(component_of_).subspan(s.bits * vertices_, vertices_);
  }
  std::uint32_t component_count(StateLabel s) const { return component_count_.at(s.bits); }

 private:
  bool in_range(int i, int j) const noexcept {
    return i >= 0 && j >= 0 && static_cast<std::size_t>(i) <= edges_ && static_cast<std::size_t>(j) <= vertices_;
  }
  std::size_t slot(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * (vertices_ + 1) + static_cast<std::size_t>(j);
  }

  std::size_t edges_ = 0;
  std::size_t vertices_ = 0;
  std::size_t total_ = 0;
  std::vector<std::vector<EnhancedState>> buckets_;
  std::vector<std::uint32_t> component_of_;
  std::vector<std::uint32_t> component_count_;
};

inline BasisIndex enumerate_basis(const Graph& g, const Limits& limits = {}) {
  return BasisIndex::build(g, limits);
}

// S_e for a single enhanced state; nullopt when the product is x*x = 0.
inline std::optional<EnhancedState> apply_edge(const Graph& g, const EnhancedState& s, std::size_t e) {
  detail::require_edge_index(g, e);
  if (s.state.contains(e)) {
    throw std::invalid_argument("edge " + std::to_string(e) + " already belongs to the state");
  }
  const ComponentPartition before = components(g, s.state);
  const StateLabel grown = s.state.with(e);
  const ComponentPartition after = components(g, grown);
  auto c = detail::push_coloring(before.component_of, after.component_of, before.count, g.edge(e), s.coloring);
  if (!c) return std::nullopt;
  return EnhancedState{grown, *c};
}

// Matrix of d : C^{i,j} -> C^{i+1,j} in the bases of `basis`.
inline SparseIntMatrix differential(const Graph& g, const BasisIndex& basis, int i, int j) {
  const auto n = static_cast<int>(g.edge_count());
  if (i < 0 || i > n) {
    throw std::out_of_range("height " + std::to_string(i) + " outside 0.." + std::to_string(n));
  }
  const auto sources = basis.at(i, j);
  const auto targets = basis.at(i + 1, j);
  std::vector<MatrixEntry> triplets;
  for (std::size_t col = 0; col < sources.size(); ++col) {
    const EnhancedState& s = sources[col];
    const auto before = basis.component_of(s.state);
    const auto k = basis.component_count(s.state);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (s.state.contains(e)) continue;
      const StateLabel grown = s.state.with(e);
      auto c = detail::push_coloring(before, basis.component_of(grown), k, g.edge(e), s.coloring);
      if (!c) continue;
      const auto row = basis.position({grown, *c});
      triplets.push_back({*row, col, Integer(detail::sign_before(s.state, e))});
    }
  }
  return SparseIntMatrix::from_triplets(targets.size(), sources.size(), std::move(triplets));
}

inline bool verify_d_squared(const Graph& g, const BasisIndex& basis) {
  const auto n = static_cast<int>(g.edge_count());
  const auto v = static_cast<int>(g.vertex_count());
  for (int j = 0; j <= v; ++j) {
    if (n < 2) break;
    SparseIntMatrix lower = differential(g, basis, 0, j);
    for (int i = 1; i < n; ++i) {
      SparseIntMatrix upper = differential(g, basis, i, j);
      if (!(upper * lower).is_zero()) return false;
      lower = std::move(upper);
    }
  }
  return true;
}

inline bool verify_d_squared(const Graph& g, const Limits& limits = {}) {
  return verify_d_squared(g, enumerate_basis(g, limits));
}

namespace detail {

// Breadth-first component labels of [G:s], ids by smallest vertex.
inline std::vector<std::uint32_t> bfs_components(const Graph& g, const std::vector<bool>& present,
                                                 std::uint32_t& count) {
  const std::size_t v = g.vertex_count();
  std::vector<std::vector<Vertex>> adj(v);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (!present[k]) continue;
    adj[g.edge(k).a].push_back(g.edge(k).b);
    adj[g.edge(k).b].push_back(g.edge(k).a);
  }
  constexpr std::uint32_t unseen = UINT32_MAX;
  std::vector<std::uint32_t> label(v, unseen);
  count = 0;
  for (std::size_t root = 0; root < v; ++root) {
    if (label[root] != unseen) continue;
    std::queue<Vertex> frontier;
    frontier.push(static_cast<Vertex>(root));
    label[root] = count;
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      for (Vertex w : adj[u]) {
        if (label[w] == unseen) {
          label[w] = count;
          frontier.push(w);
        }
      }
    }
    ++count;
  }
  return label;
}

// Tensor basis element of M^{(x)k}: factor l is x iff factors[l].
struct CubeVertex {
  std::string label;  // '0'/'1' per edge, left to right in edge order
  std::vector<std::uint32_t> component_of;
  std::uint32_t k = 0;
};

}  // namespace detail

// Rebuilds every differential as the signed sum of per-edge cube maps
// (identity, or multiplication m on the two merged tensor factors; sign -1
// when the label has an odd number of 1s before the starred position) and
// compares it entry by entry with the enhanced-state matrices.
inline bool cube_sign_crosscheck(const Graph& g, const Limits& limits = {}) {
  const BasisIndex basis = enumerate_basis(g, limits);
  const std::size_t n = g.edge_count();
  const std::size_t subsets = std::size_t{1} << n;

  std::vector<detail::CubeVertex> cube(subsets);
  for (std::size_t bits = 0; bits < subsets; ++bits) {
    std::vector<bool> present(n);
    cube[bits].label.assign(n, '0');
    for (std::size_t k = 0; k < n; ++k) {
      present[k] = (bits >> k) & 1U;
      if (present[k]) cube[bits].label[k] = '1';
    }
    cube[bits].component_of = detail::bfs_components(g, present, cube[bits].k);
  }

  for (int i = 0; i <= static_cast<int>(n); ++i) {
    for (int j = 0; j <= static_cast<int>(g.vertex_count()); ++j) {
      const SparseIntMatrix expected = differential(g, basis, i, j);
      std::vector<MatrixEntry> rebuilt;
      for (std::size_t bits = 0; bits < subsets; ++bits) {
        const detail::CubeVertex& from = cube[bits];
        if (std::count(from.label.begin(), from.label.end(), '1') != i) continue;
        for (std::size_t star = 0; star < n; ++star) {
          if (from.label[star] == '1') continue;
          const auto ones_before = std::count(from.label.begin(), from.label.begin() + star, '1');
          const int sign = ones_before % 2 ? -1 : 1;
          const detail::CubeVertex& to = cube[bits | (std::size_t{1} << star)];
          const std::uint32_t p = from.component_of[g.edge(star).a];
          const std::uint32_t q = from.component_of[g.edge(star).b];
          const std::uint32_t lo = std::min(p, q);
          const std::uint32_t hi = std::max(p, q);
          for (std::uint64_t t = 0; t < (std::uint64_t{1} << from.k); ++t) {
            std::vector<bool> factors(from.k);
            for (std::uint32_t l = 0; l < from.k; ++l) factors[l] = (t >> l) & 1U;
            if (static_cast<int>(std::count(factors.begin(), factors.end(), true)) != j) continue;
            std::vector<bool> image;
            if (lo == hi) {
              image = factors;
            } else {
              if (factors[lo] && factors[hi]) continue;  // m(x (x) x) = 0
              image = factors;
              image[lo] = factors[lo] || factors[hi];
              image.erase(image.begin() + hi);
            }
            if (image.size() != to.k) return false;
            std::uint64_t t2 = 0;
            for (std::uint32_t l = 0; l < to.k; ++l) {
              if (image[l]) t2 |= std::uint64_t{1} << l;
            }
            const auto col = basis.position({{bits}, t});
            const auto row = basis.position({{bits | (std::uint64_t{1} << star)}, t2});
            if (!col || !row) return false;
            rebuilt.push_back({*row, *col, Integer(sign)});
          }
        }
      }
      const auto built = SparseIntMatrix::from_triplets(expected.rows(), expected.cols(), std::move(rebuilt));
      if (!(built == expected)) return false;
    }
  }
  return true;
}

}  // namespace chromcoh

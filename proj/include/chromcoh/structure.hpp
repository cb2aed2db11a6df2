#pragma once

// Closed-form cohomology of graph families and structural checks that compare
// computed cohomology against the algebraic relations it must satisfy:
// Kunneth for disjoint unions, the pendant-edge degree shift, and the short
// and long exact sequences of deletion-contraction.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chromcoh/abelian_group.hpp"
#include "chromcoh/cohomology.hpp"
#include "chromcoh/graph.hpp"
#include "chromcoh/smith.hpp"
#include "chromcoh/sparse_matrix.hpp"
#include "chromcoh/state_complex.hpp"

namespace chromcoh {

struct CheckResult {
  bool passed = true;
  std::optional<Bidegree> first_failure;
  std::string detail;

  static CheckResult ok() { return {}; }
  static CheckResult fail(std::optional<Bidegree> at, std::string why) { return {false, at, std::move(why)}; }

  explicit operator bool() const noexcept { return passed; }
};

// ---------------------------------------------------------------------------
// Group algebra

inline AbelianGroup tensor_group(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Integer> t;
  for (std::size_t k = 0; k < b.free_rank(); ++k) t.insert(t.end(), a.torsion().begin(), a.torsion().end());
  for (std::size_t k = 0; k < a.free_rank(); ++k) t.insert(t.end(), b.torsion().begin(), b.torsion().end());
  for (const auto& x : a.torsion()) {
    for (const auto& y : b.torsion()) t.push_back(gcd(x, y));
  }
  return AbelianGroup(a.free_rank() * b.free_rank(), std::move(t));
}

inline AbelianGroup tor_group(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Integer> t;
  for (const auto& x : a.torsion()) {
    for (const auto& y : b.torsion()) t.push_back(gcd(x, y));
  }
  return AbelianGroup(0, std::move(t));
}

// H(G1 + G2) from H(G1) and H(G2): tensor terms with p+q = i, s+t = j and
// Tor terms with p+q = i+1, s+t = j.
inline BigradedGroups kunneth_compose(const BigradedGroups& h1, const BigradedGroups& h2) {
  BigradedGroups out;
  for (const auto& [b1, g1] : h1.entries()) {
    for (const auto& [b2, g2] : h2.entries()) {
      out.add({b1.i + b2.i, b1.j + b2.j}, tensor_group(g1, g2));
      const int tor_height = b1.i + b2.i - 1;
      if (tor_height >= 0) out.add({tor_height, b1.j + b2.j}, tor_group(g1, g2));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms

// N_v: H^0 = (Z + Z{1})^{(x)v}, so H^{0,j} = Z^{C(v,j)}.
inline BigradedGroups oracle_null(std::size_t v) {
  BigradedGroups h;
  std::size_t binom = 1;
  for (std::size_t j = 0; j <= v; ++j) {
    h.set({0, static_cast<int>(j)}, AbelianGroup::free(binom));
    binom = binom * (v - j) / (j + 1);
  }
  return h;
}

// Any tree with n edges: H^0 = Z{n} + Z{n+1}.
inline BigradedGroups oracle_tree(std::size_t n) {
  BigradedGroups h;
  h.set({0, static_cast<int>(n)}, AbelianGroup::free(1));
  h.set({0, static_cast<int>(n) + 1}, AbelianGroup::free(1));
  return h;
}

// Polygon P_n with n edges (P_1 a loop, P_2 a double edge).
inline BigradedGroups oracle_cycle(std::size_t n) {
  if (n == 0) throw std::invalid_argument("polygon graphs need at least one edge");
  BigradedGroups h;
  if (n == 1) return h;
  const int ni = static_cast<int>(n);
  h.set({0, ni}, AbelianGroup::free(1));
  if (n % 2 == 0) h.set({0, ni - 1}, AbelianGroup::free(1));
  for (int i = 1; i < ni; ++i) {
    const int r = ni - i;
    if (r < 2) break;
    if (r % 2 == 0) {
      h.set({i, r}, AbelianGroup::cyclic(2));
      h.set({i, r - 1}, AbelianGroup::free(1));
    } else {
      h.set({i, r}, AbelianGroup::free(1));
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// Checks

namespace detail {

inline std::optional<Bidegree> first_difference(const BigradedGroups& a, const BigradedGroups& b) {
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() || ib != b.entries().end()) {
    if (ib == b.entries().end() || (ia != a.entries().end() && ia->first < ib->first)) return ia->first;
    if (ia == a.entries().end() || ib->first < ia->first) return ib->first;
    if (!(ia->second == ib->second)) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

inline CheckResult compare_groups(const BigradedGroups& got, const BigradedGroups& want, const std::string& what) {
  if (auto at = first_difference(got, want)) {
    return CheckResult::fail(at, what + ": computed " + got.at(*at).to_string() + ", expected " +
                                     want.at(*at).to_string());
  }
  return CheckResult::ok();
}

// d^{i,j} with the zero map outside the range of heights.
inline SparseIntMatrix block_differential(const Graph& g, const BasisIndex& basis, int i, int j) {
  if (i < 0 || i > static_cast<int>(g.edge_count())) return SparseIntMatrix(basis.size(i + 1, j), basis.size(i, j));
  return differential(g, basis, i, j);
}

inline bool all_units(const SmithForm& f) {
  for (const auto& d : f.invariant_factors) {
    if (d != 1) return false;
  }
  return true;
}

inline void require_non_loop(const Graph& g, std::size_t e) {
  require_edge_index(g, e);
  if (g.edge(e).is_loop()) throw LoopContractionError("edge " + std::to_string(e) + " is a loop");
}

}  // namespace detail

inline CheckResult check_kunneth(const Graph& g1, const Graph& g2, const Limits& limits = {}) {
  return detail::compare_groups(cohomology(disjoint_union(g1, g2), limits),
                                kunneth_compose(cohomology(g1, limits), cohomology(g2, limits)), "Kunneth");
}

inline bool is_pendant(const Graph& g, std::size_t e) {
  if (e >= g.edge_count() || g.edge(e).is_loop()) return false;
  return g.degree(g.edge(e).a) == 1 || g.degree(g.edge(e).b) == 1;
}

// H^{i,j}(G) = H^{i,j-1}(G/e) for a pendant edge e.
inline CheckResult check_pendant_shift(const Graph& g, std::size_t e, const Limits& limits = {}) {
  detail::require_edge_index(g, e);
  if (!is_pendant(g, e)) throw std::invalid_argument("edge " + std::to_string(e) + " is not a pendant edge");
  return detail::compare_groups(cohomology(g, limits), cohomology(contract_edge(g, e), limits).shifted(1),
                                "pendant shift");
}

// Chain-level check of 0 -> C^{i-1,j}(G/e) -> C^{i,j}(G) -> C^{i,j}(G-e) -> 0.
//
// With e moved to the last position, alpha adds e to a state of G/e and
// carries the coloring across; beta keeps states without e and kills the
// rest. Verified per bidegree: both maps commute with the differentials,
// alpha is injective, beta is surjective over Z, beta*alpha = 0, and image
// alpha = kernel beta (ranks add up and image alpha is saturated, its Smith
// factors all being 1).
inline CheckResult check_chain_ses(const Graph& g, std::size_t e, const Limits& limits = {}) {
  detail::require_non_loop(g, e);
  const std::size_t n = g.edge_count();
  const std::size_t last = n - 1;
  const Graph full = permute_edge_order(g, move_to_last(n, e));
  const Graph contracted = contract_edge(full, last);
  const Graph deleted = delete_edge(full, last);
  const BasisIndex basis = enumerate_basis(full, limits);
  const BasisIndex basis_c = enumerate_basis(contracted, limits);
  const BasisIndex basis_d = enumerate_basis(deleted, limits);

  const Edge merged = full.edge(last);
  auto to_contracted = [&](Vertex u) -> Vertex {
    if (u == merged.hi()) return merged.lo();
    return u > merged.hi() ? u - 1 : u;
  };

  // alpha : C^{i-1,j}(G/e) -> C^{i,j}(G)
  auto alpha = [&](int i, int j) {
    const auto sources = basis_c.at(i - 1, j);
    std::vector<MatrixEntry> t;
    for (std::size_t col = 0; col < sources.size(); ++col) {
      const EnhancedState& s = sources[col];
      const StateLabel grown = s.state.with(last);
      const auto comp_c = basis_c.component_of(s.state);
      const auto comp = basis.component_of(grown);
      std::uint64_t coloring = 0;
      std::uint32_t next_id = 0;
      for (std::size_t u = 0; u < comp.size(); ++u) {
        if (comp[u] != next_id) continue;
        if ((s.coloring >> comp_c[to_contracted(static_cast<Vertex>(u))]) & 1U) coloring |= std::uint64_t{1} << next_id;
        ++next_id;
      }
      const auto row = basis.position({grown, coloring});
      if (!row) throw std::logic_error("alpha produced a state outside the basis");
      t.push_back({*row, col, Integer(1)});
    }
    return SparseIntMatrix::from_triplets(basis.size(i, j), sources.size(), std::move(t));
  };

  // beta : C^{i,j}(G) -> C^{i,j}(G-e)
  auto beta = [&](int i, int j) {
    const auto sources = basis.at(i, j);
    std::vector<MatrixEntry> t;
    for (std::size_t col = 0; col < sources.size(); ++col) {
      const EnhancedState& s = sources[col];
      if (s.state.contains(last)) continue;
      const auto row = basis_d.position(s);
      if (!row) throw std::logic_error("beta produced a state outside the basis");
      t.push_back({*row, col, Integer(1)});
    }
    return SparseIntMatrix::from_triplets(basis_d.size(i, j), sources.size(), std::move(t));
  };

  const int top = static_cast<int>(n);
  for (int j = 0; j <= static_cast<int>(full.vertex_count()); ++j) {
    for (int i = 0; i <= top; ++i) {
      const Bidegree at{i, j};
      const SparseIntMatrix a = alpha(i, j);
      const SparseIntMatrix b = beta(i, j);
      const SparseIntMatrix d_full = detail::block_differential(full, basis, i, j);

      if (!(d_full * a == alpha(i + 1, j) * detail::block_differential(contracted, basis_c, i - 1, j))) {
        return CheckResult::fail(at, "alpha does not commute with the differentials");
      }
      if (!(detail::block_differential(deleted, basis_d, i, j) * b == beta(i + 1, j) * d_full)) {
        return CheckResult::fail(at, "beta does not commute with the differentials");
      }
      if (!(b * a).is_zero()) return CheckResult::fail(at, "beta * alpha is not zero");

      const SmithForm sa = smith_normal_form(a);
      const SmithForm sb = smith_normal_form(b);
      if (sa.rank() != a.cols() || rank_over_rationals(a) != a.cols()) {
        return CheckResult::fail(at, "alpha is not injective");
      }
      if (sb.rank() != b.rows() || !detail::all_units(sb)) {
        return CheckResult::fail(at, "beta is not surjective over Z");
      }
      if (sa.rank() + sb.rank() != basis.size(i, j) || !detail::all_units(sa)) {
        return CheckResult::fail(at, "image of alpha differs from kernel of beta");
      }
    }
  }
  return CheckResult::ok();
}

// Alternating rank sum along the long exact sequence
//   ... -> H^{i,j}(G) -> H^{i,j}(G-e) -> H^{i,j}(G/e) -> H^{i+1,j}(G) -> ...
// vanishes for each j.
inline CheckResult check_les_rank_consistency(const Graph& g, std::size_t e, const Limits& limits = {}) {
  detail::require_non_loop(g, e);
  const BigradedGroups h = cohomology(g, limits);
  const BigradedGroups h_del = cohomology(delete_edge(g, e), limits);
  const BigradedGroups h_con = cohomology(contract_edge(g, e), limits);
  const int top = static_cast<int>(g.edge_count());
  for (int j = 0; j <= static_cast<int>(g.vertex_count()); ++j) {
    long long sum = 0;
    for (int i = 0; i <= top; ++i) {
      const long long term = static_cast<long long>(h.at(i, j).free_rank()) -
                             static_cast<long long>(h_del.at(i, j).free_rank()) +
                             static_cast<long long>(h_con.at(i, j).free_rank());
      sum += i % 2 ? -term : term;
    }
    if (sum != 0) {
      return CheckResult::fail(Bidegree{0, j}, "alternating rank sum is " + std::to_string(sum) + " in degree " +
                                                   std::to_string(j));
    }
  }
  return CheckResult::ok();
}

}  // namespace chromcoh

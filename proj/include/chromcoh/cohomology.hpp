#pragma once

// Cohomology groups H^{i,j}(G) and the polynomial invariants built from them.
//
// The complex splits by degree j, so each H^{i,j} comes from two blocks:
// free rank = dim C^{i,j} - rank d^{i,j} - rank d^{i-1,j}, and the torsion is
// the invariant factors of d^{i-1,j} exceeding 1.

#include <cstddef>
#include <map>
#include <vector>

#include "chromcoh/abelian_group.hpp"
#include "chromcoh/graph.hpp"
#include "chromcoh/polynomial.hpp"
#include "chromcoh/smith.hpp"
#include "chromcoh/state_complex.hpp"

namespace chromcoh {

inline BigradedGroups cohomology(const Graph& g, const BasisIndex& basis) {
  const auto n = static_cast<int>(g.edge_count());
  const auto v = static_cast<int>(g.vertex_count());
  BigradedGroups h;
  for (int j = 0; j <= v; ++j) {
    SmithForm incoming;  // d^{-1,j} = 0
    for (int i = 0; i <= n; ++i) {
      const std::size_t dim = basis.size(i, j);
      SmithForm outgoing;
      if (i < n && dim > 0) outgoing = smith_normal_form(differential(g, basis, i, j));
      const std::size_t free = dim - outgoing.rank() - incoming.rank();
      h.set({i, j}, AbelianGroup(free, incoming.torsion()));
      incoming = std::move(outgoing);
    }
  }
  return h;
}

inline BigradedGroups cohomology(const Graph& g, const Limits& limits = {}) {
  return cohomology(g, enumerate_basis(g, limits));
}

// Row i of h as j -> H^{i,j}.
inline std::map<int, AbelianGroup> row(const BigradedGroups& h, int i) {
  std::map<int, AbelianGroup> out;
  for (const auto& [b, grp] : h.entries()) {
    if (b.i == i) out.emplace(b.j, grp);
  }
  return out;
}

// Graded dimension sum_j rank(H^j) q^j. Torsion is invisible here.
inline IntPolynomial qdim(const std::map<int, AbelianGroup>& groups_by_degree) {
  IntPolynomial p;
  for (const auto& [j, grp] : groups_by_degree) {
    if (grp.free_rank() > 0) p.add_term(static_cast<std::size_t>(j), Integer(grp.free_rank()));
  }
  return p;
}

inline TwoVarPolynomial poincare_polynomial(const BigradedGroups& h) {
  TwoVarPolynomial r;
  for (const auto& [b, grp] : h.entries()) {
    if (grp.free_rank() > 0) {
      r.add_term(static_cast<std::size_t>(b.i), static_cast<std::size_t>(b.j), Integer(grp.free_rank()));
    }
  }
  return r;
}

inline IntPolynomial graded_euler_characteristic(const BigradedGroups& h) {
  return poincare_polynomial(h).at_t(-1);
}

// Alternating sum of the graded dimensions of the cochain groups.
inline IntPolynomial chain_level_euler(const BasisIndex& basis) {
  IntPolynomial p;
  for (int i = 0; i <= static_cast<int>(basis.edge_count()); ++i) {
    for (int j = 0; j <= static_cast<int>(basis.vertex_count()); ++j) {
      const Integer size(basis.size(i, j));
      p.add_term(static_cast<std::size_t>(j), i % 2 ? Integer(-size) : size);
    }
  }
  return p;
}

inline IntPolynomial chain_level_euler(const Graph& g, const Limits& limits = {}) {
  return chain_level_euler(enumerate_basis(g, limits));
}

}  // namespace chromcoh

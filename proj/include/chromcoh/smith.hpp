#pragma once

// Exact integer linear algebra: Smith normal form invariant factors and
// rank over Q.
//
// smith_normal_form works on a sparse row/column representation and
// eliminates one pivot at a time. A first sweep takes every available +-1
// pivot, shortest rows first. The general loop then picks the entry of
// smallest absolute value, ties broken by the smallest row+column population,
// which keeps fill-in and coefficient growth down. When a pivot fails to
// divide its row or column the remainders become the new candidates, so the
// minimal magnitude strictly decreases and the loop terminates.
//
// rank_over_rationals is an independent route (fraction-free Bareiss
// elimination on a dense copy) used to cross-check ranks.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "chromcoh/integer.hpp"
#include "chromcoh/sparse_matrix.hpp"

namespace chromcoh {

struct SmithForm {
  // Positive diagonal entries d_1 | d_2 | ... | d_r, units included.
  std::vector<Integer> invariant_factors;

  std::size_t rank() const noexcept { return invariant_factors.size(); }

  // Factors greater than one: the torsion of the cokernel.
  std::vector<Integer> torsion() const {
    std::vector<Integer> t;
    for (const auto& d : invariant_factors) {
      if (d > 1) t.push_back(d);
    }
    return t;
  }

  friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

// Rewrites positive integers into a divisibility chain with the same product
// and the same direct sum of cyclic groups (pairwise gcd/lcm exchange).
inline std::vector<Integer> divisibility_chain(std::vector<Integer> values) {
  for (auto& v : values) v = abs(v);
  std::sort(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[j] % values[i] == 0) continue;
      const Integer g = gcd(values[i], values[j]);
      values[j] = values[i] / g * values[j];
      values[i] = g;
    }
  }
  return values;
}

namespace detail {

class SmithWorkspace {
 public:
  explicit SmithWorkspace(const SparseIntMatrix& m) : rows_(m.rows()), col_rows_(m.cols()) {
    for (const auto& e : m.entries()) {
      rows_[e.row][e.col] = e.value;
      col_rows_[e.col].insert(e.row);
    }
  }

  std::vector<Integer> run() {
    std::vector<Integer> diagonal;
    unit_sweep(diagonal);
    while (true) {
      std::size_t pr = 0, pc = 0;
      if (!select_pivot(pr, pc)) break;
      if (!clear_column(pr, pc)) continue;
      if (!clear_row(pr, pc)) continue;
      diagonal.push_back(abs(rows_[pr][pc]));
      rows_[pr].clear();
      col_rows_[pc].clear();
    }
    return diagonal;
  }

 private:
  // Eliminates +-1 pivots first, shortest rows first (lazy heap keyed by
  // current row length). Whatever survives goes to the general loop.
  void unit_sweep(std::vector<Integer>& diagonal) {
    using Item = std::pair<std::size_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!rows_[r].empty()) heap.emplace(rows_[r].size(), r);
    }
    while (!heap.empty()) {
      const auto [len, r] = heap.top();
      heap.pop();
      if (rows_[r].size() != len || len == 0) continue;
      std::size_t pc = 0;
      std::size_t best = 0;
      bool found = false;
      for (const auto& [c, v] : rows_[r]) {
        if (v != 1 && v != -1) continue;
        if (!found || col_rows_[c].size() < best) {
          found = true;
          best = col_rows_[c].size();
          pc = c;
        }
      }
      if (!found) continue;
      const Integer p = rows_[r].at(pc);
      const std::vector<std::size_t> others(col_rows_[pc].begin(), col_rows_[pc].end());
      for (std::size_t r2 : others) {
        if (r2 == r) continue;
        row_axpy(r2, r, rows_[r2].at(pc) * p);
        if (!rows_[r2].empty()) heap.emplace(rows_[r2].size(), r2);
      }
      // A unit pivot divides the rest of its row, so column operations clear
      // it without touching other rows.
      for (const auto& [c, v] : rows_[r]) col_rows_[c].erase(r);
      rows_[r].clear();
      diagonal.emplace_back(1);
    }
  }

  bool select_pivot(std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    Integer best;
    std::size_t best_fill = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& [c, v] : rows_[r]) {
        const Integer mag = abs(v);
        const std::size_t fill = rows_[r].size() + col_rows_[c].size();
        if (!found || mag < best || (mag == best && fill < best_fill)) {
          found = true;
          best = mag;
          best_fill = fill;
          pr = r;
          pc = c;
          if (best == 1 && fill == 2) return true;
        }
      }
    }
    return found;
  }

  // row[target] -= q * row[source]
  void row_axpy(std::size_t target, std::size_t source, const Integer& q) {
    auto& dst = rows_[target];
    for (const auto& [c, v] : rows_[source]) {
      auto it = dst.find(c);
      if (it == dst.end()) {
        dst.emplace(c, -q * v);
        col_rows_[c].insert(target);
      } else {
        it->second -= q * v;
        if (it->second == 0) {
          dst.erase(it);
          col_rows_[c].erase(target);
        }
      }
    }
  }

  // Row operations against the pivot row. False if a nonzero remainder is left.
  bool clear_column(std::size_t pr, std::size_t pc) {
    const Integer p = rows_[pr].at(pc);
    bool clean = true;
    const std::vector<std::size_t> others(col_rows_[pc].begin(), col_rows_[pc].end());
    for (std::size_t r : others) {
      if (r == pr) continue;
      const Integer q = rows_[r].at(pc) / p;
      if (q != 0) row_axpy(r, pr, q);
      if (rows_[r].count(pc)) clean = false;
    }
    return clean;
  }

  // Column operations against the pivot column, which now holds only the
  // pivot, so each operation touches the pivot row alone.
  bool clear_row(std::size_t pr, std::size_t pc) {
    const Integer p = rows_[pr].at(pc);
    bool clean = true;
    std::vector<std::size_t> emptied;
    for (auto& [c, v] : rows_[pr]) {
      if (c == pc) continue;
      v -= (v / p) * p;
      if (v == 0) {
        emptied.push_back(c);
      } else {
        clean = false;
      }
    }
    for (std::size_t c : emptied) {
      rows_[pr].erase(c);
      col_rows_[c].erase(pr);
    }
    return clean;
  }

  std::vector<std::map<std::size_t, Integer>> rows_;
  std::vector<std::set<std::size_t>> col_rows_;
};

}  // namespace detail

inline SmithForm smith_normal_form(const SparseIntMatrix& m) {
  detail::SmithWorkspace work(m);
  return {divisibility_chain(work.run())};
}

inline std::size_t rank_over_rationals(const SparseIntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return 0;
  auto a = m.to_dense();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    const Integer& piv = a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Integer lead = a[r][c];
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (piv * a[r][k] - lead * a[rank][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace chromcoh

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chromcoh/integer.hpp"

namespace chromcoh {

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Integer value;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

// Exact integer matrix. Entries are unique, nonzero and sorted row-major.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  // Duplicate coordinates are summed; zeros are dropped.
  static SparseIntMatrix from_triplets(std::size_t rows, std::size_t cols,
                                       std::vector<MatrixEntry> triplets) {
    std::map<std::pair<std::size_t, std::size_t>, Integer> acc;
    for (auto& t : triplets) {
      if (t.row >= rows || t.col >= cols) throw std::out_of_range("matrix entry out of range");
      acc[{t.row, t.col}] += t.value;
    }
    SparseIntMatrix m(rows, cols);
    for (auto& [rc, v] : acc) {
      if (v != 0) m.entries_.push_back({rc.first, rc.second, std::move(v)});
    }
    return m;
  }

  static SparseIntMatrix from_dense(const std::vector<std::vector<Integer>>& dense, std::size_t cols) {
    std::vector<MatrixEntry> t;
    for (std::size_t r = 0; r < dense.size(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (dense[r].at(c) != 0) t.push_back({r, c, dense[r][c]});
      }
    }
    return from_triplets(dense.size(), cols, std::move(t));
  }

  static SparseIntMatrix identity(std::size_t n) {
    SparseIntMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.entries_.push_back({k, k, Integer(1)});
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<MatrixEntry>& entries() const noexcept { return entries_; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  std::vector<std::vector<Integer>> to_dense() const {
    std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_));
    for (const auto& e : entries_) d[e.row][e.col] = e.value;
    return d;
  }

  SparseIntMatrix transpose() const {
    std::vector<MatrixEntry> t;
    t.reserve(entries_.size());
    for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
    return from_triplets(cols_, rows_, std::move(t));
  }

  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

inline SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: inner dimensions differ");
  std::vector<std::vector<const MatrixEntry*>> b_rows(b.rows());
  for (const auto& e : b.entries()) b_rows[e.row].push_back(&e);
  std::map<std::pair<std::size_t, std::size_t>, Integer> acc;
  for (const auto& ea : a.entries()) {
    for (const MatrixEntry* eb : b_rows[ea.col]) acc[{ea.row, eb->col}] += ea.value * eb->value;
  }
  std::vector<MatrixEntry> t;
  for (auto& [rc, v] : acc) {
    if (v != 0) t.push_back({rc.first, rc.second, std::move(v)});
  }
  return SparseIntMatrix::from_triplets(a.rows(), b.cols(), std::move(t));
}

// One "i j row col value" line per nonzero entry of the block d^{i,j}.
inline void write_triplets(std::ostream& out, int i, int j, const SparseIntMatrix& m) {
  for (const auto& e : m.entries()) {
    out << i << ' ' << j << ' ' << e.row << ' ' << e.col << ' ' << e.value << '\n';
  }
}

}  // namespace chromcoh

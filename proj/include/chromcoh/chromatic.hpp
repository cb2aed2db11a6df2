#pragma once

// Chromatic polynomial P_G(lambda) by two independent routes:
// deletion-contraction with memoization, and the subset expansion
// sum over s of (-1)^{|s|} lambda^{k(s)}.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "chromcoh/graph.hpp"
#include "chromcoh/polynomial.hpp"
#include "chromcoh/state_complex.hpp"

namespace chromcoh {

class ChromaticPolynomial {
 public:
  ChromaticPolynomial() = default;
  explicit ChromaticPolynomial(IntPolynomial in_lambda) : p_(std::move(in_lambda)) {}

  const IntPolynomial& in_lambda() const noexcept { return p_; }
  bool is_zero() const noexcept { return p_.is_zero(); }
  long degree() const noexcept { return p_.degree(); }
  Integer evaluate(const Integer& lambda) const { return p_.evaluate(lambda); }
  std::string to_string() const { return p_.to_string("L"); }

  friend ChromaticPolynomial operator-(const ChromaticPolynomial& a, const ChromaticPolynomial& b) {
    return ChromaticPolynomial(a.p_ - b.p_);
  }
  friend bool operator==(const ChromaticPolynomial&, const ChromaticPolynomial&) = default;

 private:
  IntPolynomial p_;
};

// Shared memo table for deletion-contraction, keyed by the vertex count and
// sorted simple edge list. Safe for concurrent use.
class ChromaticMemo {
 public:
  using Key = std::vector<std::uint32_t>;

  bool find(const Key& key, IntPolynomial& out) const {
    std::lock_guard lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }

  void insert(const Key& key, const IntPolynomial& value) {
    std::lock_guard lock(mutex_);
    table_.emplace(key, value);
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::mutex mutex_;
  std::map<Key, IntPolynomial> table_;
};

namespace detail {

inline ChromaticMemo::Key memo_key(const Graph& simple) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : simple.edges()) edges.emplace_back(e.lo(), e.hi());
  std::sort(edges.begin(), edges.end());
  ChromaticMemo::Key key{static_cast<std::uint32_t>(simple.vertex_count())};
  for (const auto& [a, b] : edges) {
    key.push_back(a);
    key.push_back(b);
  }
  return key;
}

inline IntPolynomial deletion_contraction(const Graph& g, ChromaticMemo& memo) {
  if (g.has_loop()) return {};
  const Graph simple = simplify(g).graph;
  if (simple.edge_count() == 0) return IntPolynomial::monomial(simple.vertex_count());
  const auto key = memo_key(simple);
  IntPolynomial result;
  if (memo.find(key, result)) return result;
  // No loops remain, so edge 0 is the lowest-indexed non-loop edge.
  result = deletion_contraction(delete_edge(simple, 0), memo) - deletion_contraction(contract_edge(simple, 0), memo);
  memo.insert(key, result);
  return result;
}

}  // namespace detail

inline ChromaticPolynomial chromatic_deletion_contraction(const Graph& g, ChromaticMemo& memo) {
  return ChromaticPolynomial(detail::deletion_contraction(g, memo));
}

inline ChromaticPolynomial chromatic_deletion_contraction(const Graph& g) {
  ChromaticMemo memo;
  return chromatic_deletion_contraction(g, memo);
}

inline ChromaticPolynomial chromatic_state_sum(const Graph& g, const Limits& limits = {}) {
  detail::require_budget(g, limits);
  const std::uint64_t subsets = std::uint64_t{1} << g.edge_count();
  std::vector<Integer> c(g.vertex_count() + 1);
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    const auto k = components(g, {bits}).count;
    if (std::popcount(bits) % 2) {
      c[k] -= 1;
    } else {
      c[k] += 1;
    }
  }
  return ChromaticPolynomial(IntPolynomial(std::move(c)));
}

// P_G(1 + q) as a polynomial in q.
inline IntPolynomial substitute_lambda(const ChromaticPolynomial& p) { return p.in_lambda().substitute_one_plus(); }

}  // namespace chromcoh

#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chromcoh/integer.hpp"

namespace chromcoh {

// Univariate polynomial with integer coefficients; no trailing zeros stored.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) { trim(); }

  static IntPolynomial constant(Integer a) { return IntPolynomial(std::vector<Integer>{std::move(a)}); }

  static IntPolynomial monomial(std::size_t exponent, Integer a = 1) {
    std::vector<Integer> c(exponent + 1);
    c[exponent] = std::move(a);
    return IntPolynomial(std::move(c));
  }

  // (1 + q)^k
  static IntPolynomial one_plus_q_pow(std::size_t k) {
    std::vector<Integer> c(k + 1);
    c[0] = 1;
    for (std::size_t m = 1; m <= k; ++m) c[m] = c[m - 1] * (k - m + 1) / m;
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Integer>& coefficients() const noexcept { return c_; }

  Integer coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }

  void add_term(std::size_t k, const Integer& a) {
    if (c_.size() <= k) c_.resize(k + 1);
    c_[k] += a;
    trim();
  }

  // Nonzero (exponent, coefficient) pairs, ascending exponent.
  std::vector<std::pair<std::size_t, Integer>> terms() const {
    std::vector<std::pair<std::size_t, Integer>> out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] != 0) out.emplace_back(k, c_[k]);
    }
    return out;
  }

  Integer evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // p(1 + q), expanded in q.
  IntPolynomial substitute_one_plus() const {
    IntPolynomial out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] != 0) out += one_plus_q_pow(k) * c_[k];
    }
    return out;
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(IntPolynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& s) {
    for (auto& x : a.c_) x *= s;
    a.trim();
    return a;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(c));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string(const std::string& var = "q") const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Integer& a = c_[k];
      if (a == 0) continue;
      const Integer mag = abs(a);
      if (first) {
        if (a < 0) out << "-";
      } else {
        out << (a < 0 ? " - " : " + ");
      }
      if (mag != 1 || k == 0) out << mag;
      if (k > 0) {
        out << var;
        if (k > 1) out << '^' << k;
      }
      first = false;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Integer> c_;
};

// Polynomial in (t, q); keys are (t exponent, q exponent).
class TwoVarPolynomial {
 public:
  void add_term(std::size_t t_exp, std::size_t q_exp, const Integer& a) {
    if (a == 0) return;
    auto& slot = c_[{t_exp, q_exp}];
    slot += a;
    if (slot == 0) c_.erase({t_exp, q_exp});
  }

  Integer coefficient(std::size_t t_exp, std::size_t q_exp) const {
    auto it = c_.find({t_exp, q_exp});
    return it == c_.end() ? Integer(0) : it->second;
  }

  const std::map<std::pair<std::size_t, std::size_t>, Integer>& terms() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }

  // Substitutes t = value, leaving a polynomial in q.
  IntPolynomial at_t(const Integer& value) const {
    IntPolynomial out;
    for (const auto& [e, a] : c_) {
      Integer p = 1;
      for (std::size_t k = 0; k < e.first; ++k) p *= value;
      out.add_term(e.second, a * p);
    }
    return out;
  }

  friend TwoVarPolynomial operator*(const TwoVarPolynomial& a, const TwoVarPolynomial& b) {
    TwoVarPolynomial out;
    for (const auto& [ea, ca] : a.c_) {
      for (const auto& [eb, cb] : b.c_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
    return out;
  }

  friend bool operator==(const TwoVarPolynomial&, const TwoVarPolynomial&) = default;

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      const auto [t, q] = it->first;
      const Integer& a = it->second;
      out << (first ? (a < 0 ? "-" : "") : (a < 0 ? " - " : " + "));
      const Integer mag = abs(a);
      const bool bare = t == 0 && q == 0;
      if (mag != 1 || bare) out << mag;
      if (t > 0) out << 't' << (t > 1 ? "^" + std::to_string(t) : "");
      if (q > 0) out << 'q' << (q > 1 ? "^" + std::to_string(q) : "");
      first = false;
    }
    return out.str();
  }

 private:
  std::map<std::pair<std::size_t, std::size_t>, Integer> c_;
};

}  // namespace chromcoh

#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chromcoh/integer.hpp"
#include "chromcoh/smith.hpp"
#include "chromcoh/state_complex.hpp"

namespace chromcoh {

// Finitely generated abelian group Z^free_rank + Z_{d1} + ... + Z_{dm} with
// d1 | d2 | ... | dm and every d > 1.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  // Accepts any list of cyclic orders; 1s are dropped and the rest rewritten
  // into a divisibility chain.
  explicit AbelianGroup(std::size_t free_rank, std::vector<Integer> cyclic_orders = {})
      : free_rank_(free_rank) {
    for (auto& d : divisibility_chain(std::move(cyclic_orders))) {
      if (d > 1) torsion_.push_back(std::move(d));
    }
  }

  static AbelianGroup free(std::size_t rank) { return AbelianGroup(rank); }
  static AbelianGroup cyclic(const Integer& order) { return AbelianGroup(0, {order}); }

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  bool is_free() const noexcept { return torsion_.empty(); }

  friend AbelianGroup operator+(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<Integer> t = a.torsion_;
    t.insert(t.end(), b.torsion_.begin(), b.torsion_.end());
    return AbelianGroup(a.free_rank_ + b.free_rank_, std::move(t));
  }
  AbelianGroup& operator+=(const AbelianGroup& o) { return *this = *this + o; }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

  // "Z^2 + Z_2" style, or "0".
  std::string to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank_ > 0) {
      out << 'Z';
      if (free_rank_ > 1) out << '^' << free_rank_;
      first = false;
    }
    for (const auto& d : torsion_) {
      out << (first ? "" : " + ") << "Z_" << d;
      first = false;
    }
    return out.str();
  }

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

// The full cohomology H^{*,*}; absent bidegrees hold the trivial group.
class BigradedGroups {
 public:
  using Map = std::map<Bidegree, AbelianGroup>;

  void set(Bidegree at, AbelianGroup g) {
    if (g.is_trivial()) {
      groups_.erase(at);
    } else {
      groups_[at] = std::move(g);
    }
  }

  void add(Bidegree at, const AbelianGroup& g) {
    if (g.is_trivial()) return;
    auto it = groups_.find(at);
    if (it == groups_.end()) {
      groups_.emplace(at, g);
    } else {
      it->second += g;
    }
  }

  AbelianGroup at(Bidegree b) const {
    auto it = groups_.find(b);
    return it == groups_.end() ? AbelianGroup{} : it->second;
  }
  AbelianGroup at(int i, int j) const { return at(Bidegree{i, j}); }

  const Map& entries() const noexcept { return groups_; }
  bool is_trivial() const noexcept { return groups_.empty(); }

  // Every (i, j) -> (i, j + shift).
  BigradedGroups shifted(int shift) const {
    BigradedGroups out;
    for (const auto& [b, g] : groups_) out.set({b.i, b.j + shift}, g);
    return out;
  }

  friend bool operator==(const BigradedGroups&, const BigradedGroups&) = default;

 private:
  Map groups_;
};

}  // namespace chromcoh

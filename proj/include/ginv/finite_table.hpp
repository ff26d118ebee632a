#pragma once

// Dense operation tables for an enumerable *-ring. Elements become indices in
// canonical enumeration order, so the exhaustive searches underneath the
// oracle and the claim runner are allocation-free inner loops.

#include <cstdint>
#include <memory>
#include <vector>

#include "ginv/star_ring.hpp"

namespace ginv {

class FiniteTable {
 public:
  using Idx = std::uint16_t;
  static constexpr int kNone = -1;

  static std::shared_ptr<const FiniteTable> build(const RingPtr& ring);
  // Process-wide cache keyed by ring id; rings are immutable so reuse is safe.
  static std::shared_ptr<const FiniteTable> cached(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return n_; }
  const Element& element(std::size_t i) const { return elems_[i]; }
  std::size_t index_of(const Element& e) const { return ring_->index_of(e); }

  Idx mul(Idx a, Idx b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Idx add(Idx a, Idx b) const { return add_[static_cast<std::size_t>(a) * n_ + b]; }
  Idx star(Idx a) const { return star_[a]; }
  Idx neg(Idx a) const { return neg_[a]; }
  Idx zero() const { return zero_; }
  Idx one() const { return one_; }
  Idx sub(Idx a, Idx b) const { return add(a, neg(b)); }

  Idx pow(Idx a, int k) const {
    Idx r = one_;
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  // First t with g*t = x, or kNone.
  int solve_right(Idx g, Idx x) const {
    for (std::size_t t = 0; t < n_; ++t)
      if (mul(g, static_cast<Idx>(t)) == x) return static_cast<int>(t);
    return kNone;
  }
  // First t with t*g = x, or kNone.
  int solve_left(Idx g, Idx x) const {
    for (std::size_t t = 0; t < n_; ++t)
      if (mul(static_cast<Idx>(t), g) == x) return static_cast<int>(t);
    return kNone;
  }
  bool in_right_ideal(Idx x, Idx g) const { return solve_right(g, x) != kNone; }  // x in gR
  bool in_left_ideal(Idx x, Idx g) const { return solve_left(g, x) != kNone; }    // x in Rg

  bool right_ideal_eq(Idx a, Idx b) const {
    return in_right_ideal(a, b) && in_right_ideal(b, a);
  }
  bool left_ideal_eq(Idx a, Idx b) const { return in_left_ideal(a, b) && in_left_ideal(b, a); }

  // First right inverse (a*t = 1), or kNone; same for left.
  int right_inverse(Idx a) const { return rinv_[a]; }
  int left_inverse(Idx a) const { return linv_[a]; }
  bool is_invertible(Idx a) const { return rinv_[a] != kNone && linv_[a] != kNone; }

  const std::vector<Idx>& projections() const { return projections_; }

 private:
  RingPtr ring_;
  std::size_t n_ = 0;
  std::vector<Element> elems_;
  std::vector<Idx> mul_, add_;
  std::vector<Idx> star_, neg_;
  std::vector<int> rinv_, linv_;
  std::vector<Idx> projections_;
  Idx zero_ = 0, one_ = 0;
};

}  // namespace ginv

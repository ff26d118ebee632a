#pragma once

// Banded Toeplitz operators plus finite-rank corrections over Q, acting on
// one-sided sequences. Entry (i,j) is symbol[j-i] plus a top-left correction
// block, so degree -1 is the subdiagonal and the forward shift S is {-1: 1}.
// S*S = 1 while SS* = 1 - E00: the ring is not Dedekind finite, which is what
// separates the one-sided inverse notions from the two-sided ones.
//
// The bounded solver only ever proves existence. Absence within bounds is
// reported as UnknownAtBound, never as nonexistence.

#include <map>
#include <vector>

#include "ginv/rational.hpp"
#include "ginv/star_ring.hpp"

namespace ginv {

class ToeplitzElement {
 public:
  ToeplitzElement() = default;
  ToeplitzElement(std::map<int, Rational> symbol, std::vector<std::vector<Rational>> correction);

  static ToeplitzElement zero_element() { return ToeplitzElement(); }
  static ToeplitzElement one_element();
  static ToeplitzElement shift();       // S  = {-1: 1}
  static ToeplitzElement shift_star();  // S* = {+1: 1}
  static ToeplitzElement unit_correction(int i, int j, Rational v = Rational(1));  // E_ij
  static ToeplitzElement from_symbol(std::map<int, Rational> symbol);

  const std::map<int, Rational>& symbol() const { return symbol_; }
  const std::vector<std::vector<Rational>>& correction() const { return corr_; }
  int corr_rows() const { return static_cast<int>(corr_.size()); }
  int corr_cols() const { return corr_.empty() ? 0 : static_cast<int>(corr_[0].size()); }
  int min_degree() const { return symbol_.empty() ? 0 : symbol_.begin()->first; }
  int max_degree() const { return symbol_.empty() ? 0 : symbol_.rbegin()->first; }
  // max(|degrees|, correction extent): every nonzero entry off the main band
  // and outside this square block is impossible
  int support_bound() const;

  bool is_zero() const { return symbol_.empty() && corr_.empty(); }
  Rational entry(int i, int j) const;  // exact operator entry, any i, j >= 0

  ToeplitzElement operator-() const;
  ToeplitzElement star() const;  // transpose: degree d -> -d, correction transposed
  friend ToeplitzElement operator+(const ToeplitzElement& a, const ToeplitzElement& b);
  friend ToeplitzElement operator-(const ToeplitzElement& a, const ToeplitzElement& b);
  friend ToeplitzElement operator*(const ToeplitzElement& a, const ToeplitzElement& b);
  friend bool operator==(const ToeplitzElement& a, const ToeplitzElement& b) {
    return a.symbol_ == b.symbol_ && a.corr_ == b.corr_;
  }
  friend bool operator!=(const ToeplitzElement& a, const ToeplitzElement& b) {
    return !(a == b);
  }

  // Dense n x n truncation; products of truncations taken beyond the support
  // bounds agree with operator products (the independent check used in tests).
  std::vector<std::vector<Rational>> truncate(int n) const;

  std::string to_string() const;

 private:
  void strip();
  std::map<int, Rational> symbol_;            // zero coefficients removed
  std::vector<std::vector<Rational>> corr_;   // rectangular, trailing zeros stripped
};

struct ToeplitzBounds {
  int band = 4;
  int corr = 4;
};

class ToeplitzRing final : public StarRing {
 public:
  static std::shared_ptr<const ToeplitzRing> create(ToeplitzBounds bounds = {});

  ToeplitzBounds bounds() const { return bounds_; }
  Element make(ToeplitzElement e) const;
  const ToeplitzElement& value_of(const Element& a) const;

  Element add(const Element& a, const Element& b) const override;
  Element negate(const Element& a) const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element star(const Element& a) const override;
  Element zero() const override;
  Element one() const override;
  bool equal(const Element& a, const Element& b) const override;
  std::string encode(const Element& a) const override;
  json element_payload(const Element& a) const override;
  Element parse_payload(const json& doc) const override;
  // Bounded: the unknown is restricted to symbol degrees within +-band and a
  // corr x corr correction block. Found answers are verified by replay;
  // anything else is UnknownAtBound.
  SolveResult solve_linear(std::span<const SolveTerm> terms, const Element& rhs) const override;
  Element random_element(std::mt19937_64& rng) const override;
  int default_k_max() const override { return 4; }

 private:
  explicit ToeplitzRing(ToeplitzBounds bounds);
  ToeplitzBounds bounds_;
};

}  // namespace ginv

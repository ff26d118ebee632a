#pragma once

// Gaussian rationals a + b*i with exact rational parts.
//
// Canonical text form (bit-exact round trip):
//   0          -> "0"
//   b == 0     -> "<re>"
//   a == 0     -> "i", "-i", "<b>i"          (unit coefficient elided)
//   otherwise  -> "<re>+<|b|>i" / "<re>-<|b|>i", unit coefficient elided.

#include <string>
#include <string_view>

#include "ginv/rational.hpp"

namespace ginv {

class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(std::int64_t v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }
  static Gaussian parse(std::string_view s);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Gaussian conj() const { return Gaussian(re_, -im_); }
  Gaussian operator-() const { return Gaussian(-re_, -im_); }
  Gaussian reciprocal() const;  // requires nonzero

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) { return a * b.reciprocal(); }
  Gaussian& operator+=(const Gaussian& b) { return *this = *this + b; }
  Gaussian& operator-=(const Gaussian& b) { return *this = *this - b; }
  Gaussian& operator*=(const Gaussian& b) { return *this = *this * b; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

}  // namespace ginv

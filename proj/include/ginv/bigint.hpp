#pragma once

// Arbitrary-precision signed integers, sign-magnitude with 32-bit limbs.
// Only what exact rational arithmetic needs: ring ops, divmod, gcd, decimal I/O.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ginv {

class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT(google-explicit-constructor)
  static BigInt from_decimal(std::string_view s);

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }
  bool is_one() const { return !negative_ && limbs_.size() == 1 && limbs_[0] == 1; }
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  // Truncated division (quotient rounds toward zero), require !b.is_zero().
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
  BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
  BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

  // -1 / 0 / +1 as a < b, a == b, a > b.
  static int compare(const BigInt& a, const BigInt& b);
  friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

  static BigInt gcd(BigInt a, BigInt b);  // nonnegative

  std::string to_decimal() const;

  // Fits in int64? (used by fast paths and tests)
  bool fits_int64() const;
  std::int64_t to_int64() const;  // requires fits_int64()

 private:
  bool negative_ = false;
  std::vector<std::uint32_t> limbs_;  // little endian, no trailing zero limbs

  void trim();
  static int compare_magnitude(const BigInt& a, const BigInt& b);
  static BigInt add_magnitude(const BigInt& a, const BigInt& b);
  static BigInt sub_magnitude(const BigInt& a, const BigInt& b);  // |a| >= |b|
  static void divmod_magnitude(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  void shift_left_bits(std::size_t bits);
  void shift_right_one_bit();
  std::size_t bit_length() const;
  bool bit(std::size_t i) const;
};

}  // namespace ginv

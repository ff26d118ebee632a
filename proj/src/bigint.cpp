#include "ginv/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace ginv {

BigInt::BigInt(std::int64_t v) {
  negative_ = v < 0;
  std::uint64_t m = negative_ ? (~static_cast<std::uint64_t>(v) + 1u) : static_cast<std::uint64_t>(v);
  while (m != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
    m >>= 32;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("BigInt: empty decimal string");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: sign without digits");
  BigInt r;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in decimal string");
    // r = r*10 + digit, carried through the limbs directly
    std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
    for (auto& limb : r.limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * 10u + carry;
      limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    while (carry != 0) {
      r.limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
      carry >>= 32;
    }
  }
  r.trim();
  r.negative_ = neg && !r.limbs_.empty();
  return r;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
  if (a.negative_ != b.negative_) return a.negative_ ? -1 : 1;
  int m = compare_magnitude(a, b);
  return a.negative_ ? -m : m;
}

BigInt BigInt::add_magnitude(const BigInt& a, const BigInt& b) {
  BigInt r;
  const auto& big = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
  const auto& small = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
  r.limbs_.reserve(big.size() + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < big.size(); ++i) {
    std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0u);
    r.limbs_.push_back(static_cast<std::uint32_t>(cur & 0xffffffffu));
    carry = cur >> 32;
  }
  if (carry != 0) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
  return r;
}

BigInt BigInt::sub_magnitude(const BigInt& a, const BigInt& b) {
  BigInt r;
  r.limbs_.reserve(a.limbs_.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::int64_t cur = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                       (i < b.limbs_.size() ? static_cast<std::int64_t>(b.limbs_[i]) : 0);
    if (cur < 0) {
      cur += static_cast<std::int64_t>(1) << 32;
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.limbs_.push_back(static_cast<std::uint32_t>(cur));
  }
  r.trim();
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.negative_ == b.negative_) {
    r = BigInt::add_magnitude(a, b);
    r.negative_ = a.negative_ && !r.limbs_.empty();
  } else if (BigInt::compare_magnitude(a, b) >= 0) {
    r = BigInt::sub_magnitude(a, b);
    r.negative_ = a.negative_ && !r.limbs_.empty();
  } else {
    r = BigInt::sub_magnitude(b, a);
    r.negative_ = b.negative_ && !r.limbs_.empty();
  }
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.limbs_.empty()) r.negative_ = !r.negative_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.negative_ = false;
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.is_zero() || b.is_zero()) return r;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                          r.limbs_[i + j] + carry;
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + b.limbs_.size();
    while (carry != 0) {
      std::uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  r.trim();
  r.negative_ = a.negative_ != b.negative_;
  return r;
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigInt::bit(std::size_t i) const {
  std::size_t limb = i / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 32)) & 1u;
}

void BigInt::shift_left_bits(std::size_t bits) {
  if (is_zero() || bits == 0) return;
  std::size_t limb_shift = bits / 32;
  std::size_t bit_shift = bits % 32;
  std::vector<std::uint32_t> out(limbs_.size() + limb_shift + 1, 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
    out[i + limb_shift] |= static_cast<std::uint32_t>(cur & 0xffffffffu);
    out[i + limb_shift + 1] |= static_cast<std::uint32_t>(cur >> 32);
  }
  limbs_ = std::move(out);
  trim();
}

void BigInt::shift_right_one_bit() {
  std::uint32_t carry = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint32_t cur = limbs_[i];
    limbs_[i] = (cur >> 1) | (carry << 31);
    carry = cur & 1u;
  }
  trim();
}

// Binary long division on magnitudes: simple and exact; fast enough for the
// operand sizes exact linear algebra produces here.
void BigInt::divmod_magnitude(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  q = BigInt();
  r = BigInt();
  if (compare_magnitude(a, b) < 0) {
    r = a.abs();
    return;
  }
  std::size_t shift = a.bit_length() - b.bit_length();
  BigInt d = b.abs();
  d.shift_left_bits(shift);
  BigInt rem = a.abs();
  std::vector<std::uint32_t> qbits(shift / 32 + 1, 0);
  for (std::size_t i = shift + 1; i-- > 0;) {
    if (compare_magnitude(rem, d) >= 0) {
      rem = sub_magnitude(rem, d);
      qbits[i / 32] |= (1u << (i % 32));
    }
    d.shift_right_one_bit();
  }
  q.limbs_ = std::move(qbits);
  q.trim();
  r = rem;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod_magnitude(a, b, q, r);
  q.negative_ = (a.negative_ != b.negative_) && !q.limbs_.empty();
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod_magnitude(a, b, q, r);
  r.negative_ = a.negative_ && !r.limbs_.empty();
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.negative_ = false;
  b.negative_ = false;
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Stein's algorithm: no division, only shifts and subtraction.
  std::size_t twos = 0;
  while (a.is_even() && b.is_even()) {
    a.shift_right_one_bit();
    b.shift_right_one_bit();
    ++twos;
  }
  while (a.is_even()) a.shift_right_one_bit();
  while (!b.is_zero()) {
    while (b.is_even()) b.shift_right_one_bit();
    if (compare_magnitude(a, b) > 0) std::swap(a, b);
    b = sub_magnitude(b, a);
  }
  a.shift_left_bits(twos);
  return a;
}

std::string BigInt::to_decimal() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> work = limbs_;
  std::string digits;
  while (!work.empty()) {
    // divide the magnitude by 1e9, collecting the remainder
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    for (int d = 0; d < 9; ++d) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (negative_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

bool BigInt::fits_int64() const {
  if (limbs_.size() < 2) return true;
  if (limbs_.size() > 2) return false;
  std::uint64_t m = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
  return negative_ ? m <= (1ull << 63) : m < (1ull << 63);
}

std::int64_t BigInt::to_int64() const {
  std::uint64_t m = 0;
  if (!limbs_.empty()) m = limbs_[0];
  if (limbs_.size() > 1) m |= static_cast<std::uint64_t>(limbs_[1]) << 32;
  return negative_ ? -static_cast<std::int64_t>(m) : static_cast<std::int64_t>(m);
}

}  // namespace ginv

#include "ginv/gaussian.hpp"

#include <stdexcept>

namespace ginv {

Gaussian Gaussian::reciprocal() const {
  if (is_zero()) throw std::domain_error("Gaussian: reciprocal of zero");
  Rational n = re_ * re_ + im_ * im_;
  return Gaussian(re_ / n, -im_ / n);
}

namespace {

// A term is a signed rational with an optional trailing 'i'.
struct Term {
  Rational value;
  bool imaginary = false;
};

Term parse_term(std::string_view s) {
  Term t;
  if (!s.empty() && s.back() == 'i') {
    t.imaginary = true;
    s.remove_suffix(1);
    if (s.empty() || s == "+") {
      t.value = Rational(1);
      return t;
    }
    if (s == "-") {
      t.value = Rational(-1);
      return t;
    }
  }
  t.value = Rational::parse(s);
  return t;
}

}  // namespace

Gaussian Gaussian::parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Gaussian: empty string");
  // split on the last top-level +/- that is not a leading sign
  std::size_t split = std::string_view::npos;
  for (std::size_t pos = s.size(); pos-- > 1;) {
    if ((s[pos] == '+' || s[pos] == '-') && s[pos - 1] != '/' && s[pos - 1] != '+' &&
        s[pos - 1] != '-') {
      split = pos;
      break;
    }
  }
  if (split == std::string_view::npos) {
    Term t = parse_term(s);
    return t.imaginary ? Gaussian(Rational(0), t.value) : Gaussian(t.value, Rational(0));
  }
  Term first = parse_term(s.substr(0, split));
  Term second = parse_term(s.substr(split));
  if (first.imaginary == second.imaginary)
    throw std::invalid_argument("Gaussian: expected one real and one imaginary term");
  if (first.imaginary) std::swap(first, second);
  return Gaussian(first.value, second.value);
}

std::string Gaussian::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string im_part;
  Rational mag = im_.is_negative() ? -im_ : im_;
  if (!mag.is_one()) im_part = mag.to_string();
  im_part += "i";
  if (re_.is_zero()) return (im_.is_negative() ? "-" : "") + im_part;
  return re_.to_string() + (im_.is_negative() ? "-" : "+") + im_part;
}

}  // namespace ginv

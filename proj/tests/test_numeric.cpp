#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ginv/bigint.hpp"
#include "ginv/gaussian.hpp"
#include "ginv/rational.hpp"

using namespace ginv;

TEST_CASE("bigint decimal round trip and known powers") {
  CHECK(BigInt(0).to_decimal() == "0");
  CHECK(BigInt(-1).to_decimal() == "-1");
  CHECK(BigInt::from_decimal("123456789012345678901234567890").to_decimal() ==
        "123456789012345678901234567890");
  // 2^100
  BigInt p(1);
  for (int i = 0; i < 100; ++i) p *= BigInt(2);
  CHECK(p.to_decimal() == "1267650600228229401496703205376");
  // 20!
  BigInt f(1);
  for (int i = 2; i <= 20; ++i) f *= BigInt(i);
  CHECK(f.to_decimal() == "2432902008176640000");
}

TEST_CASE("bigint arithmetic agrees with int64 on random small values") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
  for (int t = 0; t < 2000; ++t) {
    std::int64_t a = dist(rng), b = dist(rng);
    CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
    CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
    CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
    if (b != 0) {
      CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
      CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
    }
  }
}

TEST_CASE("bigint divmod identity on large operands") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> dist(1, 1000000007);
  for (int t = 0; t < 200; ++t) {
    BigInt a = BigInt(dist(rng)) * BigInt(dist(rng)) * BigInt(dist(rng));
    BigInt b = BigInt(dist(rng)) * BigInt(dist(rng));
    if (t % 2) a = -a;
    BigInt q = a / b;
    BigInt r = a % b;
    CHECK(q * b + r == a);
    CHECK(BigInt::compare(r.abs(), b.abs()) < 0);
  }
}

TEST_CASE("bigint gcd") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(18)).to_decimal() == "6");
  CHECK(BigInt::gcd(BigInt(0), BigInt(-7)).to_decimal() == "7");
  CHECK(BigInt::gcd(BigInt::from_decimal("123456789123456789"),
                    BigInt::from_decimal("987654321"))
            .to_decimal() == "9");
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(1, 1000000);
  for (int t = 0; t < 300; ++t) {
    std::int64_t g = dist(rng) % 1000 + 1;
    std::int64_t a = dist(rng) * g, b = dist(rng) * g;
    BigInt got = BigInt::gcd(BigInt(a), BigInt(b));
    CHECK(got.to_int64() % g == 0);
    CHECK(a % got.to_int64() == 0);
    CHECK(b % got.to_int64() == 0);
  }
}

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(Rational(BigInt(2), BigInt(4)).to_string() == "1/2");
  CHECK(Rational(BigInt(-2), BigInt(-4)).to_string() == "1/2");
  CHECK(Rational(BigInt(2), BigInt(-4)).to_string() == "-1/2");
  CHECK(Rational(BigInt(0), BigInt(-5)).to_string() == "0");
  CHECK(Rational::parse("6/3").to_string() == "2");
  CHECK((Rational::parse("1/3") + Rational::parse("1/6")).to_string() == "1/2");
  CHECK((Rational::parse("2/3") * Rational::parse("9/4")).to_string() == "3/2");
  CHECK((Rational::parse("1/3") - Rational::parse("1/3")).is_zero());
  CHECK(Rational::parse("-5/7").reciprocal().to_string() == "-7/5");
}

TEST_CASE("rational field laws on random values") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 30);
  auto rnd = [&] { return Rational(BigInt(num(rng)), BigInt(den(rng))); };
  for (int t = 0; t < 500; ++t) {
    Rational a = rnd(), b = rnd(), c = rnd();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    if (!a.is_zero()) CHECK(a * a.reciprocal() == Rational(1));
    CHECK(Rational::parse(a.to_string()) == a);
  }
}

TEST_CASE("gaussian canonical formatting is bit-exact") {
  CHECK(Gaussian::parse("3/4+1/2i").to_string() == "3/4+1/2i");
  CHECK(Gaussian::parse("-i").to_string() == "-i");
  CHECK(Gaussian::parse("i").to_string() == "i");
  CHECK(Gaussian::parse("0").to_string() == "0");
  CHECK(Gaussian::parse("3-i").to_string() == "3-i");
  CHECK(Gaussian::parse("-1/2-2/3i").to_string() == "-1/2-2/3i");
  CHECK(Gaussian::parse("2i").to_string() == "2i");
  CHECK(Gaussian::parse("5").to_string() == "5");
  // i^2 = -1
  CHECK((Gaussian::i() * Gaussian::i()).to_string() == "-1");
}

TEST_CASE("gaussian arithmetic and conjugation") {
  Gaussian a = Gaussian::parse("1+2i");
  Gaussian b = Gaussian::parse("3-i");
  CHECK((a * b).to_string() == "5+5i");
  CHECK(a.conj().to_string() == "1-2i");
  CHECK((a * a.conj()).to_string() == "5");
  CHECK((a * a.reciprocal()).is_one());
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> coef(-9, 9);
  auto rnd = [&] {
    return Gaussian(Rational(coef(rng)), Rational(coef(rng)));
  };
  for (int t = 0; t < 300; ++t) {
    Gaussian x = rnd(), y = rnd();
    CHECK((x * y).conj() == y.conj() * x.conj());
    CHECK(Gaussian::parse(x.to_string()) == x);
  }
}

#include "doctest.h"
#include "ulrich/rational.hpp"
#include "ulrich/rng.hpp"

using namespace ulrich;

namespace {

// Independent oracle: the falling factorial spelled out term by term.
Rational falling_factorial_oracle(const Rational& x, unsigned m) {
  Rational num = 1, den = 1;
  for (unsigned i = 0; i < m; ++i) {
    num *= x - int(i);
    den *= int(i) + 1;
  }
  return num / den;
}

Rational random_rational(SplitMix64& gen) {
  const long p = long(gen.below(101)) - 50;
  const long q = long(gen.below(20)) + 1;
  return Rational(p, q);
}

}  // namespace

TEST_CASE("gen_binomial matches the direct product on the worked values") {
  CHECK(gen_binomial(Rational(2, 3), 3) == Rational(4, 81));
  CHECK(gen_binomial(Rational(2, 3), 3) == falling_factorial_oracle(Rational(2, 3), 3));
  CHECK(gen_binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(gen_binomial(Rational(1, 2), 2) == falling_factorial_oracle(Rational(1, 2), 2));
  for (int n = 0; n <= 12; ++n) CHECK(gen_binomial(Rational(n), unsigned(n)) == 1);
  CHECK(gen_binomial(Rational(7, 5), 0) == 1);
}

TEST_CASE("gen_binomial agrees with ordinary binomials for integer arguments") {
  // Brute-force C(k, m) via factorials, k, m <= 20.
  std::vector<Integer> fact(21);
  fact[0] = 1;
  for (int i = 1; i <= 20; ++i) fact[i] = fact[i - 1] * i;
  for (int k = 0; k <= 20; ++k)
    for (int m = 0; m <= k; ++m) {
      const Integer expected = fact[k] / (fact[m] * fact[k - m]);
      CHECK(gen_binomial(Rational(k), unsigned(m)) == Rational(expected));
      CHECK(binomial(Integer(k), unsigned(m)) == expected);
    }
  CHECK(binomial(Integer(5), 9) == 0);
}

TEST_CASE("gen_binomial vanishes exactly at the falling factorial's roots") {
  for (unsigned m = 1; m <= 6; ++m)
    for (int x = -10; x <= 20; ++x) {
      const bool is_root = x >= 0 && x < int(m);
      CHECK((gen_binomial(Rational(x), m) == 0) == is_root);
    }
  // Non-integral arguments are never roots.
  SplitMix64 gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    Rational x = random_rational(gen);
    if (is_integer(x)) x += Rational(1, 2);
    for (unsigned m = 1; m <= 5; ++m) CHECK(gen_binomial(x, m) != 0);
  }
}

TEST_CASE("gen_binomial satisfies the Pascal identity") {
  SplitMix64 gen(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational x = random_rational(gen);
    const unsigned m = unsigned(gen.below(8)) + 1;
    CHECK(gen_binomial(x, m) == gen_binomial(x - 1, m) + gen_binomial(x - 1, m - 1));
  }
}

TEST_CASE("rationals stay reduced with positive denominators") {
  SplitMix64 gen(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational a = random_rational(gen), b = random_rational(gen);
    for (const Rational& v : {a + b, a - b, a * b, gen_binomial(a, unsigned(gen.below(6)))}) {
      CHECK(denominator(v) > 0);
      CHECK(gcd(abs(numerator(v)), denominator(v)) == 1);
    }
  }
}

TEST_CASE("rational serialization: p/q with the sign on the numerator") {
  CHECK(to_string(Rational(-1, 8)) == "-1/8");
  CHECK(to_string(Rational(4, 81)) == "4/81");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(to_string(Rational(0)) == "0");

  CHECK(rational_from_string("2/6") == Rational(1, 3));
  CHECK(rational_from_string("-3/6") == Rational(-1, 2));
  CHECK(rational_from_string("4/-6") == Rational(-2, 3));
  CHECK(rational_from_string("15") == Rational(15));
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);

  SplitMix64 gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational x = random_rational(gen);
    CHECK(rational_from_string(to_string(x)) == x);
  }
}

TEST_CASE("to_integer accepts exactly the integers") {
  CHECK(to_integer(Rational(12, 4)) == 3);
  CHECK_THROWS_AS(to_integer(Rational(1, 2)), std::invalid_argument);
}

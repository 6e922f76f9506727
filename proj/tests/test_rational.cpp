#include <doctest.h>

#include "esa/errors.hpp"
#include "esa/level.hpp"
#include "esa/rational.hpp"

using esa::Level;
using esa::Rational;

TEST_CASE("fraction strings always carry a denominator") {
  CHECK(esa::fraction_string(Rational(3)) == "3/1");
  CHECK(esa::fraction_string(Rational(0)) == "0/1");
  CHECK(esa::fraction_string(Rational(-6, 4)) == "-3/2");
  CHECK(esa::compact_string(Rational(3)) == "3");
  CHECK(esa::compact_string(Rational(1, 2)) == "1/2");
}

TEST_CASE("rational literals round trip and reject garbage") {
  CHECK(esa::parse_rational("13/16") == Rational(13, 16));
  CHECK(esa::parse_rational("-2") == Rational(-2));
  CHECK(esa::parse_rational("4/8") == Rational(1, 2));
  CHECK_THROWS_AS(esa::parse_rational("1/0"), esa::ParseError);
  CHECK_THROWS_AS(esa::parse_rational("x"), esa::ParseError);
  CHECK_THROWS_AS(esa::parse_rational(""), esa::ParseError);
  CHECK_THROWS_AS(esa::parse_rational("1/2/3"), esa::ParseError);
}

TEST_CASE("floor, ceil and powers of two") {
  CHECK(esa::floor_of(Rational(7, 2)) == 3);
  CHECK(esa::ceil_of(Rational(7, 2)) == 4);
  CHECK(esa::floor_of(Rational(-7, 2)) == -4);
  CHECK(esa::ceil_of(Rational(-7, 2)) == -3);
  CHECK(esa::ceil_of(Rational(4)) == 4);
  CHECK(esa::pow2(16) == 65536);
  CHECK(esa::pow2(70) == esa::BigInt(1) << 70);
}

TEST_CASE("dyadic expansion of 13/16") {
  const Level l = Level::expand(2, Rational(13, 16), 4);
  CHECK(l.depth() == 4);
  CHECK(l.digits() == std::vector<int>{0, 1, 1, 0, 1});
  CHECK(l.value() == Rational(13, 16));
  CHECK(l.units(4) == 13);
}

TEST_CASE("zero and one have depth zero") {
  const Level zero = Level::expand(2, Rational(0), 3);
  CHECK(zero.depth() == 0);
  CHECK(zero.is_zero());
  const Level one = Level::expand(2, Rational(1), 3);
  CHECK(one.depth() == 0);
  CHECK(one.digit(0) == 1);
  CHECK(one.is_one());
}

TEST_CASE("levels not representable at the depth bound are rejected") {
  CHECK_THROWS_AS(Level::expand(2, Rational(1, 8), 2), esa::DomainError);
  CHECK_THROWS_AS(Level::expand(2, Rational(3, 2), 4), esa::DomainError);
  CHECK_THROWS_AS(Level::expand(4, Rational(1, 2), 0), esa::DomainError);
  CHECK_THROWS_AS(Level::from_units(2, 5, 2), esa::DomainError);
}

TEST_CASE("digits reconstruct the value for every dyadic and tetradic level") {
  for (int base : {2, 4}) {
    for (int n = 0; n <= 4; ++n) {
      std::uint64_t denom = 1;
      for (int i = 0; i < n; ++i) denom *= base;
      for (std::uint64_t u = 0; u <= denom; ++u) {
        const Level l = Level::from_units(base, u, n);
        Rational sum = 0, weight = 1;
        for (int d : l.digits()) {
          sum += d * weight;
          weight /= base;
        }
        CHECK(sum == Rational(u, denom));
        if (!l.is_zero() && l.depth() > 0) CHECK(l.digits().back() != 0);
      }
    }
  }
}

TEST_CASE("truncation and order") {
  const Level l = Level::expand(2, Rational(13, 16), 4);
  CHECK(l.truncated(2).value() == Rational(3, 4));
  CHECK(l.truncated(0).value() == 0);
  CHECK(Level::expand(2, Rational(1, 2), 2) < Level::expand(2, Rational(3, 4), 2));
  CHECK(Level::expand(4, Rational(3, 16), 2) < Level::expand(4, Rational(1, 4), 2));
}

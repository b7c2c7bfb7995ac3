#include "tuning/errors.hpp"
#include "tuning/rational.hpp"

#include "doctest.h"

using tuning::BigInt;
using tuning::Rational;

TEST_CASE("rational is kept in lowest terms with positive denominator") {
  Rational r(BigInt(6), BigInt(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(10, 5) == Rational(2));
}

TEST_CASE("rational arithmetic") {
  const Rational a(9, 8);
  const Rational b(256, 243);
  CHECK(a / b == Rational(2187, 2048));
  CHECK(a - a == Rational(0));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(3, 2).pow(12) == Rational(531441, 4096));
  CHECK(Rational(3, 2).pow(-2) == Rational(4, 9));
  CHECK(Rational(3, 2).pow(0) == Rational(1));
}

TEST_CASE("rational ordering follows the real value") {
  CHECK(Rational(256, 243) < Rational(2187, 2048));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(4, 3) > Rational(5, 4));
  CHECK((Rational(2, 4) <=> Rational(1, 2)) == std::strong_ordering::equal);
}

TEST_CASE("floor rounds toward negative infinity") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-4, 2).floor() == -2);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("531441/524288") == Rational(531441, 524288));
  CHECK(Rational::parse("2") == Rational(2));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), tuning::DomainError);
  CHECK_THROWS_AS(Rational::parse("x/2"), tuning::DomainError);
  CHECK_THROWS_AS(Rational::parse(""), tuning::DomainError);
}

TEST_CASE("zero handling") {
  CHECK_THROWS_AS(Rational(1, 0), tuning::DomainError);
  CHECK_THROWS_AS(Rational(0).reciprocal(), tuning::DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), tuning::DomainError);
}

TEST_CASE("string forms") {
  CHECK(Rational(2).str() == "2");
  CHECK(Rational(2).ratio_str() == "2/1");
  CHECK(Rational(15, 8).str() == "15/8");
}

TEST_CASE("to_double on large values") {
  const Rational big(BigInt(1) << 200, (BigInt(1) << 199) * 3);
  CHECK(big.to_double() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

#include "critlab/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using critlab::Rational;

TEST_CASE("construction normalizes to lowest terms") {
  Rational r(6, 8);
  CHECK(r.num() == 3);
  CHECK(r.den() == 4);

  Rational n(3, -4);
  CHECK(n.num() == -3);
  CHECK(n.den() == 4);

  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("ordering") {
  CHECK(Rational(2, 3) < Rational(3, 4));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(5, 10) == Rational(1, 2));
  CHECK(critlab::min(Rational(1, 4), Rational(1, 5)) == Rational(1, 5));
  CHECK(critlab::max(Rational(1, 4), Rational(1, 5)) == Rational(1, 4));
}

TEST_CASE("parsing fractions, integers, decimals") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse(" 0.75 ") == Rational(3, 4));
  CHECK(Rational::parse("0.9") == Rational(9, 10));
  CHECK(Rational::parse("-2.5") == Rational(-5, 2));
  CHECK(Rational::parse("1.25") == Rational(5, 4));
  CHECK(Rational::parse("0.1") == Rational(1, 10));  // exact base-10, not binary

  CHECK_FALSE(Rational::try_parse("").has_value());
  CHECK_FALSE(Rational::try_parse("a/b").has_value());
  CHECK_FALSE(Rational::try_parse("1/0").has_value());
  CHECK_FALSE(Rational::try_parse("1.").has_value());
  CHECK_FALSE(Rational::try_parse("1e3").has_value());
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("string round trip and conversion") {
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-7).str() == "-7");
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("no overflow on long chains") {
  Rational acc(1);
  for (int i = 2; i <= 40; ++i) acc *= Rational(i, i + 1);
  CHECK(acc == Rational(2, 41));
}

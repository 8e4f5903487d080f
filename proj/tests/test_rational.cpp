#include <cstdint>
#include <stdexcept>

#include "doctest.h"
#include "scott/errors.hpp"
#include "scott/rational.hpp"

using scott::Rational;

TEST_CASE("rational normalization and accessors") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(3, -2) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(5, 1).num() == 5);
  CHECK(Rational(5, 1).den() == 1);
  CHECK(Rational(-3, 2).den() == 2);
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK(Rational::pow2_neg(0) == Rational(1));
  CHECK(Rational::pow2_neg(5) == Rational(1, 32));
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(1, 2) <= Rational(2, 4));
  CHECK(Rational(0).is_zero());
  CHECK(Rational(1, 9).is_positive());
  CHECK(!Rational(-1, 9).is_positive());
}

TEST_CASE("rational parse and to_string round trip") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(-7).to_string() == "-7");
  CHECK(Rational::parse(Rational(22, 7).to_string()) == Rational(22, 7));
  CHECK_THROWS_AS(Rational::parse("abc"), scott::ValidationError);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::exception);
  CHECK_THROWS_AS(Rational::parse(""), scott::ValidationError);
}

TEST_CASE("rational overflow throws instead of rounding") {
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_THROWS_AS(big + big + big, std::overflow_error);
}

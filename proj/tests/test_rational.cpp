#include <doctest.h>

#include <stdexcept>

#include "doflab/rational.hpp"

using doflab::Rational;

TEST_CASE("rational normalization keeps lowest terms, positive denominator") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, -7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1) - Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(3, 2) == Rational(-3, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational ordering via exact cross multiplication") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 7) == Rational(1));
  CHECK(Rational(10, 20) <= Rational(1, 2));
}

TEST_CASE("rational canonical string and parse round trip") {
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(4).str() == "4");
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("rational floor handles negatives") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(4).floor() == 4);
}

TEST_CASE("rational overflow is detected, not wrapped") {
  const Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

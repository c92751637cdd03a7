#include "doctest.h"
#include "fcone/rational.hpp"

#include <random>
#include <stdexcept>

using fcone::Rational;

TEST_CASE("pq and display forms") {
  CHECK(fcone::to_pq_string(Rational(3)) == "3/1");
  CHECK(fcone::to_pq_string(Rational(-6, 4)) == "-3/2");
  CHECK(fcone::to_display_string(Rational(7)) == "7");
  CHECK(fcone::to_display_string(Rational(-1, 3)) == "-1/3");
  CHECK(fcone::to_display_string(Rational(0)) == "0");
}

TEST_CASE("parse accepts integers and fractions") {
  CHECK(fcone::parse_rational("12") == 12);
  CHECK(fcone::parse_rational("-4/6") == Rational(-2, 3));
  CHECK(fcone::parse_rational("0/5") == 0);
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(fcone::parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(fcone::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(fcone::parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(fcone::parse_rational("1/"), std::invalid_argument);
}

TEST_CASE("round trip through both string forms") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 5000);
  for (int k = 0; k < 500; ++k) {
    Rational r(num(rng), den(rng));
    CHECK(fcone::parse_rational(fcone::to_pq_string(r)) == r);
    CHECK(fcone::parse_rational(fcone::to_display_string(r)) == r);
  }
}

TEST_CASE("dot product is exact") {
  fcone::RationalVector a{Rational(1, 3), Rational(1, 3), Rational(1, 3)};
  fcone::RationalVector b{1, 1, 1};
  CHECK(fcone::dot(a, b) == 1);
  CHECK(fcone::dot({}, {}) == 0);
}

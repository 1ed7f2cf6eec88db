#include "affinefloer/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace affinefloer;

TEST_CASE("parse and print") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational(" 6/4 ") == Rational(3, 2));
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("ratio normalises signs") {
  CHECK(ratio(1, -2) == Rational(-1, 2));
  CHECK(ratio(-3, -6) == Rational(1, 2));
  CHECK(ratio(0, -5) == 0);
  CHECK_THROWS_AS(ratio(1, 0), std::domain_error);
  CHECK(parse_rational("1/-2") == Rational(-1, 2));
}

TEST_CASE("floor and ceil on negatives") {
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
  CHECK(floor(Rational(7, 3)) == 2);
  CHECK(ceil(Rational(7, 3)) == 3);
  CHECK(floor(Rational(-4)) == -4);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, -2) == -4);
  CHECK(floor_div(6, 3) == 2);
}

TEST_CASE("binomial matches Pascal") {
  for (int n = 0; n <= 30; ++n) {
    for (int k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    CHECK(binomial(n, 0) == 1);
    CHECK(binomial(n, n) == 1);
    CHECK(binomial(n, n + 1) == 0);
    CHECK(binomial(n, -1) == 0);
  }
  CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
  CHECK_THROWS_AS(to_int64(binomial(100, 50)), std::overflow_error);
}

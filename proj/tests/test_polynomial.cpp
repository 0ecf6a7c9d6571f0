#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vmvt/errors.hpp"
#include "vmvt/polynomial.hpp"

using namespace vmvt;

TEST_CASE("parsing and printing") {
  const auto f = parse_poly("x1^2 - 7", 1);
  CHECK(f.degree() == 2);
  CHECK(f.coeff(2) == 1);
  CHECK(f.coeff(0) == -7);
  CHECK(parse_poly("x^2 - 7", 1) == f);
  CHECK(parse_poly("(x1 + 1)^3", 1) == parse_poly("x1^3 + 3*x1^2 + 3*x1 + 1", 1));
  CHECK(parse_poly("x1*x2 - x2*x1", 2).is_zero());
  CHECK(parse_poly("-(x1 - 2)", 1) == parse_poly("2 - x1", 1));
  CHECK(parse_poly(f.str(), 1) == f);
  CHECK_THROWS_AS(parse_poly("x3", 2), InvalidParams);
  CHECK_THROWS_AS(parse_poly("x1 +", 1), InvalidParams);
  CHECK_THROWS_AS(parse_poly("x^2", 2), InvalidParams);
}

TEST_CASE("derivatives and modular evaluation") {
  const auto f = parse_poly("x1^3*x2 + 5*x2^2 - 4", 2);
  CHECK(f.derivative(0) == parse_poly("3*x1^2*x2", 2));
  CHECK(f.derivative(1) == parse_poly("x1^3 + 10*x2", 2));
  CHECK(f.eval_mod({2, 3}, 7) == (8 * 3 + 45 - 4) % 7);
  CHECK(parse_poly("0 - 10", 1).eval_mod({0}, 7) == 4);
  CHECK(f.degree() == 4);
}

TEST_CASE("ring identities") {
  const auto a = parse_poly("x1 + 2*x2", 2);
  const auto b = parse_poly("x1 - x2 + 3", 2);
  CHECK(a * b == b * a);
  CHECK((a + b) * (a + b) == a * a + a * b + a * b + b * b);
  CHECK(a.pow(3) == a * a * a);
  CHECK((a - a).is_zero());
}

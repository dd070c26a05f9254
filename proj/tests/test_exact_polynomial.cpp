#include <doctest.h>

#include "resmahler/errors.hpp"
#include "resmahler/exact.hpp"
#include "support.hpp"

using namespace resmahler;
using resmahler::test::laurent;
using resmahler::test::poly;

TEST_SUITE("exact_polynomial") {
  TEST_CASE("bareiss determinant") {
    CHECK(bareiss_determinant({}) == 1);
    CHECK(bareiss_determinant({{7}}) == 7);
    CHECK(bareiss_determinant({{1, 2}, {3, 4}}) == -2);
    // Zero leading pivot forces a row swap.
    CHECK(bareiss_determinant({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}) == -1);
    CHECK(bareiss_determinant({{2, 4, 6}, {1, 2, 3}, {0, 5, 7}}) == 0);
    // Vandermonde on 1..5: product of differences = 288.
    IntegerMatrix v(5, std::vector<Integer>(5));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) v[i][j] = boost::multiprecision::pow(Integer(i + 1), static_cast<unsigned>(j));
    CHECK(bareiss_determinant(v) == 288);
  }

  TEST_CASE("rational helpers") {
    CHECK(is_integer(Rational(6, 3)));
    CHECK_FALSE(is_integer(Rational(1, 2)));
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK(to_double(Rational(1, 4)) == 0.25);
  }

  TEST_CASE("univariate arithmetic") {
    const RationalPoly f = poly({1, 1});  // 1 + t
    CHECK((f * f) == poly({1, 2, 1}));
    CHECK((f - f).is_zero());
    CHECK((f - f).degree() == -1);
    CHECK(poly({1, 2, 1}).derivative() == poly({2, 2}));
    CHECK(poly({1, 2, 1}).evaluate(Rational(2)) == 9);
    CHECK_THROWS_AS((void)RationalPoly().leading(), DomainError);
  }

  TEST_CASE("divmod and gcd") {
    const auto [q, r] = divmod(poly({-1, 0, 1}), poly({1, 1}));
    CHECK(q == poly({-1, 1}));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(divmod(poly({1}), RationalPoly()), DomainError);
    CHECK(gcd(poly({1, 2, 1}), poly({3, 4, 1})) == poly({1, 1}));
    CHECK(gcd(poly({1, 1}), poly({-1, 1})) == poly({1}));
  }

  TEST_CASE("squarefree primitive part") {
    // 2 (t+1)^2 (t-1) -> t^2 - 1
    const RationalPoly f = Rational(2) * (poly({1, 1}) * poly({1, 1}) * poly({-1, 1}));
    CHECK(squarefree_primitive_part(f) == poly({-1, 0, 1}));
    CHECK(squarefree_primitive_part(poly({3, -6})) == poly({-1, 2}));
  }

  TEST_CASE("parser accepts the documented grammar") {
    const ParsedPolynomial p = parse_polynomial("3*x^2*y^-1 - 1/2*(x+1)^2 + 0.25");
    REQUIRE(p.variables == std::vector<std::string>{"x", "y"});
    CHECK(p.poly.coefficient({2, -1}) == 3);
    CHECK(p.poly.coefficient({2, 0}) == Rational(-1, 2));
    CHECK(p.poly.coefficient({1, 0}) == -1);
    CHECK(p.poly.coefficient({0, 0}) == Rational(-1, 4));
    CHECK(p.poly.size() == 4);
    CHECK(laurent("(x+y)^2 - x^2 - 2*x*y - y^2").is_zero());
    CHECK(laurent("-x").coefficient({1}) == -1);
    CHECK(laurent("010*x + 0.05 + 07/08").coefficient({1}) == 10);
    CHECK(laurent("010*x + 0.05 + 07/08").coefficient({0}) == Rational(37, 40));
  }

  TEST_CASE("parser rejects malformed text") {
    CHECK_THROWS_AS(parse_polynomial(""), InputError);
    CHECK_THROWS_AS(parse_polynomial("2x"), InputError);
    CHECK_THROWS_AS(parse_polynomial("x +"), InputError);
    CHECK_THROWS_AS(parse_polynomial("(x+1"), InputError);
    CHECK_THROWS_AS(parse_polynomial("(x+1)^-1"), InputError);
    CHECK_THROWS_AS(parse_polynomial("x^y"), InputError);
    CHECK_THROWS_AS(parse_polynomial("x $ y"), InputError);
  }

  TEST_CASE("printing round-trips") {
    const ParsedPolynomial p = parse_polynomial("x*y - 3*x + 1/2*y^-2 - 7");
    const std::string text = to_string(p.poly, p.variables);
    CHECK(parse_polynomial(text).poly == p.poly);
  }

  TEST_CASE("laurent arithmetic") {
    const RationalLaurent x = RationalLaurent::variable(0, 2);
    const RationalLaurent y = RationalLaurent::variable(1, 2);
    const RationalLaurent one = RationalLaurent::constant(1, 2);
    CHECK((x + y).pow(3).size() == 4);
    CHECK((x - y) * (x + y) == x * x - y * y);
    CHECK((-(x + one)).coefficient({0, 0}) == -1);
    const std::vector<Rational> at{Rational(2), Rational(3)};
    CHECK((x * y + one).evaluate(at) == 7);
    CHECK_THROWS_AS(x + RationalLaurent::variable(0, 3), InputError);
  }
}

#include <doctest.h>

#include "support.hpp"
#include "tcla/cartan_poly.hpp"
#include "tcla/error.hpp"

using namespace tcla;

namespace {

CartanPoly gen(int h, int t) { return CartanPoly::generator({static_cast<std::uint16_t>(h), static_cast<std::uint16_t>(t)}); }

std::string name(std::uint16_t i) { return "h" + std::to_string(i + 1); }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -4 ") == -4);
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
}

TEST_CASE("rational parsing rejects junk") {
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("poly_add") {
  const CartanPoly p = gen(0, 1);
  CHECK(poly_add(CartanPoly(), p) == p);
  CHECK(poly_add(p, -p).is_zero());
  const CartanPoly s = poly_add(gen(0, 1), gen(1, 1));
  CHECK(s.size() == 2);
}

TEST_CASE("poly_mul") {
  const CartanPoly p = gen(0, 1) + 3 * gen(1, 0);
  CHECK(poly_mul(CartanPoly(1), p) == p);
  const CartanPoly sq = poly_mul(gen(0, 1), gen(0, 1));
  REQUIRE(sq.size() == 1);
  CHECK(sq.terms()[0].coeff == 1);
  CHECK(sq.terms()[0].monomial.degree() == 2);
  CHECK(poly_mul(gen(0, 0) + gen(1, 0), gen(0, 0) - gen(1, 0)) == gen(0, 0) * gen(0, 0) - gen(1, 0) * gen(1, 0));
}

TEST_CASE("poly_eval") {
  Functional lam;
  CHECK(poly_eval(CartanPoly(), lam) == 0);
  lam.set({0, 1}, 5);
  CHECK(poly_eval(gen(0, 1), lam) == 5);
  lam.set({0, 1}, 2);
  lam.set({1, 1}, -1);
  CHECK(poly_eval(gen(0, 1).pow(2) * gen(1, 1) + 3, lam) == -1);
  CHECK_THROWS_AS(poly_eval(gen(2, 0), lam), MissingAssignment);
}

TEST_CASE("t-degree components") {
  auto parts = poly_t_degree_components(gen(0, 0) + gen(0, 1));
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(0) == gen(0, 0));
  CHECK(parts.at(1) == gen(0, 1));
  auto sq = poly_t_degree_components(gen(0, 1).pow(2));
  REQUIRE(sq.size() == 1);
  CHECK(sq.count(2) == 1);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = test_support::random_poly(rng);
    const auto b = test_support::random_poly(rng);
    const auto c = test_support::random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    const auto lam = test_support::random_functional(rng);
    CHECK(poly_eval(a * b + c, lam) == poly_eval(a, lam) * poly_eval(b, lam) + poly_eval(c, lam));
  }
}

TEST_CASE("canonical form does not depend on construction order") {
  const CartanPoly x = gen(0, 1), y = gen(1, 0);
  const CartanPoly p1 = (x + y) * (x - y) + 2 * y * y;
  const CartanPoly p2 = y * y + x * x;
  CHECK(p1 == p2);
  std::vector<CartanPoly::Term> terms(p2.terms().rbegin(), p2.terms().rend());
  CHECK(CartanPoly::from_terms(terms) == p2);
}

TEST_CASE("exact division") {
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto a = test_support::random_poly(rng);
    auto b = test_support::random_poly(rng);
    if (b.is_zero()) continue;
    CHECK(poly_divide_exact(a * b, b) == a);
  }
  CHECK_THROWS_AS(poly_divide_exact(gen(0, 0), gen(1, 0)), Error);
}

TEST_CASE("printing") {
  const CartanPoly p = 4 * gen(0, 1).pow(2) - 3 * gen(1, 0) + 1;
  CHECK(to_string(p, name) == "4*(h1@1)^2 - 3*h2@0 + 1");
  CHECK(to_string(CartanPoly(), name) == "0");
  CHECK(to_string(-gen(0, 0) * gen(1, 0), name) == "-h1@0*h2@0");
}

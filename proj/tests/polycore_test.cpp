#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>

#include "fixtures.hpp"
#include "trif/curvelab/envelope.hpp"
#include "trif/elim/division.hpp"
#include "trif/error.hpp"
#include "trif/polycore/multipoly.hpp"
#include "trif/polycore/poly_io.hpp"

using namespace trif;
using trif::test::plane_fixture;
using trif::test::xy;

namespace {

const Variables& xyt() {
  static const Variables v{"x", "y", "t"};
  return v;
}

MultiPoly p3(const char* text) { return parse_poly(text, xyt()); }

std::map<std::string, Rational> at(long x, long y) { return {{"x", Rational(x)}, {"y", Rational(y)}}; }

}  // namespace

TEST_CASE("rational numbers are stored reduced") {
  const Rational r = Rational::parse("-6/4");
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational(BigInt(10), BigInt(-15)).to_string() == "-2/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse("p/q"), ParseError);
  CHECK(Rational::from_double(0.5) == Rational(1, 2));
}

TEST_CASE("monomial caches its total degree") {
  Monomial m{2, 0, 3};
  CHECK(m.degree() == 5);
  m.set(1, 4);
  CHECK(m.degree() == 9);
  CHECK(m.size() == 3);
  CHECK(Monomial{1, 1}.divides(Monomial{2, 1}));
  CHECK_FALSE(Monomial{1, 2}.divides(Monomial{2, 1}));
  CHECK(Monomial{1, 2}.lcm(Monomial{2, 1}) == Monomial{2, 2});
}

TEST_CASE("canonical terms are grevlex-descending without zeros") {
  const MultiPoly p = xy("y + x^2 + 0*x*y + x*y - x*y + 3");
  REQUIRE(p.size() == 3);
  CHECK(p.terms()[0].mono == Monomial{2, 0});
  CHECK(p.terms()[1].mono == Monomial{0, 1});
  CHECK(p.terms()[2].mono == Monomial{0, 0});
  for (const auto& t : p.terms()) CHECK(t.coeff != 0);
  // Re-normalizing a canonical polynomial changes nothing.
  CHECK(MultiPoly::from_terms(p.vars(), p.terms()) == p);
}

TEST_CASE("poly_add") {
  CHECK(xy("x^2 + y") + xy("-x^2 + y") == xy("2*y"));
  const MultiPoly p = xy("3*x*y - 7");
  CHECK(p + MultiPoly(plane_variables()) == p);
  const MultiPoly sum = plane_fixture("f1.json") + plane_fixture("f2.json");
  CHECK(evaluate_exact(sum, at(0, 0)).is_zero());
  CHECK_THROWS_AS(poly_add(xy("x"), p3("x")), DomainError);
}

TEST_CASE("poly_mul") {
  CHECK(xy("x + y") * xy("x - y") == xy("x^2 - y^2"));
  const MultiPoly p = xy("5*x^3*y - y + 2");
  CHECK(p * MultiPoly::constant(plane_variables(), 1) == p);
  const MultiPoly f1 = plane_fixture("f1.json");
  const MultiPoly f2 = plane_fixture("f2.json");
  CHECK(f1.total_degree() == 14);
  CHECK(f2.total_degree() == 14);
  CHECK((f1 * f2).total_degree() == 28);
  CHECK_THROWS_AS(poly_mul(xy("x"), p3("t")), DomainError);
}

TEST_CASE("partial_derivative") {
  CHECK(partial_derivative(p3("t^3"), "t") == p3("3*t^2"));
  CHECK(partial_derivative(p3("17"), "t").is_zero());
  CHECK_THROWS_AS(partial_derivative(p3("t"), "z"), DomainError);

  // At t = 0 the t-derivative of the r=1 family reduces to a multiple of y.
  const MultiPoly f = build_family_poly(CircleFamily(test::param_fixture("param_second.json"), Rational(1)));
  const MultiPoly ft = partial_derivative(f, "t");
  const MultiPoly at_zero = substitute(ft, "t", MultiPoly::constant(ft.vars(), 0));
  const MultiPoly y = MultiPoly::variable(ft.vars(), "y");
  CHECK_FALSE(at_zero.is_zero());
  CHECK(at_zero.degree_in(at_zero.vars().require("x")) == 0);
  CHECK(divides_up_to_constant(y, at_zero));
}

TEST_CASE("evaluate_exact") {
  CHECK(evaluate_exact(plane_fixture("f1.json"), at(2, 0)).is_zero());
  CHECK(evaluate_exact(plane_fixture("f2.json"), at(2, 0)).is_zero());
  CHECK(evaluate_exact(xy("x^4 + 2*x^2*y^2 + y^4 - x^3 + 3*x*y^2"), at(1, 0)).is_zero());
  CHECK(evaluate_exact(xy("x*y + 1"), {{"x", Rational(1, 2)}, {"y", Rational(4)}}) == Rational(3));
  CHECK_THROWS_AS(evaluate_exact(xy("x + y"), {{"x", Rational(1)}}), DomainError);
}

TEST_CASE("evaluate_float") {
  const MultiPoly c = xy("x^2 + y^2 - 1");
  CHECK(std::abs(evaluate_float(c, {{"x", 0.6}, {"y", 0.8}})) <= 1e-12);
  CHECK(evaluate_float(c, {{"x", 1.0}, {"y", 1.0}}) == 1.0);
  CHECK_THROWS_AS(evaluate_float(c, {{"x", 1.0}}), DomainError);
  const std::array<double, 2> huge{1e300, 1e300};
  CHECK_THROWS_AS(evaluate_float(c, huge), NonFiniteError);

  const CircleFamily family(test::param_fixture("param_second.json"), Rational(1));
  const auto oracle = oracle_envelope_points(family, {0.5});
  REQUIRE(oracle.samples.size() == 1);
  const MultiPoly f2 = plane_fixture("f2.json");
  for (const auto& [px, py] : {oracle.samples[0].first, oracle.samples[0].second}) {
    const std::array<double, 2> v{px, py};
    CHECK(scaled_residual(f2, v) <= 1e-6);
  }
}

TEST_CASE("substitute") {
  const MultiPoly tri = p3("x^4 + 2*x^2*y^2 + y^4 - x^3 + 3*x*y^2");
  const MultiPoly pencil = substitute(tri, "y", p3("t*x"));
  CHECK(divide_exact(pencil, p3("x^3")).has_value());
  CHECK(substitute(tri, "x", p3("x")) == tri);
  CHECK_THROWS_AS(substitute(tri, "z", p3("x")), DomainError);

  const MultiPoly p2 = load_polynomial(test::fixture_path("p2.json"));
  const Variables& v = p2.vars();
  const MultiPoly zero = MultiPoly::constant(v, 0);
  CHECK(substitute(substitute(p2, "t", zero), "y", zero).is_zero());
}

TEST_CASE("content_and_primitive") {
  const ContentSplit s = content_and_primitive(xy("6*x^2 + 9*y"));
  CHECK(s.content == 3);
  CHECK(s.primitive == xy("2*x^2 + 3*y"));
  const MultiPoly prim = xy("2*x^2 + 3*y");
  CHECK(content_and_primitive(prim).content == 1);
  CHECK(content_and_primitive(prim).primitive == prim);
  const ContentSplit neg = content_and_primitive(xy("-4*x + 2"));
  CHECK(neg.content == 2);
  CHECK(neg.primitive == xy("2*x - 1"));
  CHECK_THROWS_AS(content_and_primitive(MultiPoly(plane_variables())), DomainError);
}

TEST_CASE("text form round-trips exactly") {
  const MultiPoly f2 = plane_fixture("f2.json");
  CHECK(parse_poly(to_text(f2), plane_variables()) == f2);
  CHECK(to_text(xy("256*x^14 - 512*x^13 + 1792*x^12*y^2")) == "256*x^14 + 1792*x^12*y^2 - 512*x^13");
  CHECK(parse_poly("(x + 1)^2 - 2(x - y)", plane_variables()) == xy("x^2 + 2*y + 1"));
  CHECK(parse_poly("3x^2", plane_variables()) == xy("3*x^2"));
  CHECK_THROWS_AS(parse_poly("(x + 1", plane_variables()), ParseError);
  CHECK_THROWS_AS(parse_poly("x)", plane_variables()), ParseError);
  CHECK(to_text(MultiPoly(plane_variables())) == "0");
  CHECK(parse_poly(" - x ^ 2 +3 * y ") == parse_poly("-x^2+3*y"));
  CHECK_THROWS_AS(parse_poly("x^", plane_variables()), ParseError);
  CHECK_THROWS_AS(parse_poly("x + z", plane_variables()), DomainError);
}

TEST_CASE("json form round-trips and keeps big coefficients as strings") {
  const MultiPoly big = xy("123456789012345678901234567890*x^3 - y");
  const nlohmann::json j = to_json(big);
  CHECK(j["terms"][0]["c"] == "123456789012345678901234567890");
  CHECK(poly_from_json(j) == big);
  CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse(R"({"vars":["x"],"terms":[{"e":[1,2],"c":"1"}]})")),
                  ParseError);
}

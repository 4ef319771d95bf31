#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "trif/curvelab/envelope.hpp"
#include "trif/curvelab/serialize.hpp"
#include "trif/elim/division.hpp"
#include "trif/elim/gcd.hpp"
#include "trif/elim/groebner.hpp"
#include "trif/error.hpp"

using namespace trif;
using trif::test::param_fixture;
using trif::test::plane_fixture;
using trif::test::xy;

namespace {

MultiPoly tp(const char* text) { return parse_poly(text, parameter_variables()); }

ImplicitCurve curve(const char* text) { return ImplicitCurve::from_poly(xy(text)); }

RationalParametrization unit_circle_param() {
  return parametrize_line_pencil(curve("x^2 + y^2 - 1"), {Rational(-1), Rational(0)});
}

// Exact check that implicitize(param) vanishes on 25 rational parameter values.
void check_round_trip(const RationalParametrization& param) {
  const ImplicitCurve c = implicitize(param);
  int checked = 0;
  for (int k = -12; checked < 25; ++k) {
    const Rational t0(k, 3);
    if (evaluate_exact(param.denom, {{"t", t0}}).is_zero()) continue;
    const auto [x, y] = param.at(t0);
    CHECK(evaluate_exact(c.poly, {{"x", x}, {"y", y}}).is_zero());
    ++checked;
  }
}

bool even_in_y(const MultiPoly& p) {
  const std::size_t y = p.vars().require("y");
  for (const auto& term : p.terms())
    if (term.mono[y] % 2 != 0) return false;
  return true;
}

double distance_to_origin(double x, double y) { return std::hypot(x, y); }

}  // namespace

TEST_CASE("make_trifolium") {
  const ImplicitCurve t1 = make_trifolium(Rational(1));
  CHECK(t1.poly == xy("x^4 + 2*x^2*y^2 + y^4 - x^3 + 3*x*y^2"));
  CHECK(t1.degree == 4);
  CHECK(t1.squarefree);
  CHECK(make_trifolium(Rational(2)).poly == xy("x^4 + 2*x^2*y^2 + y^4 - 2*x^3 + 6*x*y^2"));
  CHECK(make_trifolium(Rational(1, 2)).poly == xy("2*x^4 + 4*x^2*y^2 + 2*y^4 - x^3 + 3*x*y^2"));
  CHECK_THROWS_AS(make_trifolium(Rational(0)), DomainError);
  CHECK_THROWS_AS(make_trifolium(Rational(-1)), DomainError);
  validate(t1);
}

TEST_CASE("ImplicitCurve normalizes its polynomial") {
  const ImplicitCurve c = curve("-2*x^2 - 2*y^2 + 2");
  CHECK(c.poly == xy("x^2 + y^2 - 1"));
  CHECK(c.degree == 2);
  CHECK_FALSE(curve("(x - y)^2").squarefree);
  CHECK_THROWS_AS(ImplicitCurve::from_poly(MultiPoly(plane_variables())), DomainError);
}

TEST_CASE("parametrize_line_pencil") {
  const ImplicitCurve tri = make_trifolium(Rational(1));
  const RationalParametrization second = parametrize_line_pencil(tri, {Rational(0), Rational(0)});
  const RationalParametrization fixture = param_fixture("param_second.json");
  CHECK(second.num_x == fixture.num_x);
  CHECK(second.num_y == fixture.num_y);
  CHECK(second.denom == fixture.denom);
  CHECK(second.denom == tp("t^4 + 2*t^2 + 1"));

  const RationalParametrization circle = unit_circle_param();
  CHECK(circle.num_x == tp("-t^2 + 1"));
  CHECK(circle.num_y == tp("2*t"));
  CHECK(circle.denom == tp("t^2 + 1"));

  const RationalParametrization nodal = parametrize_line_pencil(curve("y^2 - x^3 - x^2"), {Rational(0), Rational(0)});
  CHECK(nodal.num_x == tp("t^2 - 1"));
  CHECK(nodal.num_y == tp("t^3 - t"));
  CHECK(nodal.denom == tp("1"));

  // The origin is not on the circle, and (1,0) is only a simple point of the trifolium.
  CHECK_THROWS_AS(parametrize_line_pencil(curve("x^2 + y^2 - 1"), {Rational(0), Rational(0)}), DomainError);
  CHECK_THROWS_AS(parametrize_line_pencil(tri, {Rational(1), Rational(0)}), DomainError);
}

TEST_CASE("RationalParametrization evaluation and definedness") {
  const RationalParametrization second = param_fixture("param_second.json");
  CHECK(second.totally_defined());
  CHECK(second.at(Rational(0)) == std::pair{Rational(1), Rational(0)});
  const auto [x, y] = second.at(1.0);
  CHECK(x == doctest::Approx(-0.5));
  CHECK(y == doctest::Approx(-0.5));

  const RationalParametrization hyperbola = RationalParametrization::make(tp("1"), tp("t^2"), tp("t"));
  CHECK_FALSE(hyperbola.totally_defined());
  CHECK_THROWS_AS(hyperbola.at(Rational(0)), DomainError);
  CHECK_THROWS_AS(RationalParametrization::make(tp("t"), tp("1"), tp("0")), DomainError);

  // Common factors are cancelled.
  const RationalParametrization reduced = RationalParametrization::make(tp("2*t^2 + 2*t"), tp("4*t + 4"), tp("2*t + 2"));
  CHECK(reduced.num_x == tp("t"));
  CHECK(reduced.num_y == tp("2"));
  CHECK(reduced.denom == tp("1"));
}

TEST_CASE("count_real_roots") {
  CHECK(count_real_roots(tp("t^4 + 2*t^2 + 1")) == 0);
  CHECK(count_real_roots(tp("t^2 - 2")) == 2);
  CHECK(count_real_roots(tp("(t - 1)^3*(t + 5)")) == 2);
  CHECK(count_real_roots(tp("t^3 - t")) == 3);
  CHECK(count_real_roots(tp("7")) == 0);
}

TEST_CASE("implicitize") {
  const MultiPoly tri = xy("x^4 + 2*x^2*y^2 + y^4 - x^3 + 3*x*y^2");
  CHECK(implicitize(param_fixture("param_second.json")).poly == tri);
  CHECK(implicitize(param_fixture("param_first.json")).poly == tri);
  CHECK(implicitize(unit_circle_param()).poly == xy("x^2 + y^2 - 1"));
  const RationalParametrization point = RationalParametrization::make(tp("1"), tp("2"), tp("1"));
  CHECK_THROWS_AS(implicitize(point), DomainError);
}

TEST_CASE("parametrization and implicitization round trip") {
  check_round_trip(param_fixture("param_first.json"));
  check_round_trip(param_fixture("param_second.json"));
  check_round_trip(unit_circle_param());
  check_round_trip(parametrize_line_pencil(make_trifolium(Rational(2)), {Rational(0), Rational(0)}));
  check_round_trip(parametrize_line_pencil(curve("y^2 - x^3 - x^2"), {Rational(0), Rational(0)}));
}

TEST_CASE("build_family_poly") {
  const RationalParametrization second = param_fixture("param_second.json");
  const MultiPoly f = build_family_poly(CircleFamily(second, Rational(1)));
  CHECK(f.vars() == family_variables());
  const MultiPoly at_zero = project_out(substitute(f, "t", MultiPoly::constant(f.vars(), 0)), {"t"});
  CHECK(equal_up_to_constant(at_zero, xy("(x - 1)^2 + y^2 - 1")));

  const Rational r(1, 2);
  const MultiPoly half = build_family_poly(CircleFamily(second, r));
  for (int k = -6; k <= 6; ++k) {
    const Rational t0(k, 4);
    const auto [cx, cy] = second.at(t0);
    CHECK(evaluate_exact(half, {{"x", cx + r}, {"y", cy}, {"t", t0}}).is_zero());
  }
  // Clearing (1/2)^2 puts 4 in front of x^2 * W^2 and leaves W^2 bare.
  const MultiPoly coeff = project_out(substitute(substitute(half, "y", MultiPoly::constant(half.vars(), 0)), "t",
                                                 MultiPoly::constant(half.vars(), 0)),
                                      {"y", "t"});
  CHECK(coeff == parse_poly("4*x^2 - 8*x + 3", Variables{"x"}));

  CHECK_THROWS_AS(CircleFamily(second, Rational(0)), DomainError);
  CHECK_THROWS_AS(CircleFamily(second, Rational(-1, 2)), DomainError);
}

TEST_CASE("envelope_eliminate: trifolium, r = 1/2") {
  const EnvelopeOutput out = envelope_eliminate(CircleFamily(param_fixture("param_second.json"), Rational(1, 2)));
  const MultiPoly circle = xy("4*x^2 + 4*y^2 - 1");
  const auto q = divide_exact(out.curve.poly, circle);
  REQUIRE(q);
  CHECK(equal_up_to_constant(*q, plane_fixture("o_half.json")));
  REQUIRE(out.factors_verified.size() == 1);
  CHECK(out.factors_verified[0].curve.poly == circle);
  CHECK(out.factors_verified[0].multiplicity == 1);
  CHECK(equal_up_to_constant(out.residual, plane_fixture("o_half.json")));
  CHECK(out.residual.total_degree() == 14);
  CHECK(even_in_y(out.curve.poly));
}

TEST_CASE("envelope_eliminate: unit circle centers, r = 1/2") {
  const CircleFamily family(unit_circle_param(), Rational(1, 2));
  const MultiPoly expected = xy("(4*x^2 + 4*y^2 - 1)*(4*x^2 + 4*y^2 - 9)");

  // Unfiltered, both routes also carry x^2 + y^2 (the isotropic lines where
  // the centre runs off to infinity); the resultant additionally keeps the
  // member at t = infinity, centred on the pencil base (-1, 0).
  const EnvelopeOutput res = envelope_eliminate(family);
  CHECK(divides_up_to_constant(expected, res.curve.poly));
  CHECK(divides_up_to_constant(xy("4*x^2 + 4*y^2 + 8*x + 3"), res.curve.poly));
  EnvelopeOptions gopt;
  gopt.method = EliminationMethod::groebner;
  const EnvelopeOutput gb = envelope_eliminate(family, gopt);
  CHECK(equal_up_to_constant(gb.curve.poly, expected * xy("x^2 + y^2")));

  for (auto method : {EliminationMethod::resultant, EliminationMethod::groebner}) {
    EnvelopeOptions opt;
    opt.method = method;
    opt.filter_spurious = true;
    const EnvelopeOutput out = envelope_eliminate(family, opt);
    CHECK(out.curve.poly == expected);
    CHECK(out.factors_verified.size() == 2);
    for (const auto& f : out.factors_verified) CHECK(f.curve.degree == 2);
    CHECK(out.residual.total_degree() == 0);
  }

  std::vector<double> ts;
  for (int k = -50; k <= 50; ++k) ts.push_back(0.13 * k);
  for (const auto& [px, py] : oracle_point_list(oracle_envelope_points(family, ts))) {
    const double d = distance_to_origin(px, py);
    CHECK((std::abs(d - 0.5) <= 1e-9 || std::abs(d - 1.5) <= 1e-9));
    const std::array<double, 2> v{px, py};
    CHECK(scaled_residual(expected, v) <= 1e-9);
  }
}

TEST_CASE("offset_implicit_route") {
  const EnvelopeOutput circle = offset_implicit_route(curve("x^2 + y^2 - 4"), Rational(1));
  CHECK(equal_up_to_constant(circle.curve.poly, xy("(x^2 + y^2 - 1)*(x^2 + y^2 - 9)")));
  CHECK(circle.elimination.method == EliminationMethod::groebner);

  const EnvelopeOutput line = offset_implicit_route(curve("y"), Rational(1));
  CHECK(equal_up_to_constant(line.curve.poly, xy("(y - 1)*(y + 1)")));

  const EnvelopeOutput tri = offset_implicit_route(make_trifolium(Rational(1)), Rational(1));
  CHECK(divides_up_to_constant(plane_fixture("f2.json"), tri.curve.poly));
  CHECK(even_in_y(tri.curve.poly));

  CHECK_THROWS_AS(offset_implicit_route(curve("(x - y)^2"), Rational(1)), DomainError);
  CHECK_THROWS_AS(offset_implicit_route(curve("y"), Rational(0)), DomainError);
}

TEST_CASE("offset routes agree") {
  const ImplicitCurve c = curve("x^2 + y^2 - 4");
  const EnvelopeOutput implicit = offset_implicit_route(c, Rational(1));
  EnvelopeOptions opt;
  opt.filter_spurious = true;
  const EnvelopeOutput parametric = offset_parametric_route(c, Rational(1), opt);
  CHECK(divides_up_to_constant(parametric.curve.poly, implicit.curve.poly));

  const ImplicitCurve tri = make_trifolium(Rational(1));
  const EnvelopeOutput ti = offset_implicit_route(tri, Rational(1));
  const EnvelopeOutput tp_ = offset_parametric_route(tri, Rational(1));
  CHECK(divides_up_to_constant(tp_.curve.poly, ti.curve.poly));
}

TEST_CASE("find_pencil_base") {
  const auto tri = find_pencil_base(make_trifolium(Rational(1)));
  REQUIRE(tri);
  CHECK(*tri == std::pair{Rational(0), Rational(0)});
  CHECK(find_pencil_base(curve("x^2 + y^2 - 4")).has_value());
  CHECK_FALSE(find_pencil_base(curve("x^2 + y^2 + 1")).has_value());
}

TEST_CASE("offset_degree") {
  const ImplicitCurve tri = make_trifolium(Rational(1));
  CHECK(offset_degree(tri, Rational(1, 2), OffsetRoute::parametric) == 14);
  CHECK(offset_degree(tri, Rational(1), OffsetRoute::parametric) == 14);
  CHECK(offset_degree(tri, Rational(3, 4), OffsetRoute::parametric) == 14);

  // Both components of the unit circle's offset are registered circles of
  // degree 2, so nothing is left over.
  const ImplicitCurve unit = curve("x^2 + y^2 - 1");
  CHECK(offset_degree(unit, Rational(1, 2), OffsetRoute::implicit) == 0);
  const EnvelopeOutput out = offset_implicit_route(unit, Rational(1, 2));
  REQUIRE(out.factors_verified.size() == 2);
  for (const auto& f : out.factors_verified) CHECK(f.curve.degree == 2);
}

TEST_CASE("oracle_envelope_points") {
  const CircleFamily family(param_fixture("param_second.json"), Rational(1));
  const OracleResult at_zero = oracle_envelope_points(family, {0.0});
  REQUIRE(at_zero.samples.size() == 1);
  auto a = at_zero.samples[0].first;
  auto b = at_zero.samples[0].second;
  if (a.first > b.first) std::swap(a, b);
  CHECK(a.first == doctest::Approx(0.0));
  CHECK(a.second == doctest::Approx(0.0));
  CHECK(b.first == doctest::Approx(2.0));
  CHECK(b.second == doctest::Approx(0.0));

  for (double t : {0.3, 1.1, 2.7, -4.2}) {
    const OracleResult fwd = oracle_envelope_points(family, {t});
    const OracleResult back = oracle_envelope_points(family, {-t});
    REQUIRE(fwd.samples.size() == 1);
    REQUIRE(back.samples.size() == 1);
    CHECK(back.samples[0].first.first == doctest::Approx(fwd.samples[0].first.first));
    CHECK(back.samples[0].first.second == doctest::Approx(-fwd.samples[0].first.second));
    CHECK(back.samples[0].second.first == doctest::Approx(fwd.samples[0].second.first));
    CHECK(back.samples[0].second.second == doctest::Approx(-fwd.samples[0].second.second));
  }

  const RationalParametrization hyperbola = RationalParametrization::make(tp("1"), tp("t^2"), tp("t"));
  const OracleResult skipped = oracle_envelope_points(CircleFamily(hyperbola, Rational(1)), {-1.0, 0.0, 1.0});
  CHECK(skipped.samples.size() == 2);
  REQUIRE(skipped.skipped.size() == 1);
  CHECK(skipped.skipped[0] == 0.0);
}

TEST_CASE("register_candidate_factor") {
  const EnvelopeOutput half = offset_parametric_route(make_trifolium(Rational(1)), Rational(1, 2));
  REQUIRE(half.factors_verified.size() == 1);
  CHECK(half.factors_verified[0].multiplicity == 1);

  const EnvelopeOutput implicit = offset_implicit_route(make_trifolium(Rational(1)), Rational(1));
  bool found = false;
  for (const auto& f : implicit.factors_verified) {
    if (f.curve.poly == xy("x^2 + y^2 - 1")) {
      CHECK(f.multiplicity == 1);
      found = true;
    }
  }
  CHECK(found);

  const EnvelopeOutput same = register_candidate_factor(half, curve("x + y"));
  CHECK(same.factors_verified.size() == half.factors_verified.size());
  CHECK(same.residual == half.residual);

  // Registering the same candidate twice does not double count.
  const EnvelopeOutput again = register_candidate_factor(half, curve("4*x^2 + 4*y^2 - 1"));
  CHECK(again.residual == half.residual);
}

TEST_CASE("trifolium-derived generators are even in y") {
  const MultiPoly tri = make_trifolium(Rational(1)).poly;
  CHECK(even_in_y(tri));
  CHECK(even_in_y(plane_fixture("f1.json")));
  CHECK(even_in_y(plane_fixture("f2.json")));
  CHECK(even_in_y(plane_fixture("o_half.json")));
  for (const Rational& r : {Rational(1), Rational(1, 2), Rational(3, 4)})
    CHECK(even_in_y(offset_parametric_route(make_trifolium(Rational(1)), r).curve.poly));
}

TEST_CASE("envelope containment on oracle samples") {
  const CircleFamily family(param_fixture("param_second.json"), Rational(1, 2));
  const EnvelopeOutput out = envelope_eliminate(family);
  std::vector<double> ts;
  for (int k = 0; k < 100; ++k) ts.push_back(-5.0 + 10.0 * k / 99.0);
  const OracleResult oracle = oracle_envelope_points(family, ts);
  CHECK(oracle.samples.size() + oracle.skipped.size() == 100);
  for (const auto& [px, py] : oracle_point_list(oracle)) {
    const std::array<double, 2> v{px, py};
    CHECK(scaled_residual(out.curve.poly, v) <= 1e-6);
  }
}

TEST_CASE("serialization") {
  const ImplicitCurve tri = make_trifolium(Rational(1));
  CHECK(curve_from_json(to_json(tri)).poly == tri.poly);
  const RationalParametrization p = param_fixture("param_first.json");
  const RationalParametrization back = parametrization_from_json(to_json(p));
  CHECK(back.num_x == p.num_x);
  CHECK(back.num_y == p.num_y);
  CHECK(back.denom == p.denom);

  CHECK_THROWS_AS(curve_from_json(to_json(p)), ParseError);
  CHECK_THROWS_AS(load_parametrization(test::fixture_path("f1.json")), ParseError);
  CHECK_THROWS_AS(load_polynomial(test::fixture_path("missing.json")), std::system_error);

  const EnvelopeOutput half = offset_parametric_route(tri, Rational(1, 2));
  const nlohmann::json j = to_json(half);
  CHECK(j["kind"] == "envelope");
  CHECK(j["factors_verified"].size() == 1);
}

TEST_CASE("the routes differ by the circle at t = infinity") {
  // The resultant also vanishes where the leading coefficient in t does;
  // for the second parametrization that member is centred on the origin.
  for (const auto& [r, circle] : {std::pair{Rational(1), "x^2 + y^2 - 1"}, std::pair{Rational(1, 2), "4*x^2 + 4*y^2 - 1"},
                                  std::pair{Rational(3, 4), "16*x^2 + 16*y^2 - 9"}}) {
    const CircleFamily family(param_fixture("param_second.json"), r);
    EnvelopeOptions gb;
    gb.method = EliminationMethod::groebner;
    const MultiPoly groebner = envelope_eliminate(family, gb).curve.poly;
    const MultiPoly resultant = envelope_eliminate(family).curve.poly;
    CHECK(groebner.total_degree() == 14);
    CHECK(equal_up_to_constant(resultant, groebner * xy(circle)));
  }
  const MultiPoly groebner = envelope_eliminate(CircleFamily(param_fixture("param_second.json"), Rational(1)),
                                                EnvelopeOptions{EliminationMethod::groebner})
                                 .curve.poly;
  CHECK(equal_up_to_constant(groebner, plane_fixture("f2.json")));
}

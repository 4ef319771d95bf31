#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "trif/error.hpp"
#include "trif/render/render.hpp"

using namespace trif;
using trif::test::plane_fixture;
using trif::test::xy;

namespace {

Viewport square(double half, int resolution) {
  Viewport vp;
  vp.x_min = vp.y_min = -half;
  vp.x_max = vp.y_max = half;
  vp.grid_resolution = resolution;
  return vp;
}

std::string svg_of(const std::vector<CurveMesh>& meshes, const Viewport& vp) {
  std::ostringstream out;
  emit_svg(meshes, vp, out);
  return out.str();
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

std::vector<Point2> endpoints(const CurveMesh& m) {
  std::vector<Point2> pts;
  for (const auto& s : m.segments) {
    pts.push_back(s.a);
    pts.push_back(s.b);
  }
  return pts;
}

}  // namespace

TEST_CASE("viewport validation") {
  validate(Viewport{});
  Viewport bad;
  bad.x_min = 1;
  bad.x_max = 1;
  CHECK_THROWS_AS(validate(bad), DomainError);
  bad = {};
  bad.y_min = 3;
  CHECK_THROWS_AS(validate(bad), DomainError);
  bad = {};
  bad.grid_resolution = 8;
  CHECK_THROWS_AS(validate(bad), DomainError);
  CHECK_THROWS_AS(marching_squares(make_trifolium(Rational(1)), bad), DomainError);
}

TEST_CASE("marching_squares: unit circle") {
  const Viewport vp = square(2, 256);
  const ImplicitCurve circle = ImplicitCurve::from_poly(xy("x^2 + y^2 - 1"));
  const CurveMesh mesh = marching_squares(circle, vp);
  REQUIRE_FALSE(mesh.segments.empty());
  for (const auto& p : endpoints(mesh)) CHECK(std::abs(std::hypot(p.x, p.y) - 1.0) <= 1e-2);
  CHECK(mesh_residual_ratio(mesh, circle, vp) <= 1.0);
}

TEST_CASE("marching_squares: trifolium has three lobes") {
  const Viewport vp = square(1.5, 256);
  const ImplicitCurve tri = make_trifolium(Rational(1));
  const CurveMesh mesh = marching_squares(tri, vp);
  const auto sectors = sector_counts(mesh);
  REQUIRE(sectors.size() == 3);
  for (auto n : sectors) CHECK(n > 0);
  CHECK(sectors[1] == sectors[2]);
  CHECK(mesh_residual_ratio(mesh, tri, vp) <= 1.0);
}

TEST_CASE("marching_squares: printed envelope component") {
  const Viewport vp;
  const ImplicitCurve f2 = ImplicitCurve::from_poly(plane_fixture("f2.json"));
  const CurveMesh mesh = marching_squares(f2, vp);
  CHECK(mesh.segments.size() > 100);
  CHECK(mesh_residual_ratio(mesh, f2, vp) <= 1.0);
}

TEST_CASE("marching_squares: a curve with no real points gives an empty mesh") {
  const CurveMesh mesh = marching_squares(ImplicitCurve::from_poly(xy("x^2 + y^2 + 1")), Viewport{});
  CHECK(mesh.segments.empty());
}

TEST_CASE("marching_squares: output does not depend on the worker count") {
  const Viewport vp = square(2, 128);
  const ImplicitCurve f1 = ImplicitCurve::from_poly(plane_fixture("f1.json"));
  const CurveMesh one = marching_squares(f1, vp, 1);
  const CurveMesh three = marching_squares(f1, vp, 3);
  CHECK(svg_of({one}, vp) == svg_of({three}, vp));
}

TEST_CASE("marching_squares: refinement keeps every component") {
  const ImplicitCurve tri = make_trifolium(Rational(1));
  const Viewport coarse = square(1.5, 64);
  const Viewport fine = square(1.5, 128);
  const auto low = endpoints(marching_squares(tri, coarse));
  const auto high = endpoints(marching_squares(tri, fine));
  for (const auto& p : low) {
    double best = INFINITY;
    for (const auto& q : high) best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
    CHECK(best <= 2 * coarse.cell_diagonal());
  }
}

TEST_CASE("marching_squares: overflow is reported with the offending cells") {
  Viewport vp = square(1e100, 16);
  const ImplicitCurve quartic = ImplicitCurve::from_poly(xy("x^4 + y^4 - 1"));
  try {
    marching_squares(quartic, vp);
    FAIL("expected NonFiniteGridError");
  } catch (const NonFiniteGridError& e) {
    CHECK_FALSE(e.cells().empty());
  }
}

TEST_CASE("sample_parametric") {
  const RationalParametrization second = test::param_fixture("param_second.json");
  const ImplicitCurve tri = make_trifolium(Rational(1));
  const CurveMesh mesh = sample_parametric(second, {-40, 40}, 2000);
  REQUIRE_FALSE(mesh.segments.empty());
  CHECK(mesh.gaps.empty());
  for (const auto& p : endpoints(mesh)) {
    const std::array<double, 2> v{p.x, p.y};
    CHECK(scaled_residual(tri.poly, v) <= 1e-9);
  }
  const double tol = 0.02 * Viewport{}.diagonal();
  for (const auto& s : mesh.segments) CHECK(std::hypot(s.a.x - s.b.x, s.a.y - s.b.y) <= tol);

  const CurveMesh two = sample_parametric(second, {0.0, 0.01}, 2);
  CHECK(two.segments.size() == 1);

  const auto circle = parametrize_line_pencil(ImplicitCurve::from_poly(xy("x^2 + y^2 - 1")), {Rational(-1), Rational(0)});
  const CurveMesh far = sample_parametric(circle, {-1e4, 1e4}, 1001);
  REQUIRE_FALSE(far.segments.empty());
  CHECK(far.segments.front().a.x == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(far.segments.back().b.x == doctest::Approx(-1.0).epsilon(1e-6));

  const auto hyperbola = RationalParametrization::make(parse_poly("1", parameter_variables()),
                                                       parse_poly("t^2", parameter_variables()),
                                                       parse_poly("t", parameter_variables()));
  const CurveMesh gap = sample_parametric(hyperbola, {-1, 1}, 3);
  REQUIRE(gap.gaps.size() == 1);
  CHECK(gap.gaps[0] == 0.0);
  CHECK_THROWS_AS(sample_parametric(second, {0, 1}, 1), DomainError);
}

TEST_CASE("sample_circle") {
  const CurveMesh c = sample_circle(1, 0, 0.5, 64);
  CHECK(c.segments.size() == 64);
  for (const auto& p : endpoints(c)) CHECK(std::hypot(p.x - 1, p.y) == doctest::Approx(0.5));
  CHECK_THROWS_AS(sample_circle(0, 0, 0, 8), DomainError);
}

TEST_CASE("emit_svg") {
  const Viewport vp;
  const std::string empty = svg_of({}, vp);
  CHECK(empty.rfind("<?xml", 0) == 0);
  CHECK(count(empty, "<svg") == 1);
  CHECK(empty.find("</svg>") != std::string::npos);
  CHECK(count(empty, "<path") == 0);
  CHECK(count(empty, "<line") == 2);

  std::vector<CurveMesh> layers{marching_squares(make_trifolium(Rational(1)), vp)};
  for (int k = 0; k < 40; ++k) {
    const auto c = test::param_fixture("param_second.json").at(-5.0 + 0.25 * k);
    layers.push_back(sample_circle(c.first, c.second, 1.0, 32));
  }
  const std::string svg = svg_of(layers, vp);
  CHECK(count(svg, "<path") == layers.size());
  CHECK(svg == svg_of(layers, vp));

  layers.push_back(CurveMesh{});
  CHECK(svg_of(layers, vp).find("d=\"M0,0\"") != std::string::npos);

  CHECK_THROWS_AS(emit_svg(layers, vp, std::filesystem::path("/nonexistent-dir/out.svg")), std::system_error);
}

TEST_CASE("write_csv keeps 17 significant digits") {
  CurveMesh m;
  m.segments.push_back({{1.0 / 3.0, -2.0}, {0.1, 1e-20}});
  std::ostringstream out;
  write_csv(m, out);
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  double v[4];
  REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &v[0], &v[1], &v[2], &v[3]) == 4);
  CHECK(v[0] == 1.0 / 3.0);
  CHECK(v[1] == -2.0);
  CHECK(v[2] == 0.1);
  CHECK(v[3] == 1e-20);
}

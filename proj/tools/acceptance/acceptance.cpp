#include "acceptance.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <system_error>

#include "properties.hpp"
#include "trif/curvelab/envelope.hpp"
#include "trif/curvelab/serialize.hpp"
#include "trif/elim/division.hpp"
#include "trif/elim/groebner.hpp"
#include "trif/polycore/poly_io.hpp"
#include "trif/render/render.hpp"

namespace trif::acceptance {
namespace {

namespace fs = std::filesystem;

const std::array<const char*, 7> kFixtureFiles{"f1.json", "f2.json", "o_half.json", "p1.json",
                                               "p2.json", "param_first.json", "param_second.json"};

MultiPoly fixture_poly(const Options& o, const char* name) {
  try {
    return load_polynomial(o.fixtures / name).with_variables(plane_variables());
  } catch (const std::system_error& e) {
    throw FixtureError(e.what());
  }
}

MultiPoly fixture_raw(const Options& o, const char* name) {
  try {
    return load_polynomial(o.fixtures / name);
  } catch (const std::system_error& e) {
    throw FixtureError(e.what());
  }
}

RationalParametrization fixture_param(const Options& o, const char* name) {
  try {
    return load_parametrization(o.fixtures / name);
  } catch (const std::system_error& e) {
    throw FixtureError(e.what());
  }
}

std::string sha256_hex(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureError("cannot read fixture " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string data = buf.str();
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  std::string hex;
  char byte[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(byte, sizeof byte, "%02x", md[i]);
    hex += byte;
  }
  return hex;
}

std::string brief(const MultiPoly& p) {
  std::string s = to_text(p);
  return s.size() > 60 ? s.substr(0, 57) + "..." : s;
}

ImplicitCurve trifolium_one() { return make_trifolium(Rational(1)); }

MultiPoly expected_trifolium() {
  return parse_poly("x^4 + 2*x^2*y^2 + y^4 - x^3 + 3*x*y^2", plane_variables());
}

// ------------------------------------------------------------------ checks

struct Outcome {
  Outcome() = default;
  Outcome(bool p, std::string d) : passed(p), detail(std::move(d)) {}

  bool passed = false;
  std::string detail;
  std::string stretch_detail;
  double stretch_seconds = 0;
};

Outcome check_a1(const Options& o) {
  const ImplicitCurve c = implicitize(fixture_param(o, "param_second.json"));
  const bool ok = c.poly == expected_trifolium();
  return {ok, "implicit equation " + brief(c.poly)};
}

Outcome check_a2(const Options& o) {
  const ImplicitCurve first = implicitize(fixture_param(o, "param_first.json"));
  const bool ok = first.poly == expected_trifolium();
  return {ok, "implicit equation " + brief(first.poly)};
}

// "F1 divides with cofactor of degree ..." or "F1 does not divide".
std::string division_note(const char* name, const MultiPoly& g, const MultiPoly& f) {
  const auto q = divide_exact(g, f);
  if (!q) return std::string(name) + " does not divide";
  return std::string(name) + " divides with cofactor of degree " + std::to_string(q->total_degree()) +
         (q->total_degree() <= 4 ? " (" + to_text(*q) + ")" : "");
}

Outcome check_a3(const Options& o) {
  const MultiPoly f1 = fixture_poly(o, "f1.json");
  const MultiPoly f2 = fixture_poly(o, "f2.json");
  const EnvelopeOutput out = envelope_eliminate(CircleFamily(fixture_param(o, "param_second.json"), Rational(1)));
  const MultiPoly g = out.elimination.generator.with_variables(plane_variables());
  const auto by_f1 = divide_exact(g, f1);
  const auto by_f2 = divide_exact(g, f2);
  const bool ok = g.total_degree() == 28 && g == primitive_part(g) && out.elimination.squarefree && by_f1 &&
                  by_f2 && equal_up_to_constant(*by_f1, f2) && equal_up_to_constant(*by_f2, f1);
  return {ok, "generator degree " + std::to_string(g.total_degree()) + "; " + division_note("F1", g, f1) + "; " +
                  division_note("F2", g, f2)};
}

Outcome check_a4(const Options& o) {
  const MultiPoly p1 = fixture_raw(o, "p1.json");
  const MultiPoly p2 = fixture_raw(o, "p2.json");
  const MultiPoly target = fixture_poly(o, "f1.json") * fixture_poly(o, "f2.json");
  const EliminationResult r = groebner_eliminate({p1, p2}, {"t"}, groebner_options_from_env());
  const MultiPoly g = r.generator.with_variables(plane_variables());
  const bool ok = r.principal && equal_up_to_constant(g, target);
  return {ok, "generator degree " + std::to_string(g.total_degree()) + ", " + std::to_string(r.pairs_reduced) +
                  " pairs, " + (r.principal ? "principal" : "not principal") + "; " +
                  (equal_up_to_constant(g, target) ? "equals F1*F2 up to constant" : "differs from F1*F2")};
}

Outcome check_a5(const Options& o) {
  const MultiPoly target = fixture_poly(o, "o_half.json");
  const EnvelopeOutput out = offset_parametric_route(trifolium_one(), Rational(1, 2));
  const MultiPoly g = out.elimination.generator.with_variables(plane_variables());
  const MultiPoly circle = parse_poly("4*x^2 + 4*y^2 - 1", plane_variables());
  const auto q = divide_exact(g, circle);
  if (!q) return {false, "generator of degree " + std::to_string(g.total_degree()) + " not divisible by 4x^2+4y^2-1"};
  const bool ok = equal_up_to_constant(*q, target) && q->total_degree() == 14;
  return {ok, "quotient degree " + std::to_string(q->total_degree()) + ", " +
                  (equal_up_to_constant(*q, target) ? "equals" : "differs from") + " the O_1/2 fixture"};
}

std::vector<double> uniform(double lo, double hi, int n) {
  std::vector<double> t(n);
  for (int k = 0; k < n; ++k) t[k] = lo + (hi - lo) * k / (n - 1);
  return t;
}

// Largest scaled residual of g over both oracle points of every sample.
double oracle_worst(const MultiPoly& g, const OracleResult& oracle) {
  const MultiPoly gp = g.with_variables(plane_variables());
  double worst = 0;
  for (const auto& s : oracle.samples) {
    for (const auto& [px, py] : {s.first, s.second}) {
      const std::array<double, 2> v{px, py};
      worst = std::max(worst, scaled_residual(gp, v));
    }
  }
  return worst;
}

Outcome check_a6(const Options&) {
  const ImplicitCurve tri = trifolium_one();
  const auto base = find_pencil_base(tri);
  if (!base) return {false, "no pencil base point found"};
  const RationalParametrization centers = parametrize_line_pencil(tri, *base);
  bool ok = true;
  std::string detail;
  for (const char* text : {"1/2", "1", "3/4"}) {
    const Rational r = Rational::parse(text);
    const int degree = offset_degree(tri, r, OffsetRoute::parametric);
    const EnvelopeOutput out = offset_parametric_route(tri, r);
    const OracleResult oracle = oracle_envelope_points(CircleFamily(centers, r), uniform(-5, 5, 101));
    const double worst = oracle_worst(out.elimination.generator, oracle);
    ok = ok && degree == 14 && worst <= 1e-6;
    char buf[96];
    std::snprintf(buf, sizeof buf, "r=%s: degree %d, oracle residual %.1e; ", text, degree, worst);
    detail += buf;
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

Outcome check_a7(const Options& o) {
  const MultiPoly f1 = fixture_poly(o, "f1.json");
  const MultiPoly f2 = fixture_poly(o, "f2.json");
  const CircleFamily family(fixture_param(o, "param_second.json"), Rational(1));
  const EnvelopeOutput out = envelope_eliminate(family);
  const OracleResult oracle = oracle_envelope_points(family, uniform(-5, 5, 100));
  const double worst = oracle_worst(out.elimination.generator, oracle);

  const OracleResult zero = oracle_envelope_points(family, {0.0});
  bool points = zero.samples.size() == 1;
  bool vanish = points;
  if (points) {
    auto [a, b] = std::pair{zero.samples[0].first, zero.samples[0].second};
    if (a > b) std::swap(a, b);
    points = a == std::pair{0.0, 0.0} && b == std::pair{2.0, 0.0};
    for (const auto& [px, py] : {a, b}) {
      const std::map<std::string, Rational> at{{"x", Rational::from_double(px)}, {"y", Rational::from_double(py)}};
      vanish = vanish && evaluate_exact(f1, at).is_zero() && evaluate_exact(f2, at).is_zero();
    }
  }
  const bool exact = points && vanish;
  char buf[200];
  std::snprintf(buf, sizeof buf, "%zu samples (%zu skipped), worst scaled residual %.2e; t=0 points %s; F1, F2 %s there",
                oracle.samples.size(), oracle.skipped.size(), worst,
                points ? "exactly (0,0) and (2,0)" : "not (0,0) and (2,0)", vanish ? "vanish" : "do not both vanish");
  return {worst <= 1e-6 && exact, buf};
}

Outcome check_a8(const Options& o) {
  Outcome result;
  const ImplicitCurve circle = ImplicitCurve::from_poly(parse_poly("x^2 + y^2 - 4", plane_variables()));
  const EnvelopeOutput out = offset_implicit_route(circle, Rational(1));
  const MultiPoly g = out.elimination.generator.with_variables(plane_variables());
  const MultiPoly target = parse_poly("x^2 + y^2 - 1", plane_variables()) *
                           parse_poly("x^2 + y^2 - 9", plane_variables());
  // Points at distance exactly 1 from the base circle.
  double worst = 0;
  for (int k = 0; k < 5000; ++k) {
    const double a = 2 * std::numbers::pi * k / 5000;
    for (const double rho : {1.0, 3.0}) {
      const std::array<double, 2> v{rho * std::cos(a), rho * std::sin(a)};
      worst = std::max(worst, scaled_residual(g, v));
    }
  }
  result.passed = equal_up_to_constant(g, target) && worst <= 1e-9;
  char buf[160];
  std::snprintf(buf, sizeof buf, "generator %s (x^2+y^2-1)(x^2+y^2-9); distance oracle worst %.1e over 10^4 points",
                equal_up_to_constant(g, target) ? "equals" : "differs from", worst);
  result.detail = buf;

  if (o.stretch) {
    const auto start = std::chrono::steady_clock::now();
    try {
      const MultiPoly f2 = fixture_poly(o, "f2.json");
      const EnvelopeOutput tri = offset_implicit_route(trifolium_one(), Rational(1));
      const MultiPoly tg = tri.elimination.generator.with_variables(plane_variables());
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const bool ok = divides_up_to_constant(f2, tg) && s <= 1800;
      std::snprintf(buf, sizeof buf, "stretch %s: trifolium r=1 implicit route, degree %d, F2 %s, %.1fs",
                    ok ? "PASS" : "FAIL", tg.total_degree(), divides_up_to_constant(f2, tg) ? "divides" : "does not divide",
                    s);
      result.stretch_detail = buf;
    } catch (const ResourceLimitError& e) {
      result.stretch_detail = std::string("stretch FAIL (resource cap): ") + e.what();
    } catch (const DomainError& e) {
      result.stretch_detail = std::string("stretch FAIL: ") + e.what();
    }
    result.stretch_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return result;
}

Outcome check_a9(const Options&) {
  bool ok = true;
  std::string detail;
  for (const auto& r : props::run_all()) {
    ok = ok && r.failures == 0;
    detail += r.name + " " + std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases);
    if (!r.first_failure.empty()) detail += " (" + r.first_failure + ")";
    detail += "; ";
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

Outcome check_a10(const Options& o) {
  const Viewport vp;
  const ImplicitCurve tri = trifolium_one();
  const ImplicitCurve f2 = ImplicitCurve::from_poly(fixture_poly(o, "f2.json"));
  auto render = [&](unsigned workers) {
    std::vector<CurveMesh> meshes{marching_squares(tri, vp, workers), marching_squares(f2, vp, workers)};
    meshes[0].source = "trifolium";
    meshes[1].source = "F2";
    std::ostringstream svg;
    emit_svg(meshes, vp, svg);
    return std::pair{meshes, svg.str()};
  };
  const auto [meshes, first] = render(1);
  const auto second = render(4).second;
  const double ratio = std::max(mesh_residual_ratio(meshes[0], tri, vp), mesh_residual_ratio(meshes[1], f2, vp));
  const auto sectors = sector_counts(meshes[0]);
  const bool lobes = std::all_of(sectors.begin(), sectors.end(), [](std::size_t n) { return n > 0; });
  const bool ok = first == second && ratio <= 1 && lobes && !meshes[1].segments.empty();
  char buf[200];
  std::snprintf(buf, sizeof buf, "%zu bytes, %s; residual ratio %.2e; sector counts %zu/%zu/%zu", first.size(),
                first == second ? "identical across worker counts" : "NOT deterministic", ratio, sectors[0], sectors[1],
                sectors[2]);
  return {ok, buf};
}

struct CheckDef {
  const char* id;
  const char* title;
  double budget;
  Outcome (*fn)(const Options&);
};

const std::vector<CheckDef>& check_defs() {
  static const std::vector<CheckDef> all{
      {"A1", "implicitization, second parametrization", 1, check_a1},
      {"A2", "implicitization, first parametrization", 5, check_a2},
      {"A3", "envelope r=1 is F1*F2 (resultant route)", 120, check_a3},
      {"A4", "Groebner elimination from P1, P2", 600, check_a4},
      {"A5", "offset r=1/2 is circle * O_1/2", 120, check_a5},
      {"A6", "offset degree 14 for r in {1/2, 1, 3/4}", 300, check_a6},
      {"A7", "numeric oracle consistency", 5, check_a7},
      {"A8", "implicit route on a circle", 30, check_a8},
      {"A9", "property suites", 60, check_a9},
      {"A10", "rendering", 10, check_a10},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& s : check_defs()) out.emplace_back(s.id);
    return out;
  }();
  return ids;
}

bool is_check_id(const std::string& id) {
  const auto& ids = check_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<std::string> check_fixtures(const fs::path& dir) {
  std::vector<std::string> missing;
  for (const char* name : kFixtureFiles) {
    if (!fs::is_regular_file(dir / name)) missing.emplace_back(name);
  }
  if (!missing.empty()) {
    std::string msg = "missing fixture file(s) in " + dir.string() + ":";
    for (const auto& m : missing) msg += " " + m;
    throw FixtureError(msg);
  }
  std::vector<std::string> warnings;
  std::ifstream sums(dir / "SHA256SUMS");
  if (!sums) {
    warnings.push_back("no SHA256SUMS in " + dir.string());
    return warnings;
  }
  std::string hash;
  std::string name;
  while (sums >> hash >> name) {
    if (!fs::is_regular_file(dir / name)) continue;
    if (sha256_hex(dir / name) != hash) warnings.push_back("checksum mismatch for " + name);
  }
  return warnings;
}

CheckResult run_check(const std::string& id, const Options& options) {
  const auto it = std::find_if(check_defs().begin(), check_defs().end(), [&](const CheckDef& s) { return id == s.id; });
  if (it == check_defs().end()) throw std::invalid_argument("unknown check " + id);
  CheckResult r;
  r.id = it->id;
  r.title = it->title;
  r.budget_seconds = it->budget;
  double stretch_seconds = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome out = it->fn(options);
    r.passed = out.passed;
    r.detail = out.detail;
    r.stretch_detail = out.stretch_detail;
    stretch_seconds = out.stretch_seconds;
  } catch (const ResourceLimitError& e) {
    r.detail = std::string("resource cap: ") + e.what();
  } catch (const DomainError& e) {
    r.detail = std::string("domain error: ") + e.what();
  } catch (const ParseError& e) {
    r.detail = std::string("malformed fixture: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  // The stretch part has its own budget and does not count against A8.
  r.seconds = std::max(0.0, r.seconds - stretch_seconds);
  if (r.seconds > r.budget_seconds) {
    r.passed = false;
    r.detail += "; over the time budget";
  }
  return r;
}

std::string format_line(const CheckResult& r) {
  char budget[32];
  std::snprintf(budget, sizeof budget, "%gs", r.budget_seconds);
  char head[96];
  std::snprintf(head, sizeof head, "%s %-3s %9.3fs/%-5s ", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.seconds,
                budget);
  std::string line = head + r.title + ": " + r.detail;
  if (!r.stretch_detail.empty()) line += " [" + r.stretch_detail + "]";
  return line;
}

}  // namespace trif::acceptance

#include "trif/curvelab/envelope.hpp"

#include <algorithm>
#include <cmath>

#include "trif/elim/division.hpp"
#include "trif/error.hpp"

namespace trif {
namespace {

std::vector<double> default_oracle_grid() {
  std::vector<double> ts;
  for (int k = -100; k <= 100; ++k) ts.push_back(0.05 * k + 0.0123);
  return ts;
}

// Family member at t = infinity: the leading coefficient of F in t.
MultiPoly member_at_infinity(const MultiPoly& f) {
  const std::size_t t = f.vars().require("t");
  const int deg = f.degree_in(t);
  std::vector<Term> terms;
  for (const auto& term : f.terms()) {
    if (static_cast<int>(term.mono[t]) != deg) continue;
    Monomial m = term.mono;
    m.set(t, 0);
    terms.push_back({m, term.coeff});
  }
  return project_out(MultiPoly::from_terms(f.vars(), std::move(terms)), {"t"});
}

EnvelopeOutput package(EliminationResult r, const Rational& radius) {
  EnvelopeOutput out;
  out.curve = ImplicitCurve::from_poly(r.generator);
  out.raw_degree = r.raw.total_degree();
  out.residual = out.curve.poly;
  out.elimination = std::move(r);
  for (const auto& c : circle_candidates(radius)) out = register_candidate_factor(std::move(out), c);
  return out;
}

}  // namespace

CircleFamily::CircleFamily(RationalParametrization c, Rational r) : centers(std::move(c)), radius(std::move(r)) {
  if (radius.sign() <= 0) throw DomainError("radius must be positive");
}

const Variables& family_variables() {
  static const Variables vars{"x", "y", "t"};
  return vars;
}

MultiPoly build_family_poly(const CircleFamily& family) {
  const Variables& v = family_variables();
  const MultiPoly w = family.centers.denom.with_variables(v);
  const MultiPoly cx = family.centers.num_x.with_variables(v);
  const MultiPoly cy = family.centers.num_y.with_variables(v);
  const MultiPoly dx = MultiPoly::variable(v, "x") * w - cx;
  const MultiPoly dy = MultiPoly::variable(v, "y") * w - cy;
  const BigInt p = family.radius.numerator();
  const BigInt q = family.radius.denominator();
  const MultiPoly f = BigInt(q * q) * (dx * dx + dy * dy) - BigInt(p * p) * (w * w);
  return primitive_part(f);
}

EnvelopeOutput register_candidate_factor(EnvelopeOutput out, const ImplicitCurve& candidate) {
  if (candidate.poly.is_zero()) throw DomainError("candidate factor is zero");
  if (candidate.poly.is_constant()) return out;
  int multiplicity = 0;
  while (!out.residual.is_constant()) {
    auto q = divide_exact(out.residual, candidate.poly);
    if (!q) break;
    out.residual = std::move(*q);
    ++multiplicity;
  }
  if (multiplicity > 0) out.factors_verified.push_back({candidate, multiplicity});
  return out;
}

std::vector<ImplicitCurve> circle_candidates(const Rational& r) {
  std::vector<Rational> radii{r};
  for (long k = 1; k <= 16; ++k) radii.emplace_back(BigInt(k), BigInt(4));
  const Variables& v = plane_variables();
  const MultiPoly rho = MultiPoly::variable(v, "x").pow(2) + MultiPoly::variable(v, "y").pow(2);
  std::vector<ImplicitCurve> out;
  for (const auto& s : radii) {
    const Rational sq = s * s;
    const MultiPoly p = primitive_part(sq.denominator() * rho - MultiPoly::constant(v, sq.numerator()));
    if (std::none_of(out.begin(), out.end(), [&](const ImplicitCurve& c) { return c.poly == p; })) {
      out.push_back(ImplicitCurve{p, 2, true});
    }
  }
  return out;
}

EnvelopeOutput envelope_eliminate(const CircleFamily& family, const EnvelopeOptions& options) {
  const MultiPoly f = build_family_poly(family);
  const MultiPoly ft = partial_derivative(f, "t");
  EliminationResult r = options.method == EliminationMethod::resultant
                            ? resultant_eliminate(f, ft, "t")
                            : groebner_eliminate({f, ft}, {"t"}, options.groebner);
  if (r.generator.is_constant()) throw DomainError("the family has no envelope");
  if (options.filter_spurious) {
    std::vector<MultiPoly> hints = default_circle_candidates(r.generator.vars());
    const MultiPoly inf = member_at_infinity(f);
    if (!inf.is_constant()) hints.insert(hints.begin(), inf);
    const OracleResult oracle = oracle_envelope_points(family, default_oracle_grid());
    FactorSplit split =
        filter_spurious_factors(r.generator, oracle_point_list(oracle), options.keep_threshold, hints);
    r.generator = split.kept;
    r.spurious_removed = std::move(split.removed);
  }
  return package(std::move(r), family.radius);
}

const Variables& implicit_route_variables() {
  static const Variables vars{"x", "y", "a", "b"};
  return vars;
}

EnvelopeOutput offset_implicit_route(const ImplicitCurve& curve, const Rational& r, const GroebnerOptions& options) {
  if (r.sign() <= 0) throw DomainError("radius must be positive");
  if (!curve.squarefree) throw DomainError("the implicit route needs a square-free curve");
  const Variables& v = implicit_route_variables();
  std::vector<Term> moved;
  for (const auto& t : curve.poly.terms()) {
    Monomial m(v.size());
    m.set(2, t.mono[0]);
    m.set(3, t.mono[1]);
    moved.push_back({m, t.coeff});
  }
  const MultiPoly g = MultiPoly::from_terms(v, std::move(moved));
  const MultiPoly dx = MultiPoly::variable(v, "x") - MultiPoly::variable(v, "a");
  const MultiPoly dy = MultiPoly::variable(v, "y") - MultiPoly::variable(v, "b");
  const BigInt p = r.numerator();
  const BigInt q = r.denominator();
  const MultiPoly circle = BigInt(q * q) * (dx * dx + dy * dy) - MultiPoly::constant(v, BigInt(p * p));
  const MultiPoly normal = partial_derivative(g, "a") * dy - partial_derivative(g, "b") * dx;
  EliminationResult res = groebner_eliminate({g, circle, normal}, {"a", "b"}, options);
  if (res.generator.is_constant()) throw DomainError("the offset system has no solutions");
  return package(std::move(res), r);
}

std::optional<std::pair<Rational, Rational>> find_pencil_base(const ImplicitCurve& curve) {
  std::vector<std::pair<long, long>> pts;
  for (long i = -3; i <= 3; ++i) {
    for (long j = -3; j <= 3; ++j) pts.emplace_back(i, j);
  }
  std::stable_sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return std::abs(a.first) + std::abs(a.second) < std::abs(b.first) + std::abs(b.second);
  });
  for (const auto& [i, j] : pts) {
    const std::pair<Rational, Rational> base{Rational(i), Rational(j)};
    if (!evaluate_exact(curve.poly, std::vector<Rational>{base.first, base.second}).is_zero()) continue;
    try {
      parametrize_line_pencil(curve, base);
      return base;
    } catch (const DomainError&) {
    }
  }
  return std::nullopt;
}

EnvelopeOutput offset_parametric_route(const ImplicitCurve& curve, const Rational& r, const EnvelopeOptions& options) {
  const auto base = find_pencil_base(curve);
  if (!base) throw DomainError("no base point of multiplicity deg-1 found for a line-pencil parametrization");
  return envelope_eliminate(CircleFamily(parametrize_line_pencil(curve, *base), r), options);
}

int offset_degree(const ImplicitCurve& curve, const Rational& r, OffsetRoute route) {
  const EnvelopeOutput out =
      route == OffsetRoute::parametric ? offset_parametric_route(curve, r) : offset_implicit_route(curve, r);
  return std::max(out.residual.total_degree(), 0);
}

OracleResult oracle_envelope_points(const CircleFamily& family, const std::vector<double>& t_values) {
  OracleResult out;
  const double r = family.radius.to_double();
  for (const double t : t_values) {
    try {
      const auto [cx, cy] = family.centers.at(t);
      const auto [vx, vy] = family.centers.velocity(t);
      const double speed2 = vx * vx + vy * vy;
      if (!std::isfinite(speed2) || speed2 < 1e-9) {
        out.skipped.push_back(t);
        continue;
      }
      const double s = r / std::sqrt(speed2);
      const double nx = -vy * s;
      const double ny = vx * s;
      out.samples.push_back({t, {cx + nx, cy + ny}, {cx - nx, cy - ny}});
    } catch (const DomainError&) {
      out.skipped.push_back(t);
    }
  }
  return out;
}

std::vector<std::pair<double, double>> oracle_point_list(const OracleResult& r) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(2 * r.samples.size());
  for (const auto& s : r.samples) {
    pts.push_back(s.first);
    pts.push_back(s.second);
  }
  return pts;
}

}  // namespace trif

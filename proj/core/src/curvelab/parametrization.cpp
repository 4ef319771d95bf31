#include "trif/curvelab/parametrization.hpp"

#include <algorithm>

#include "trif/elim/division.hpp"
#include "trif/elim/elimination.hpp"
#include "trif/elim/gcd.hpp"
#include "trif/error.hpp"

namespace trif {
namespace {

using Dense = std::vector<mpq_class>;  // ascending coefficients

Dense to_dense(const MultiPoly& p, std::size_t var) {
  Dense d(static_cast<std::size_t>(std::max(p.degree_in(var), 0)) + 1);
  for (const auto& t : p.terms()) d[t.mono[var]] += mpq_class(t.coeff);
  return d;
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

Dense derivative(const Dense& d) {
  Dense out;
  for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] * static_cast<long>(k));
  trim(out);
  return out;
}

Dense remainder(Dense a, const Dense& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (const int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

MultiPoly lift(const MultiPoly& p, const Variables& vars) { return p.with_variables(vars); }

}  // namespace

const Variables& parameter_variables() {
  static const Variables vars{"t"};
  return vars;
}

int count_real_roots(const MultiPoly& p) {
  if (p.is_zero()) throw DomainError("the zero polynomial has infinitely many roots");
  std::size_t var = 0;
  int dependent = 0;
  for (std::size_t v = 0; v < p.vars().size(); ++v) {
    if (p.depends_on(v)) {
      var = v;
      ++dependent;
    }
  }
  if (dependent == 0) return 0;
  if (dependent > 1) throw DomainError("Sturm sequences need a univariate polynomial");

  std::vector<Dense> seq{to_dense(p, var)};
  seq.push_back(derivative(seq[0]));
  while (!seq.back().empty()) {
    Dense r = remainder(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  std::vector<int> at_neg;
  std::vector<int> at_pos;
  for (const auto& d : seq) {
    if (d.empty()) continue;
    const int s = sgn(d.back());
    at_pos.push_back(s);
    at_neg.push_back((d.size() - 1) % 2 == 0 ? s : -s);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

RationalParametrization RationalParametrization::make(const MultiPoly& num_x, const MultiPoly& num_y,
                                                      const MultiPoly& denom) {
  const Variables& v = parameter_variables();
  MultiPoly nx = lift(num_x, v);
  MultiPoly ny = lift(num_y, v);
  MultiPoly d = lift(denom, v);
  if (d.is_zero()) throw DomainError("parametrization denominator is zero");

  MultiPoly g = primitive_part(d);
  if (!nx.is_zero()) g = multivar_gcd(g, nx);
  if (!ny.is_zero()) g = multivar_gcd(g, ny);
  if (!g.is_constant()) {
    d = *divide_exact(d, g);
    if (!nx.is_zero()) nx = *divide_exact(nx, g);
    if (!ny.is_zero()) ny = *divide_exact(ny, g);
  }
  BigInt content = content_and_primitive(d).content;
  for (const MultiPoly* p : {&nx, &ny}) {
    if (!p->is_zero()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), content_and_primitive(*p).content.get_mpz_t());
  }
  RationalParametrization out;
  const BigInt scale = d.leading_coefficient() < 0 ? BigInt(-content) : content;
  auto reduce = [&](const MultiPoly& p) { return p.is_zero() ? p : *divide_exact(p, MultiPoly::constant(v, scale)); };
  out.num_x = reduce(nx);
  out.num_y = reduce(ny);
  out.denom = reduce(d);
  return out;
}

bool RationalParametrization::totally_defined() const { return count_real_roots(denom) == 0; }

std::pair<Rational, Rational> RationalParametrization::at(const Rational& t) const {
  const Rational w = evaluate_exact(denom, std::span<const Rational>(&t, 1));
  if (w.is_zero()) throw DomainError("parametrization undefined at t = " + t.to_string());
  return {evaluate_exact(num_x, std::span<const Rational>(&t, 1)) / w,
          evaluate_exact(num_y, std::span<const Rational>(&t, 1)) / w};
}

std::pair<double, double> RationalParametrization::at(double t) const {
  const std::span<const double> pt(&t, 1);
  const double w = evaluate_float(denom, pt);
  if (w == 0.0) throw DomainError("parametrization undefined at t = " + std::to_string(t));
  return {evaluate_float(num_x, pt) / w, evaluate_float(num_y, pt) / w};
}

std::pair<double, double> RationalParametrization::velocity(double t) const {
  const std::span<const double> pt(&t, 1);
  const double w = evaluate_float(denom, pt);
  if (w == 0.0) throw DomainError("parametrization undefined at t = " + std::to_string(t));
  const double dw = evaluate_float(partial_derivative(denom, 0), pt);
  const double x = evaluate_float(num_x, pt);
  const double y = evaluate_float(num_y, pt);
  const double dx = evaluate_float(partial_derivative(num_x, 0), pt);
  const double dy = evaluate_float(partial_derivative(num_y, 0), pt);
  return {(dx * w - x * dw) / (w * w), (dy * w - y * dw) / (w * w)};
}

RationalParametrization parametrize_line_pencil(const ImplicitCurve& curve,
                                                const std::pair<Rational, Rational>& base) {
  const Variables vars{"x", "y", "t"};
  const MultiPoly g = curve.poly.with_variables(vars);
  const Rational& bx = base.first;
  const Rational& by = base.second;
  if (!evaluate_exact(curve.poly, std::vector<Rational>{bx, by}).is_zero()) {
    throw DomainError("base point (" + bx.to_string() + ", " + by.to_string() + ") is not on the curve");
  }

  // h(x, y) = D^deg * g(x + bx, y + by) with D clearing both denominators.
  BigInt den;
  mpz_lcm(den.get_mpz_t(), bx.denominator().get_mpz_t(), by.denominator().get_mpz_t());
  const BigInt big_x = (bx * Rational(den)).numerator();
  const BigInt big_y = (by * Rational(den)).numerator();
  const MultiPoly x = MultiPoly::variable(vars, "x");
  const MultiPoly y = MultiPoly::variable(vars, "y");
  const MultiPoly t = MultiPoly::variable(vars, "t");
  const MultiPoly sx = den * x + MultiPoly::constant(vars, big_x);
  const MultiPoly sy = den * y + MultiPoly::constant(vars, big_y);
  const int deg = g.total_degree();
  MultiPoly h(vars);
  for (const auto& term : g.terms()) {
    const unsigned i = term.mono[0];
    const unsigned j = term.mono[1];
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(deg) - i - j);
    h = h + (term.coeff * scale) * (sx.pow(i) * sy.pow(j));
  }

  // Lines through the base: y = t*x in shifted coordinates.
  MultiPoly q = substitute(h, "y", t * x);
  unsigned low = ~0U;
  for (const auto& term : q.terms()) low = std::min(low, term.mono[0]);
  std::vector<Term> shifted;
  for (const auto& term : q.terms()) {
    Monomial m = term.mono;
    m.set(0, m[0] - low);
    shifted.push_back({m, term.coeff});
  }
  q = MultiPoly::from_terms(vars, std::move(shifted));
  if (q.degree_in(0) != 1) {
    throw DomainError("lines through the base meet the curve in " + std::to_string(q.degree_in(0)) +
                      " further points; expected exactly one");
  }
  // q = q1(t)*x + q0(t)  =>  x = -q0/q1
  std::vector<Term> t1;
  std::vector<Term> t0;
  for (const auto& term : q.terms()) {
    Monomial m(1);
    m.set(0, term.mono[2]);
    (term.mono[0] == 1 ? t1 : t0).push_back({m, term.coeff});
  }
  const Variables& pv = parameter_variables();
  const MultiPoly q1 = MultiPoly::from_terms(pv, std::move(t1));
  const MultiPoly q0 = MultiPoly::from_terms(pv, std::move(t0));
  const MultiPoly tt = MultiPoly::variable(pv, "t");
  const MultiPoly num_x = big_x * q1 - den * q0;
  const MultiPoly num_y = big_y * q1 - den * (tt * q0);
  return RationalParametrization::make(num_x, num_y, den * q1);
}

ImplicitCurve implicitize(const RationalParametrization& param) {
  const Variables vars{"x", "y", "t"};
  const MultiPoly d = param.denom.with_variables(vars);
  const MultiPoly nx = param.num_x.with_variables(vars);
  const MultiPoly ny = param.num_y.with_variables(vars);
  const MultiPoly dd = partial_derivative(d, "t");
  if ((partial_derivative(nx, "t") * d - nx * dd).is_zero() && (partial_derivative(ny, "t") * d - ny * dd).is_zero()) {
    throw DomainError("degenerate parametrization: the image is a single point");
  }
  const MultiPoly px = MultiPoly::variable(vars, "x") * d - nx;
  const MultiPoly py = MultiPoly::variable(vars, "y") * d - ny;
  const std::size_t t = vars.require("t");
  if (px.degree_in(t) == 0) return ImplicitCurve::from_poly(px);
  if (py.degree_in(t) == 0) return ImplicitCurve::from_poly(py);
  const EliminationResult r = resultant_eliminate(px, py, "t");
  return ImplicitCurve::from_poly(r.generator);
}

}  // namespace trif

#include "trif/curvelab/curve.hpp"

#include "trif/elim/gcd.hpp"
#include "trif/error.hpp"

namespace trif {

const Variables& plane_variables() {
  static const Variables vars{"x", "y"};
  return vars;
}

ImplicitCurve ImplicitCurve::from_poly(const MultiPoly& p) {
  if (p.is_zero() || p.is_constant()) throw DomainError("a curve needs a nonconstant polynomial");
  ImplicitCurve c;
  c.poly = primitive_part(p.with_variables(plane_variables()));
  c.degree = c.poly.total_degree();
  c.squarefree = squarefree_part(c.poly) == c.poly;
  return c;
}

void validate(const ImplicitCurve& c) {
  if (!(c.poly.vars() == plane_variables())) throw DomainError("curve must live over {x, y}");
  if (c.poly.is_zero() || c.poly.is_constant()) throw DomainError("curve polynomial is constant");
  if (!(primitive_part(c.poly) == c.poly)) throw DomainError("curve polynomial is not primitive");
  if (c.degree != c.poly.total_degree()) throw DomainError("cached degree is stale");
  if (c.squarefree && !(squarefree_part(c.poly) == c.poly)) throw DomainError("curve flagged square-free is not");
}

ImplicitCurve make_trifolium(const Rational& a) {
  if (a.sign() <= 0) throw DomainError("trifolium parameter must be positive");
  const Variables& v = plane_variables();
  const MultiPoly x = MultiPoly::variable(v, "x");
  const MultiPoly y = MultiPoly::variable(v, "y");
  const MultiPoly rho = x * x + y * y;
  // den(a)*(x^2+y^2)^2 - num(a)*x*(x^2-3y^2)
  const MultiPoly p = a.denominator() * (rho * rho) - a.numerator() * (x * (x * x - BigInt(3) * (y * y)));
  ImplicitCurve c;
  c.poly = primitive_part(p);
  c.degree = 4;
  c.squarefree = true;
  return c;
}

}  // namespace trif

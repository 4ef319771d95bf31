#pragma once

#include <utility>

#include "trif/curvelab/curve.hpp"
#include "trif/polycore/multipoly.hpp"
#include "trif/polycore/rational.hpp"

namespace trif {

const Variables& parameter_variables();

/// Rational plane curve (num_x / denom, num_y / denom) over {t}, stored in
/// reduced form: gcd(num_x, num_y, denom) = 1, integer content 1, denom with
/// positive leading coefficient.
struct RationalParametrization {
  MultiPoly num_x;
  MultiPoly num_y;
  MultiPoly denom;

  // Reduces and normalizes; throws DomainError for a zero denominator.
  static RationalParametrization make(const MultiPoly& num_x, const MultiPoly& num_y, const MultiPoly& denom);

  // The denominator has no real root.
  bool totally_defined() const;

  // Throws DomainError where the denominator vanishes.
  std::pair<Rational, Rational> at(const Rational& t) const;
  std::pair<double, double> at(double t) const;
  // Velocity (dx/dt, dy/dt).
  std::pair<double, double> velocity(double t) const;
};

/// Number of distinct real roots of a univariate polynomial (Sturm sequence).
int count_real_roots(const MultiPoly& p);

/// Intersects `curve` with the pencil of lines through `base` (y - by =
/// t*(x - bx)). Requires base to have multiplicity deg - 1 so that each line
/// meets the curve in exactly one further point.
RationalParametrization parametrize_line_pencil(const ImplicitCurve& curve,
                                                const std::pair<Rational, Rational>& base);

/// Eliminates t from {x*denom - num_x, y*denom - num_y}.
ImplicitCurve implicitize(const RationalParametrization& param);

}  // namespace trif

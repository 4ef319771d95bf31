#pragma once

#include "trif/polycore/multipoly.hpp"
#include "trif/polycore/rational.hpp"

namespace trif {

// The plane variables every curve lives over.
const Variables& plane_variables();

/// Plane algebraic curve given by a primitive integer polynomial in {x, y}
/// with positive leading coefficient.
struct ImplicitCurve {
  MultiPoly poly;
  int degree = 0;
  bool squarefree = false;

  /// Normalizes `p` (which may be stated over a larger variable list but
  /// must depend on x and y only) and computes the square-free flag.
  static ImplicitCurve from_poly(const MultiPoly& p);
};

// Throws DomainError when an invariant of `c` does not hold.
void validate(const ImplicitCurve& c);

/// (x^2 + y^2)^2 - a*x*(x^2 - 3*y^2), cleared of denominators.
ImplicitCurve make_trifolium(const Rational& a);

}  // namespace trif

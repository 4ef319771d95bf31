#pragma once

#include "trif/polycore/multipoly.hpp"

namespace trif {

/// Primitive GCD with positive leading coefficient, by recursive subresultant
/// PRS. gcd(p, 0) is the primitive part of p. Throws DomainError when both
/// inputs are zero.
MultiPoly multivar_gcd(const MultiPoly& p, const MultiPoly& q);

/// p / gcd(p, dp/dv1, ..., dp/dvn), primitive with positive leading
/// coefficient. Throws DomainError for the zero polynomial.
MultiPoly squarefree_part(const MultiPoly& p);

// gcd of the coefficients of p viewed as a polynomial in `var` (primitive).
MultiPoly content_in(const MultiPoly& p, std::size_t var);

}  // namespace trif

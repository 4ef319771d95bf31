#pragma once

#include <string_view>
#include <vector>

#include "trif/polycore/multipoly.hpp"

namespace trif {

/// Determinant of the Sylvester matrix of p and q viewed as polynomials in
/// `var`, by fraction-free (Bareiss) elimination. The result lives over the
/// same variables and does not depend on `var`. Throws DomainError when
/// either input has degree 0 in `var`.
MultiPoly sylvester_resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var);

/// Same resultant computed from the subresultant polynomial remainder
/// sequence. Independent route used to cross-check the Bareiss determinant.
MultiPoly prs_resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var);

}  // namespace trif

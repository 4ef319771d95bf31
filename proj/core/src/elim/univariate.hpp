#pragma once

// Recursive view of a multivariate polynomial as a univariate polynomial in
// one main variable with polynomial coefficients. Internal to elim.

#include <vector>

#include "trif/polycore/multipoly.hpp"

namespace trif::detail {

struct UniView {
  std::size_t var = 0;
  std::vector<MultiPoly> coeffs;  // coeffs[k] multiplies var^k; no trailing zeros

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const MultiPoly& lc() const { return coeffs.back(); }
};

UniView to_univariate(const MultiPoly& p, std::size_t var);
MultiPoly from_univariate(const UniView& u, const Variables& vars);

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b. Precondition:
// deg a >= deg b >= 0.
UniView pseudo_remainder(const UniView& a, const UniView& b, const Variables& vars);

// Last nonzero subresultant of a, b (deg a >= deg b > 0). When the final
// remainder is a nonzero constant in the main variable, that constant is
// returned (degree 0).
UniView subresultant_last(const UniView& a, const UniView& b, const Variables& vars);

// Resultant by the subresultant PRS (deg a, deg b > 0).
MultiPoly subresultant_resultant(const UniView& a, const UniView& b, const Variables& vars);

// Exact division that must succeed (internal invariant).
MultiPoly div_exact_or_throw(const MultiPoly& p, const MultiPoly& q);

}  // namespace trif::detail

#pragma once

#include <optional>

#include "trif/polycore/multipoly.hpp"

namespace trif {

/// Exact quotient over the integers: returns s with p == q * s, or nullopt
/// when q does not divide p in Z[vars]. Throws DomainError when q is zero.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q);

// True when q divides p after both are made primitive.
bool divides_up_to_constant(const MultiPoly& q, const MultiPoly& p);

// p and q are equal up to a nonzero rational factor.
bool equal_up_to_constant(const MultiPoly& p, const MultiPoly& q);

}  // namespace trif

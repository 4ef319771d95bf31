#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "trif/polycore/multipoly.hpp"

namespace trif {

enum class EliminationMethod { resultant, groebner };

std::string to_string(EliminationMethod m);

struct EliminationResult {
  // Lives over the retained variables only.
  MultiPoly generator;
  MultiPoly raw;
  EliminationMethod method = EliminationMethod::resultant;
  std::vector<std::string> eliminated_vars;
  std::vector<MultiPoly> spurious_removed;
  // False when the elimination ideal needed more than one generator; the
  // generator is then its lowest-degree element.
  bool principal = true;
  bool squarefree = true;
  // Groebner route only: basis elements in the retained subring.
  std::vector<MultiPoly> eliminants;
  std::size_t pairs_reduced = 0;
  std::size_t primes_used = 0;
};

/// Eliminates `var` from {p, q} via the Sylvester resultant. The generator
/// is the primitive square-free part of the resultant.
EliminationResult resultant_eliminate(const MultiPoly& p, const MultiPoly& q, const std::string& var);

nlohmann::json to_json(const EliminationResult& r);

struct FactorSplit {
  MultiPoly kept;
  std::vector<MultiPoly> removed;
};

/// Origin-centred conics c*(x^2 + y^2) - k for small integer/quarter radii
/// squared, including the positive-definite ones (k < 0). Used as default
/// sub-factor hints for candidates over {x, y}.
std::vector<MultiPoly> default_circle_candidates(const Variables& vars);

/// Splits a square-free candidate into the part whose zero set meets the
/// oracle samples and the rest. Sub-factors come from the contents of the
/// candidate in each variable and from exact division by `hints`; a factor
/// is kept iff some oracle point has scaled residual <= keep_threshold.
/// kept * prod(removed) == candidate. Throws DomainError when no factor is
/// retained.
FactorSplit filter_spurious_factors(const MultiPoly& candidate,
                                    const std::vector<std::pair<double, double>>& oracle_points,
                                    double keep_threshold, const std::vector<MultiPoly>& hints);
FactorSplit filter_spurious_factors(const MultiPoly& candidate,
                                    const std::vector<std::pair<double, double>>& oracle_points,
                                    double keep_threshold);

// Drops the listed variables (which p must not depend on).
MultiPoly project_out(const MultiPoly& p, const std::vector<std::string>& eliminated);

}  // namespace trif

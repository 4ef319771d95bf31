#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trif/elim/elimination.hpp"
#include "trif/polycore/multipoly.hpp"

namespace trif {

enum class EliminationOrder {
  block,  // graded reverse lex on the eliminated block, then on the rest
  lex,    // pure lexicographic, eliminated variables greatest
};

struct GroebnerOptions {
  // Largest term count allowed in any single intermediate polynomial and in
  // the basis as a whole.
  std::size_t max_terms = 1'000'000;
  // Largest number of S-pairs reduced.
  std::size_t max_pairs = 100'000;
  EliminationOrder order = EliminationOrder::block;
  // Compute the basis modulo word-size primes and lift the eliminant by CRT
  // and rational reconstruction.
  bool modular = false;
  // Run on the homogenized system and dehomogenize the eliminants. Keeps
  // every intermediate polynomial homogeneous, which bounds its degree.
  bool homogenize = true;
  std::size_t max_primes = 64;
};

// Reads TRIF_MAX_TERMS / TRIF_MAX_PAIRS from the environment when set.
GroebnerOptions groebner_options_from_env(GroebnerOptions base = {});

struct GroebnerBasis {
  Variables vars;                    // same as the input system
  std::vector<MultiPoly> elements;   // reduced, primitive, ascending leading terms
  std::size_t pairs_reduced = 0;
};

/// Reduced Groebner basis over Q (elements scaled to primitive integer form)
/// for an elimination order with `eliminate` greatest.
GroebnerBasis groebner_basis(const std::vector<MultiPoly>& system, const std::vector<std::string>& eliminate,
                             const GroebnerOptions& options = {});

/// Intersection of the ideal generated by `system` with the subring free of
/// `eliminate`. Throws ResourceLimitError when a budget is exceeded.
EliminationResult groebner_eliminate(const std::vector<MultiPoly>& system, const std::vector<std::string>& eliminate,
                                     const GroebnerOptions& options = {});

}  // namespace trif

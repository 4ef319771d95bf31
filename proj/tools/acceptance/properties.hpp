#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "trif/polycore/multipoly.hpp"
#include "trif/polycore/rational.hpp"

namespace trif::props {

// Random sparse polynomials over a fixed variable list.
class PolyGen {
 public:
  PolyGen(std::uint64_t seed, Variables vars) : rng_(seed), vars_(std::move(vars)) {}

  const Variables& vars() const { return vars_; }
  std::mt19937_64& rng() { return rng_; }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  BigInt coefficient(int bits);
  Rational positive_rational(long max_num, long max_den);

  // Up to `max_terms` terms, each exponent <= max_exp, coefficients below
  // 2^bits in magnitude. May return zero.
  MultiPoly poly(int max_terms, unsigned max_exp, int bits = 20);
  MultiPoly nonzero_poly(int max_terms, unsigned max_exp, int bits = 20);
  // Nonzero with degree in `var` between 1 and max_var_degree.
  MultiPoly poly_in(std::size_t var, unsigned max_var_degree, int max_terms, unsigned max_exp, int bits = 8);

 private:
  std::mt19937_64 rng_;
  Variables vars_;
};

struct Report {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
};

inline constexpr int kDefaultCases = 200;

Report ring_laws(std::uint64_t seed, int cases = kDefaultCases);
Report leibniz_rule(std::uint64_t seed, int cases = kDefaultCases);
Report resultant_multiplicativity(std::uint64_t seed, int cases = kDefaultCases);
Report resultant_specialization(std::uint64_t seed, int cases = kDefaultCases);
Report divide_exact_round_trip(std::uint64_t seed, int cases = kDefaultCases);
Report trifolium_symmetry(std::uint64_t seed, int cases = kDefaultCases);

// p(x, -y) equals p or -p.
bool symmetric_in_y(const MultiPoly& p);

// The six suites above with their default seeds.
std::vector<Report> run_all(int cases = kDefaultCases);

}  // namespace trif::props

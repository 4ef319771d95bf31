#pragma once

// Word-size prime field helpers shared by the GCD fast path and the modular
// Groebner runs. Internal to elim.

#include <cstdint>
#include <vector>

#include "trif/polycore/rational.hpp"

namespace trif::detail {

using Residue = std::uint64_t;

inline Residue mul_mod(Residue a, Residue b, Residue p) { return (a * b) % p; }
inline Residue add_mod(Residue a, Residue b, Residue p) { return (a + b) % p; }
inline Residue sub_mod(Residue a, Residue b, Residue p) { return (a + p - b) % p; }

Residue pow_mod(Residue a, std::uint64_t e, Residue p);
Residue inv_mod(Residue a, Residue p);
Residue reduce(const BigInt& c, Residue p);

// The first `count` primes below 2^31, descending. Deterministic.
const std::vector<Residue>& word_primes(std::size_t count);

// Dense univariate polynomial over F_p, ascending coefficients, trimmed.
std::vector<Residue> gcd_mod(std::vector<Residue> a, std::vector<Residue> b, Residue p);

// Rational reconstruction of u mod m with |num|, den <= sqrt(m/2).
bool rational_reconstruct(const BigInt& u, const BigInt& m, mpq_class& out);

}  // namespace trif::detail

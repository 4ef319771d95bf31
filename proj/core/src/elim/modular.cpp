#include "modular.hpp"

#include <utility>

namespace trif::detail {
namespace {

void trim(std::vector<Residue>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

Residue pow_mod(Residue a, std::uint64_t e, Residue p) {
  Residue r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

Residue inv_mod(Residue a, Residue p) { return pow_mod(a, p - 2, p); }

Residue reduce(const BigInt& c, Residue p) {
  return static_cast<Residue>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)));
}

const std::vector<Residue>& word_primes(std::size_t count) {
  static std::vector<Residue> primes;
  if (primes.size() < count) {
    BigInt candidate = primes.empty() ? BigInt((1UL << 31U)) : BigInt(static_cast<unsigned long>(primes.back()));
    while (primes.size() < count) {
      candidate -= 1;
      if (mpz_probab_prime_p(candidate.get_mpz_t(), 30) > 0) primes.push_back(candidate.get_ui());
    }
  }
  return primes;
}

std::vector<Residue> gcd_mod(std::vector<Residue> a, std::vector<Residue> b, Residue p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a <- a mod b
    const Residue inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
      const Residue f = mul_mod(a.back(), inv, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] = sub_mod(a[k + shift], mul_mod(f, b[k], p), p);
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

bool rational_reconstruct(const BigInt& u, const BigInt& m, mpq_class& out) {
  BigInt bound;
  BigInt half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  BigInt r0 = m;
  BigInt r1 = u % m;
  if (r1 < 0) r1 += m;
  BigInt s0 = 0;
  BigInt s1 = 1;
  BigInt q;
  BigInt tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (s1 == 0 || abs(s1) > bound) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return false;
  if (s1 < 0) {
    s1 = -s1;
    r1 = -r1;
  }
  out = mpq_class(r1, s1);
  return true;
}

}  // namespace trif::detail

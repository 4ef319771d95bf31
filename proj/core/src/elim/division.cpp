#include "trif/elim/division.hpp"

#include <map>

#include "trif/error.hpp"

namespace trif {
namespace {

struct GrevlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_grevlex(a, b) > 0; }
};

}  // namespace

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  if (!(p.vars() == q.vars())) throw DomainError("variable-set mismatch");
  if (p.is_zero()) return MultiPoly(p.vars());
  for (std::size_t v = 0; v < p.vars().size(); ++v) {
    if (q.degree_in(v) > p.degree_in(v)) return std::nullopt;
  }

  const Term& lead = q.leading_term();
  if (q.size() == 1) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      if (!lead.mono.divides(t.mono) || !mpz_divisible_p(t.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
        return std::nullopt;
      }
      BigInt c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
      out.push_back({lead.mono.quotient_of(t.mono), std::move(c)});
    }
    return MultiPoly::from_terms(p.vars(), std::move(out));
  }

  std::map<Monomial, BigInt, GrevlexDesc> rem;
  for (const auto& t : p.terms()) rem.emplace(t.mono, t.coeff);
  std::vector<Term> quotient;
  BigInt c;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first) || !mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t())) {
      return std::nullopt;
    }
    mpz_divexact(c.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
    const Monomial m = lead.mono.quotient_of(it->first);
    rem.erase(it);
    for (std::size_t k = 1; k < q.size(); ++k) {
      const Term& t = q.terms()[k];
      auto [slot, inserted] = rem.try_emplace(t.mono * m);
      mpz_submul(slot->second.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
      if (slot->second == 0) rem.erase(slot);
    }
    quotient.push_back({m, c});
  }
  // Quotient terms were produced in strictly descending order.
  return MultiPoly::from_terms(p.vars(), std::move(quotient));
}

bool divides_up_to_constant(const MultiPoly& q, const MultiPoly& p) {
  if (p.is_zero()) return true;
  if (q.is_zero()) return false;
  return divide_exact(primitive_part(p), primitive_part(q)).has_value();
}

bool equal_up_to_constant(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (!(p.vars() == q.vars())) return false;
  return primitive_part(p) == primitive_part(q);
}

}  // namespace trif

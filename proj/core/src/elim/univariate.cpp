#include "univariate.hpp"

#include <stdexcept>

#include "trif/elim/division.hpp"

namespace trif::detail {
namespace {

void trim(UniView& u) {
  while (!u.coeffs.empty() && u.coeffs.back().is_zero()) u.coeffs.pop_back();
}

MultiPoly one(const Variables& vars) { return MultiPoly::constant(vars, 1); }

}  // namespace

UniView to_univariate(const MultiPoly& p, std::size_t var) {
  UniView u;
  u.var = var;
  const int d = p.degree_in(var);
  if (d < 0) return u;
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(d) + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    const unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  u.coeffs.reserve(buckets.size());
  for (auto& b : buckets) u.coeffs.push_back(MultiPoly::from_terms(p.vars(), std::move(b)));
  trim(u);
  return u;
}

MultiPoly from_univariate(const UniView& u, const Variables& vars) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < u.coeffs.size(); ++k) {
    for (const auto& t : u.coeffs[k].terms()) {
      Monomial m = t.mono;
      m.set(u.var, m[u.var] + static_cast<unsigned>(k));
      terms.push_back({m, t.coeff});
    }
  }
  return MultiPoly::from_terms(vars, std::move(terms));
}

MultiPoly div_exact_or_throw(const MultiPoly& p, const MultiPoly& q) {
  auto r = divide_exact(p, q);
  if (!r) throw std::logic_error("internal: expected exact division failed");
  return std::move(*r);
}

UniView pseudo_remainder(const UniView& a, const UniView& b, const Variables& vars) {
  UniView r = a;
  const int db = b.degree();
  int e = a.degree() - db + 1;
  const MultiPoly& lb = b.lc();
  while (!r.is_zero() && r.degree() >= db) {
    const MultiPoly lr = r.lc();
    const auto shift = static_cast<std::size_t>(r.degree() - db);
    for (auto& c : r.coeffs) c = lb * c;
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) r.coeffs[k + shift] = r.coeffs[k + shift] - lr * b.coeffs[k];
    trim(r);
    --e;
  }
  if (e > 0 && !r.is_zero()) {
    const MultiPoly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : r.coeffs) c = f * c;
  }
  (void)vars;
  return r;
}

UniView subresultant_last(const UniView& a0, const UniView& b0, const Variables& vars) {
  UniView a = a0;
  UniView b = b0;
  MultiPoly g = one(vars);
  MultiPoly h = one(vars);
  while (true) {
    const int delta = a.degree() - b.degree();
    UniView r = pseudo_remainder(a, b, vars);
    if (r.is_zero()) return b;
    if (r.degree() == 0) return r;
    const MultiPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : r.coeffs) c = div_exact_or_throw(c, divisor);
    a = std::move(b);
    b = std::move(r);
    g = a.lc();
    // h <- g^delta / h^(delta-1)
    if (delta == 0) {
      // h unchanged (h^1 * g^0)
    } else {
      h = div_exact_or_throw(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
}

MultiPoly subresultant_resultant(const UniView& a0, const UniView& b0, const Variables& vars) {
  // Collins' formulation with sign tracking.
  UniView a = a0;
  UniView b = b0;
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
  }
  MultiPoly g = one(vars);
  MultiPoly h = one(vars);
  while (b.degree() > 0) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    UniView r = pseudo_remainder(a, b, vars);
    if (r.is_zero()) return MultiPoly(vars);
    const MultiPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : r.coeffs) c = div_exact_or_throw(c, divisor);
    a = std::move(b);
    b = std::move(r);
    g = a.lc();
    if (delta != 0) {
      h = div_exact_or_throw(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  // b is a nonzero constant in the main variable.
  const int da = a.degree();
  MultiPoly res = div_exact_or_throw(b.lc().pow(static_cast<unsigned>(da)), h.pow(static_cast<unsigned>(da - 1)));
  return sign > 0 ? res : -res;
}

}  // namespace trif::detail

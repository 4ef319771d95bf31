#include "trif/elim/gcd.hpp"

#include <algorithm>
#include <limits>

#include "modular.hpp"
#include "trif/elim/division.hpp"
#include "trif/error.hpp"
#include "univariate.hpp"

namespace trif {
namespace {

using detail::Residue;

MultiPoly one(const Variables& vars) { return MultiPoly::constant(vars, 1); }

MultiPoly normalize(const MultiPoly& g) {
  if (g.is_zero()) return g;
  return primitive_part(g);
}

// Image of p in F_prime[var] after binding every other variable to `point`.
std::vector<Residue> image(const detail::UniView& u, const std::vector<Residue>& point, Residue prime) {
  std::vector<Residue> out(u.coeffs.size(), 0);
  for (std::size_t k = 0; k < u.coeffs.size(); ++k) {
    Residue acc = 0;
    for (const auto& t : u.coeffs[k].terms()) {
      Residue v = detail::reduce(t.coeff, prime);
      for (std::size_t i = 0; i < point.size(); ++i) {
        if (t.mono[i] != 0) v = detail::mul_mod(v, detail::pow_mod(point[i], t.mono[i], prime), prime);
      }
      acc = detail::add_mod(acc, v, prime);
    }
    out[k] = acc;
  }
  return out;
}

// Sound early exit: if the images of a and b under a specialization that
// keeps both leading coefficients nonzero are coprime, then a and b have no
// common factor of positive degree in the main variable.
bool coprime_by_image(const detail::UniView& a, const detail::UniView& b, std::size_t nvars) {
  const auto& primes = detail::word_primes(3);
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  for (const Residue prime : primes) {
    for (int attempt = 0; attempt < 2; ++attempt) {
      std::vector<Residue> point(nvars);
      for (auto& v : point) {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        v = (seed >> 17U) % prime;
      }
      const auto ia = image(a, point, prime);
      const auto ib = image(b, point, prime);
      if (ia.back() == 0 || ib.back() == 0) continue;
      const auto g = detail::gcd_mod(ia, ib, prime);
      if (g.size() == 1) return true;
    }
  }
  return false;
}

MultiPoly gcd_rec(const MultiPoly& p, const MultiPoly& q);

MultiPoly content_of(const detail::UniView& u, const Variables& vars) {
  MultiPoly g(vars);
  for (auto it = u.coeffs.rbegin(); it != u.coeffs.rend(); ++it) {
    if (it->is_zero()) continue;
    g = g.is_zero() ? normalize(*it) : gcd_rec(g, *it);
    if (g.is_constant()) return one(vars);
  }
  return g;
}

// Primitive gcd (up to sign); integer contents are ignored.
MultiPoly gcd_rec(const MultiPoly& p, const MultiPoly& q) {
  const Variables& vars = p.vars();
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  if (p.is_constant() || q.is_constant()) return one(vars);

  // A variable present in only one input can be removed through its content.
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const bool in_p = p.depends_on(v);
    const bool in_q = q.depends_on(v);
    if (in_p && !in_q) return gcd_rec(content_of(detail::to_univariate(p, v), vars), q);
    if (in_q && !in_p) return gcd_rec(p, content_of(detail::to_univariate(q, v), vars));
  }

  // Main variable: the shared one of smallest combined degree.
  std::size_t main = 0;
  int best = std::numeric_limits<int>::max();
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (!p.depends_on(v)) continue;
    const int cost = std::max(p.degree_in(v), q.degree_in(v));
    if (cost < best) {
      best = cost;
      main = v;
    }
  }

  detail::UniView a = detail::to_univariate(p, main);
  detail::UniView b = detail::to_univariate(q, main);
  const MultiPoly ca = content_of(a, vars);
  const MultiPoly cb = content_of(b, vars);
  const MultiPoly cont = gcd_rec(ca, cb);
  if (!ca.is_constant()) a = detail::to_univariate(detail::div_exact_or_throw(p, ca), main);
  if (!cb.is_constant()) b = detail::to_univariate(detail::div_exact_or_throw(q, cb), main);

  if (coprime_by_image(a, b, vars.size())) return cont;
  if (a.degree() < b.degree()) std::swap(a, b);
  const detail::UniView last = detail::subresultant_last(a, b, vars);
  if (last.degree() <= 0) return cont;
  const MultiPoly s = detail::from_univariate(last, vars);
  const MultiPoly s_content = content_of(last, vars);
  const MultiPoly g = s_content.is_constant() ? s : detail::div_exact_or_throw(s, s_content);
  return normalize(cont * g);
}

}  // namespace

MultiPoly multivar_gcd(const MultiPoly& p, const MultiPoly& q) {
  if (!(p.vars() == q.vars())) throw DomainError("variable-set mismatch");
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
  return normalize(gcd_rec(p, q));
}

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  return normalize(content_of(detail::to_univariate(p, var), p.vars()));
}

MultiPoly squarefree_part(const MultiPoly& p) {
  if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
  const MultiPoly prim = primitive_part(p);
  MultiPoly g = prim;
  for (std::size_t v = 0; v < p.vars().size() && !g.is_constant(); ++v) {
    if (!prim.depends_on(v)) continue;
    g = multivar_gcd(g, partial_derivative(prim, v));
  }
  if (g.is_constant()) return prim;
  return primitive_part(detail::div_exact_or_throw(prim, g));
}

}  // namespace trif

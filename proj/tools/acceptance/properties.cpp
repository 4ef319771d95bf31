#include "properties.hpp"

#include <exception>
#include <sstream>

#include "trif/curvelab/curve.hpp"
#include "trif/curvelab/parametrization.hpp"
#include "trif/elim/division.hpp"
#include "trif/elim/resultant.hpp"
#include "trif/polycore/poly_io.hpp"

namespace trif::props {

BigInt PolyGen::coefficient(int bits) {
  BigInt c = 0;
  for (int done = 0; done < bits; done += 16) {
    const int chunk = std::min(16, bits - done);
    c <<= chunk;
    c += static_cast<unsigned long>(integer(0, (1L << chunk) - 1));
  }
  if (integer(0, 1) == 1) c = -c;
  return c;
}

Rational PolyGen::positive_rational(long max_num, long max_den) {
  return Rational(BigInt(integer(1, max_num)), BigInt(integer(1, max_den)));
}

MultiPoly PolyGen::poly(int max_terms, unsigned max_exp, int bits) {
  const long n = integer(0, max_terms);
  std::vector<Term> terms;
  for (long k = 0; k < n; ++k) {
    Monomial m(vars_.size());
    for (std::size_t v = 0; v < vars_.size(); ++v) m.set(v, static_cast<unsigned>(integer(0, max_exp)));
    terms.push_back({m, coefficient(bits)});
  }
  return MultiPoly::from_terms(vars_, std::move(terms));
}

MultiPoly PolyGen::nonzero_poly(int max_terms, unsigned max_exp, int bits) {
  for (;;) {
    MultiPoly p = poly(std::max(1, max_terms), max_exp, bits);
    if (!p.is_zero()) return p;
  }
}

MultiPoly PolyGen::poly_in(std::size_t var, unsigned max_var_degree, int max_terms, unsigned max_exp, int bits) {
  for (;;) {
    MultiPoly p = nonzero_poly(max_terms, max_exp, bits);
    Monomial m(vars_.size());
    m.set(var, static_cast<unsigned>(integer(1, max_var_degree)));
    BigInt c = coefficient(bits);
    if (c == 0) c = 1;
    p = p + MultiPoly::from_terms(vars_, {{m, c}});
    if (p.degree_in(var) >= 1 && p.degree_in(var) <= static_cast<int>(max_var_degree)) return p;
  }
}

bool symmetric_in_y(const MultiPoly& p) {
  const MultiPoly y = MultiPoly::variable(p.vars(), "y");
  const MultiPoly mirrored = substitute(p, "y", -y);
  return mirrored == p || mirrored == -p;
}

namespace {

// Runs `body` on each case; body returns an empty string on success.
template <typename Body>
Report run(const std::string& name, int cases, Body body) {
  Report r{name, cases, 0, {}};
  for (int k = 0; k < cases; ++k) {
    std::string failure;
    try {
      failure = body(k);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (!failure.empty()) {
      if (r.failures++ == 0) r.first_failure = "case " + std::to_string(k) + ": " + failure;
    }
  }
  return r;
}

std::string show(const MultiPoly& p) {
  std::string s = to_text(p);
  return s.size() > 120 ? s.substr(0, 117) + "..." : s;
}

}  // namespace

Report ring_laws(std::uint64_t seed, int cases) {
  PolyGen gen(seed, Variables{"x", "y", "t"});
  return run("ring laws", cases, [&](int) -> std::string {
    const MultiPoly p = gen.poly(6, 3, 40);
    const MultiPoly q = gen.poly(6, 3, 40);
    const MultiPoly r = gen.poly(6, 3, 40);
    if (!(p + q == q + p)) return "addition not commutative for " + show(p) + ", " + show(q);
    if (!((p + q) + r == p + (q + r))) return "addition not associative";
    if (!(p * q == q * p)) return "multiplication not commutative for " + show(p) + ", " + show(q);
    if (!((p * q) * r == p * (q * r))) return "multiplication not associative";
    if (!(p * (q + r) == p * q + p * r)) return "distributivity fails for " + show(p);
    if (!(p - p).is_zero()) return "p - p is nonzero";
    if (!(p * MultiPoly::constant(gen.vars(), 1) == p)) return "1 is not neutral";
    return {};
  });
}

Report leibniz_rule(std::uint64_t seed, int cases) {
  PolyGen gen(seed, Variables{"x", "y", "t"});
  return run("Leibniz rule", cases, [&](int) -> std::string {
    const MultiPoly p = gen.poly(6, 4, 30);
    const MultiPoly q = gen.poly(6, 4, 30);
    const auto v = static_cast<std::size_t>(gen.integer(0, 2));
    const MultiPoly lhs = partial_derivative(p * q, v);
    const MultiPoly rhs = partial_derivative(p, v) * q + p * partial_derivative(q, v);
    if (!(lhs == rhs)) return "d/d" + gen.vars()[v] + " of " + show(p) + " * " + show(q);
    return {};
  });
}

Report resultant_multiplicativity(std::uint64_t seed, int cases) {
  PolyGen gen(seed, Variables{"x", "y", "t"});
  return run("resultant multiplicativity", cases, [&](int) -> std::string {
    const MultiPoly f = gen.poly_in(2, 2, 3, 2);
    const MultiPoly g = gen.poly_in(2, 2, 3, 2);
    const MultiPoly h = gen.poly_in(2, 2, 3, 2);
    const MultiPoly lhs = sylvester_resultant(f * g, h, "t");
    const MultiPoly rhs = sylvester_resultant(f, h, "t") * sylvester_resultant(g, h, "t");
    if (!(lhs == rhs)) return "Res(fg, h) != Res(f, h) Res(g, h) for f = " + show(f);
    if (!(prs_resultant(f * g, h, "t") == lhs)) return "PRS and Bareiss resultants differ";
    return {};
  });
}

Report resultant_specialization(std::uint64_t seed, int cases) {
  PolyGen gen(seed, Variables{"x", "y", "t"});
  const Variables& vars = gen.vars();
  return run("resultant specialization", cases, [&](int) -> std::string {
    const MultiPoly f = gen.poly_in(2, 3, 4, 2);
    const MultiPoly g = gen.poly_in(2, 3, 4, 2);
    const MultiPoly a = MultiPoly::constant(vars, gen.integer(-5, 5));
    const MultiPoly b = MultiPoly::constant(vars, gen.integer(-5, 5));
    auto at = [&](const MultiPoly& p) { return substitute(substitute(p, "x", a), "y", b); };
    const MultiPoly fs = at(f);
    const MultiPoly gs = at(g);
    // Only specializations that keep both degrees in t are covered.
    if (fs.degree_in(2) != f.degree_in(2) || gs.degree_in(2) != g.degree_in(2)) return {};
    if (!(at(sylvester_resultant(f, g, "t")) == sylvester_resultant(fs, gs, "t"))) {
      return "specialization does not commute with Res for f = " + show(f);
    }
    return {};
  });
}

Report divide_exact_round_trip(std::uint64_t seed, int cases) {
  PolyGen gen(seed, Variables{"x", "y", "t"});
  return run("divide_exact round trip", cases, [&](int) -> std::string {
    const MultiPoly p = gen.poly(6, 3, 30);
    const MultiPoly q = gen.nonzero_poly(5, 3, 30);
    const auto quotient = divide_exact(p * q, q);
    if (!quotient || !(*quotient == p)) return "(p*q)/q != p for p = " + show(p) + ", q = " + show(q);
    // A nonconstant q never divides p*q + 1.
    if (!q.is_constant() && divide_exact(p * q + MultiPoly::constant(gen.vars(), 1), q)) {
      return "q divides p*q + 1 for q = " + show(q);
    }
    return {};
  });
}

Report trifolium_symmetry(std::uint64_t seed, int cases) {
  PolyGen gen(seed, Variables{"x", "y"});
  return run("trifolium y -> -y symmetry", cases, [&](int) -> std::string {
    const Rational a = gen.positive_rational(12, 12);
    const ImplicitCurve tri = make_trifolium(a);
    if (!symmetric_in_y(tri.poly)) return "trifolium a = " + a.to_string() + " not symmetric";
    const ImplicitCurve back = implicitize(parametrize_line_pencil(tri, {Rational(0), Rational(0)}));
    if (!symmetric_in_y(back.poly)) return "implicitized trifolium a = " + a.to_string() + " not symmetric";
    if (!equal_up_to_constant(back.poly, tri.poly)) return "implicitization of a = " + a.to_string() + " differs";
    return {};
  });
}

std::vector<Report> run_all(int cases) {
  return {ring_laws(0x5eed0001, cases),
          leibniz_rule(0x5eed0002, cases),
          resultant_multiplicativity(0x5eed0003, cases),
          resultant_specialization(0x5eed0004, cases),
          divide_exact_round_trip(0x5eed0005, cases),
          trifolium_symmetry(0x5eed0006, cases)};
}

}  // namespace trif::props

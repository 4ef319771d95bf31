#include "trif/elim/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <type_traits>

#include "modular.hpp"
#include "trif/elim/division.hpp"
#include "trif/elim/gcd.hpp"
#include "trif/elim/resultant.hpp"
#include "trif/error.hpp"

namespace trif {
namespace {

using detail::Residue;

// ---------------------------------------------------------------- ordering

// Variables are permuted so that the eliminated ones occupy [0, block).
struct GbOrder {
  std::size_t block = 0;
  bool lex = false;

  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    unsigned da = 0;
    unsigned db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  int compare(const Monomial& a, const Monomial& b) const {
    if (lex) return compare_lex(a, b);
    const int c = grevlex_range(a, b, 0, block);
    if (c != 0) return c;
    return grevlex_range(a, b, block, a.size());
  }
};

// ---------------------------------------------------------------- rings

struct IntegerRing {
  using Coeff = BigInt;
};

struct PrimeField {
  using Coeff = Residue;
  Residue p;
};

template <class Ring>
struct GTerm {
  Monomial m;
  typename Ring::Coeff c;
};

template <class Ring>
struct GPoly {
  std::vector<GTerm<Ring>> terms;
  unsigned sugar = 0;

  bool empty() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().m; }
};

// ---------------------------------------------------------------- engine

template <class Ring>
class Buchberger {
 public:
  using Coeff = typename Ring::Coeff;
  using Poly = GPoly<Ring>;
  using Term = GTerm<Ring>;

  Buchberger(Ring ring, GbOrder order, const GroebnerOptions& options)
      : ring_(ring), order_(order), options_(options) {}

  void add_input(Poly f) {
    if (f.empty()) return;
    f = reduce(std::move(f));
    if (f.empty()) return;
    normalize(f);
    insert(std::move(f));
  }

  void run() {
    while (!pairs_.empty()) {
      const std::size_t pick = select_pair();
      const Pair pair = pairs_[pick];
      pairs_[pick] = pairs_.back();
      pairs_.pop_back();
      if (++pairs_reduced_ > options_.max_pairs) {
        throw ResourceLimitError("Groebner pair budget exceeded (" + std::to_string(options_.max_pairs) + " pairs)");
      }
      Poly s = spoly(polys_[pair.i], polys_[pair.j], pair.lcm);
      s.sugar = pair.sugar;
      s = reduce(std::move(s));
      if (s.empty()) continue;
      normalize(s);
      insert(std::move(s));
    }
  }

  // Reduced basis sorted by ascending leading monomial.
  std::vector<Poly> reduced_basis() {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return order_.compare(polys_[a].lm(), polys_[b].lm()) < 0; });
    std::vector<Poly> out;
    for (const std::size_t i : idx) {
      active_[i] = false;
      Poly g = reduce(polys_[i], true);
      normalize(g);
      active_[i] = true;
      out.push_back(std::move(g));
    }
    return out;
  }

  std::size_t pairs_reduced() const { return pairs_reduced_; }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    unsigned sugar;
  };

  int cmp(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }

  void check_terms(std::size_t n) const {
    if (n > options_.max_terms) {
      throw ResourceLimitError("Groebner term budget exceeded (" + std::to_string(options_.max_terms) + " terms)");
    }
  }

  void normalize(Poly& f) const {
    if (f.empty()) return;
    if constexpr (std::is_same_v<Ring, IntegerRing>) {
      BigInt g = 0;
      for (const auto& t : f.terms) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
      }
      if (f.terms.front().c < 0) g = -g;
      if (g != 1) {
        for (auto& t : f.terms) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
      }
    } else {
      const Residue inv = detail::inv_mod(f.terms.front().c, ring_.p);
      for (auto& t : f.terms) t.c = detail::mul_mod(t.c, inv, ring_.p);
    }
  }

  const Poly* find_reducer(const Monomial& m) const {
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i] && polys_[i].lm().divides(m)) return &polys_[i];
    }
    return nullptr;
  }

  // Returns a*rest - b*mult*g[1..] merged, where `rest` are the terms of
  // `cur` after position `pos`.
  std::vector<Term> combine(const std::vector<Term>& cur, std::size_t pos, const Coeff& a, const Coeff& b,
                            const Monomial& mult, const Poly& g) const {
    std::vector<Term> out;
    out.reserve(cur.size() - pos + g.terms.size());
    std::size_t i = pos + 1;
    std::size_t j = 1;
    const auto& gt = g.terms;
    while (i < cur.size() || j < gt.size()) {
      int c;
      Monomial gm;
      if (j < gt.size()) gm = gt[j].m * mult;
      if (i >= cur.size()) {
        c = -1;
      } else if (j >= gt.size()) {
        c = 1;
      } else {
        c = cmp(cur[i].m, gm);
      }
      if constexpr (std::is_same_v<Ring, IntegerRing>) {
        if (c > 0) {
          out.push_back({cur[i].m, a == 1 ? cur[i].c : BigInt(a * cur[i].c)});
          ++i;
        } else if (c < 0) {
          out.push_back({gm, BigInt(-b * gt[j].c)});
          ++j;
        } else {
          BigInt v = a == 1 ? cur[i].c : BigInt(a * cur[i].c);
          mpz_submul(v.get_mpz_t(), b.get_mpz_t(), gt[j].c.get_mpz_t());
          if (v != 0) out.push_back({gm, std::move(v)});
          ++i;
          ++j;
        }
      } else {
        const Residue p = ring_.p;
        if (c > 0) {
          out.push_back(cur[i]);
          ++i;
        } else if (c < 0) {
          out.push_back({gm, detail::sub_mod(0, detail::mul_mod(b, gt[j].c, p), p)});
          ++j;
        } else {
          const Residue v = detail::sub_mod(cur[i].c, detail::mul_mod(b, gt[j].c, p), p);
          if (v != 0) out.push_back({gm, v});
          ++i;
          ++j;
        }
      }
    }
    check_terms(out.size());
    return out;
  }

  struct Descending {
    const GbOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
  };
  using Accumulator = std::map<Monomial, Coeff, Descending>;

  // Full reduction against the active basis. With `keep_lead` only the tail
  // is reduced; over the integers the leading term is scaled with it.
  Poly reduce(Poly f, bool keep_lead = false) const {
    std::vector<Term> done;
    Accumulator cur(Descending{&order_});
    auto first = f.terms.begin();
    if (keep_lead && first != f.terms.end()) {
      done.push_back(std::move(*first));
      ++first;
    }
    for (auto it = first; it != f.terms.end(); ++it) cur.emplace_hint(cur.end(), it->m, std::move(it->c));
    int steps_since_content = 0;
    while (!cur.empty()) {
      const auto top = cur.begin();
      const Poly* g = find_reducer(top->first);
      if (g == nullptr) {
        done.push_back({top->first, std::move(top->second)});
        cur.erase(top);
        continue;
      }
      const Monomial mult = g->lm().quotient_of(top->first);
      f.sugar = std::max(f.sugar, g->sugar + mult.degree());
      Coeff b;
      if constexpr (std::is_same_v<Ring, IntegerRing>) {
        const BigInt& lg = g->terms.front().c;
        BigInt gg;
        mpz_gcd(gg.get_mpz_t(), lg.get_mpz_t(), top->second.get_mpz_t());
        BigInt a;
        mpz_divexact(a.get_mpz_t(), lg.get_mpz_t(), gg.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), top->second.get_mpz_t(), gg.get_mpz_t());
        if (a < 0) {
          a = -a;
          b = -b;
        }
        cur.erase(top);
        if (a != 1) {
          for (auto& t : done) t.c *= a;
          for (auto& [m, c] : cur) c *= a;
        }
      } else {
        // Basis elements are monic.
        b = top->second;
        cur.erase(top);
      }
      const auto& gt = g->terms;
      for (std::size_t j = 1; j < gt.size(); ++j) {
        auto [it, inserted] = cur.try_emplace(gt[j].m * mult);
        if constexpr (std::is_same_v<Ring, IntegerRing>) {
          mpz_submul(it->second.get_mpz_t(), b.get_mpz_t(), gt[j].c.get_mpz_t());
          if (it->second == 0) cur.erase(it);
        } else {
          it->second = detail::sub_mod(it->second, detail::mul_mod(b, gt[j].c, ring_.p), ring_.p);
          if (it->second == 0) cur.erase(it);
        }
      }
      check_terms(cur.size() + done.size());
      if constexpr (std::is_same_v<Ring, IntegerRing>) {
        if (++steps_since_content >= 16) {
          remove_content(done, cur);
          steps_since_content = 0;
        }
      }
    }
    Poly out;
    out.terms = std::move(done);
    out.sugar = f.sugar;
    return out;
  }

  static void remove_content(std::vector<Term>& done, Accumulator& cur) {
    BigInt g = 0;
    for (const auto& t : done) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      if (g == 1) return;
    }
    for (const auto& [m, c] : cur) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
    if (g == 0) return;
    for (auto& t : done) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    for (auto& [m, c] : cur) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }

  Poly spoly(const Poly& f, const Poly& g, const Monomial& lcm) const {
    const Monomial mf = f.lm().quotient_of(lcm);
    const Monomial mg = g.lm().quotient_of(lcm);
    Poly lhs;
    lhs.terms.reserve(f.terms.size());
    if constexpr (std::is_same_v<Ring, IntegerRing>) {
      BigInt gg;
      mpz_gcd(gg.get_mpz_t(), f.terms.front().c.get_mpz_t(), g.terms.front().c.get_mpz_t());
      BigInt a;
      BigInt b;
      mpz_divexact(a.get_mpz_t(), g.terms.front().c.get_mpz_t(), gg.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), f.terms.front().c.get_mpz_t(), gg.get_mpz_t());
      for (const auto& t : f.terms) lhs.terms.push_back({t.m * mf, BigInt(a * t.c)});
      // lhs - b*mg*g, with the leading terms cancelling.
      Poly out;
      out.terms = combine(lhs.terms, 0, 1, b, mg, g);
      return out;
    } else {
      for (const auto& t : f.terms) lhs.terms.push_back({t.m * mf, t.c});
      Poly out;
      out.terms = combine(lhs.terms, 0, 1, 1, mg, g);
      return out;
    }
  }

  // Gebauer-Moeller update with Buchberger's first and second criteria.
  void insert(Poly h) {
    const std::size_t hi = polys_.size();
    const Monomial& lh = h.lm();
    std::size_t total = h.terms.size();
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) total += polys_[i].terms.size();
    }
    check_terms(total);

    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (!active_[i]) continue;
      const Monomial l = polys_[i].lm().lcm(lh);
      const unsigned sugar = std::max(polys_[i].sugar + polys_[i].lm().quotient_of(l).degree(),
                                      h.sugar + lh.quotient_of(l).degree());
      fresh.push_back({i, hi, l, sugar});
    }
    // Chain criterion among the new pairs.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Pair& p = fresh[a];
      const bool coprime = polys_[p.i].lm().coprime(lh);
      bool redundant = false;
      if (!coprime) {
        for (std::size_t b = 0; b < fresh.size() && !redundant; ++b) {
          if (b == a) continue;
          const Monomial& lb = fresh[b].lcm;
          if (lb.divides(p.lcm) && !(lb == p.lcm)) redundant = true;
          if (lb == p.lcm && b < a) redundant = true;
        }
      }
      if (!redundant) kept.push_back(p);
    }
    // Among pairs with equal lcm, a coprime one makes the whole class
    // unnecessary; otherwise drop coprime pairs (first criterion).
    std::vector<Pair> accepted;
    for (const Pair& p : kept) {
      bool class_has_coprime = false;
      for (const Pair& q : fresh) {
        if (q.lcm == p.lcm && polys_[q.i].lm().coprime(lh)) class_has_coprime = true;
      }
      if (!class_has_coprime) accepted.push_back(p);
    }
    // Old pairs made redundant by h.
    std::vector<Pair> survivors;
    survivors.reserve(pairs_.size() + accepted.size());
    for (const Pair& p : pairs_) {
      if (lh.divides(p.lcm)) {
        const Monomial li = polys_[p.i].lm().lcm(lh);
        const Monomial lj = polys_[p.j].lm().lcm(lh);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      survivors.push_back(p);
    }
    survivors.insert(survivors.end(), accepted.begin(), accepted.end());
    pairs_ = std::move(survivors);

    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i] && lh.divides(polys_[i].lm())) active_[i] = false;
    }
    polys_.push_back(std::move(h));
    active_.push_back(true);
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar < b.sugar || (a.sugar == b.sugar && cmp(a.lcm, b.lcm) < 0)) {
        best = k;
      }
    }
    return best;
  }

  Ring ring_;
  GbOrder order_;
  GroebnerOptions options_;
  std::vector<Poly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::size_t pairs_reduced_ = 0;
};

// ---------------------------------------------------------------- conversion

struct Layout {
  Variables vars;
  std::vector<std::size_t> to_internal;  // original index -> permuted index
  std::vector<std::size_t> to_original;  // permuted index -> original index
  GbOrder order;
};

Layout make_layout(const std::vector<MultiPoly>& system, const std::vector<std::string>& eliminate,
                   EliminationOrder kind) {
  if (system.empty()) throw DomainError("empty polynomial system");
  const Variables& vars = system.front().vars();
  for (const auto& p : system) {
    if (!(p.vars() == vars)) throw DomainError("variable-set mismatch");
  }
  Layout l;
  l.vars = vars;
  l.to_internal.assign(vars.size(), 0);
  std::vector<bool> taken(vars.size(), false);
  for (const auto& name : eliminate) {
    const std::size_t i = vars.require(name);
    if (taken[i]) throw DomainError("variable listed twice for elimination");
    taken[i] = true;
    l.to_original.push_back(i);
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!taken[i]) l.to_original.push_back(i);
  }
  for (std::size_t k = 0; k < l.to_original.size(); ++k) l.to_internal[l.to_original[k]] = k;
  l.order.block = eliminate.size();
  l.order.lex = kind == EliminationOrder::lex;
  return l;
}

Monomial permute(const Monomial& m, const std::vector<std::size_t>& map) {
  Monomial out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out.set(map[i], m[i]);
  return out;
}

template <class Ring>
GPoly<Ring> to_internal(const MultiPoly& p, const Layout& l, const Ring& ring) {
  GPoly<Ring> g;
  for (const auto& t : p.terms()) {
    if constexpr (std::is_same_v<Ring, IntegerRing>) {
      g.terms.push_back({permute(t.mono, l.to_internal), t.coeff});
    } else {
      const Residue c = detail::reduce(t.coeff, ring.p);
      if (c != 0) g.terms.push_back({permute(t.mono, l.to_internal), c});
    }
  }
  std::sort(g.terms.begin(), g.terms.end(),
            [&](const GTerm<Ring>& a, const GTerm<Ring>& b) { return l.order.compare(a.m, b.m) > 0; });
  g.sugar = static_cast<unsigned>(std::max(p.total_degree(), 0));
  return g;
}

MultiPoly from_internal(const GPoly<IntegerRing>& g, const Layout& l) {
  std::vector<Term> terms;
  terms.reserve(g.terms.size());
  for (const auto& t : g.terms) terms.push_back({permute(t.m, l.to_original), t.c});
  return MultiPoly::from_terms(l.vars, std::move(terms));
}

bool free_of_block(const Monomial& m, std::size_t block) {
  for (std::size_t i = 0; i < block; ++i) {
    if (m[i] != 0) return false;
  }
  return true;
}

// `eliminants` must already live over the retained variables.
EliminationResult finish(std::vector<MultiPoly> eliminants, const std::vector<std::string>& eliminate) {
  EliminationResult r;
  r.method = EliminationMethod::groebner;
  r.eliminated_vars = eliminate;
  r.eliminants = eliminants;
  if (eliminants.empty()) throw DomainError("elimination ideal is zero");
  auto lowest = std::min_element(eliminants.begin(), eliminants.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return a.total_degree() < b.total_degree();
  });
  r.principal = eliminants.size() == 1;
  r.raw = *lowest;
  r.generator = r.raw.is_constant() ? primitive_part(r.raw) : squarefree_part(r.raw);
  r.squarefree = true;
  return r;
}

// ---------------------------------------------------------------- modular

struct ModImage {
  std::vector<Monomial> signature;                      // leading monomials
  std::vector<std::vector<GTerm<PrimeField>>> elements;  // monic
};

std::optional<ModImage> modular_image(const std::vector<MultiPoly>& system, const Layout& l, Residue p,
                                      const GroebnerOptions& options, std::size_t& pairs) {
  const PrimeField field{p};
  Buchberger<PrimeField> engine(field, l.order, options);
  for (const auto& f : system) {
    auto g = to_internal(f, l, field);
    const auto full = to_internal(f, l, IntegerRing{});
    // Unlucky when reduction mod p changes a leading monomial.
    if (!f.is_zero() && (g.empty() || !(g.lm() == full.lm()))) return std::nullopt;
    engine.add_input(std::move(g));
  }
  engine.run();
  pairs += engine.pairs_reduced();
  ModImage img;
  for (auto& g : engine.reduced_basis()) {
    if (!free_of_block(g.lm(), l.order.block)) continue;
    img.signature.push_back(g.lm());
    img.elements.push_back(std::move(g.terms));
  }
  return img;
}

struct Lift {
  std::vector<Monomial> signature;
  std::vector<std::map<Monomial, BigInt, bool (*)(const Monomial&, const Monomial&)>> residues;
  BigInt modulus = 1;
  std::size_t votes = 0;
  std::optional<std::vector<std::vector<std::pair<Monomial, mpq_class>>>> last;
};

bool mono_less(const Monomial& a, const Monomial& b) { return compare_lex(a, b) < 0; }

void crt_accumulate(Lift& lift, const ModImage& img, Residue p) {
  if (lift.votes == 0) {
    lift.signature = img.signature;
    lift.residues.assign(img.elements.size(), decltype(lift.residues)::value_type(mono_less));
  }
  const BigInt pp(static_cast<unsigned long>(p));
  BigInt minv;  // modulus^-1 mod p
  BigInt mmod = lift.modulus % pp;
  mpz_invert(minv.get_mpz_t(), mmod.get_mpz_t(), pp.get_mpz_t());
  for (std::size_t e = 0; e < img.elements.size(); ++e) {
    auto& res = lift.residues[e];
    std::map<Monomial, Residue, bool (*)(const Monomial&, const Monomial&)> now(mono_less);
    for (const auto& t : img.elements[e]) now[t.m] = t.c;
    for (const auto& [m, c] : now) res.try_emplace(m, 0);
    for (auto& [m, acc] : res) {
      auto it = now.find(m);
      const Residue target = it == now.end() ? 0 : it->second;
      // acc + modulus * ((target - acc) * minv mod p)
      BigInt diff = BigInt(static_cast<unsigned long>(target)) - acc;
      BigInt k = (diff % pp) * minv % pp;
      if (k < 0) k += pp;
      acc += lift.modulus * k;
    }
  }
  lift.modulus *= pp;
  ++lift.votes;
}

std::optional<std::vector<std::vector<std::pair<Monomial, mpq_class>>>> try_reconstruct(const Lift& lift) {
  std::vector<std::vector<std::pair<Monomial, mpq_class>>> out;
  for (const auto& res : lift.residues) {
    std::vector<std::pair<Monomial, mpq_class>> elem;
    for (const auto& [m, acc] : res) {
      mpq_class q;
      if (!detail::rational_reconstruct(acc, lift.modulus, q)) return std::nullopt;
      if (q != 0) elem.emplace_back(m, q);
    }
    out.push_back(std::move(elem));
  }
  return out;
}

MultiPoly clear_denominators(const std::vector<std::pair<Monomial, mpq_class>>& elem, const Layout& l) {
  BigInt den = 1;
  for (const auto& [m, q] : elem) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Term> terms;
  for (const auto& [m, q] : elem) {
    BigInt c = q.get_num() * (den / q.get_den());
    terms.push_back({permute(m, l.to_original), c});
  }
  return primitive_part(MultiPoly::from_terms(l.vars, std::move(terms)));
}

// Exact certificate where one is cheap: a single eliminated variable and
// two inputs of positive degree in it, whose resultant lies in the ideal.
bool certify(const std::vector<MultiPoly>& system, const std::vector<std::string>& eliminate,
             const std::vector<MultiPoly>& candidates) {
  if (eliminate.size() != 1 || system.size() < 2 || candidates.size() != 1) return true;
  const std::size_t v = system[0].vars().require(eliminate[0]);
  if (system[0].degree_in(v) < 1 || system[1].degree_in(v) < 1) return true;
  const MultiPoly res = sylvester_resultant(system[0], system[1], eliminate[0]);
  if (res.is_zero()) return true;
  return divides_up_to_constant(candidates.front(), res);
}

struct Eliminants {
  std::vector<MultiPoly> elements;  // over the system's variables
  std::size_t pairs = 0;
  std::size_t primes = 0;
};

Eliminants modular_eliminants(const std::vector<MultiPoly>& system, const std::vector<std::string>& eliminate,
                              const GroebnerOptions& options) {
  const Layout l = make_layout(system, eliminate, options.order);
  std::vector<Lift> lifts;
  std::size_t pairs = 0;
  std::size_t used = 0;
  for (const Residue p : detail::word_primes(options.max_primes)) {
    auto img = modular_image(system, l, p, options, pairs);
    if (!img) continue;
    ++used;
    auto it = std::find_if(lifts.begin(), lifts.end(), [&](const Lift& f) { return f.signature == img->signature; });
    if (it == lifts.end()) {
      lifts.emplace_back();
      it = std::prev(lifts.end());
    }
    crt_accumulate(*it, *img, p);
    const auto leader = std::max_element(lifts.begin(), lifts.end(),
                                         [](const Lift& a, const Lift& b) { return a.votes < b.votes; });
    if (leader != it) continue;
    auto rec = try_reconstruct(*it);
    if (!rec) {
      it->last.reset();
      continue;
    }
    if (it->last && *it->last == *rec) {
      std::vector<MultiPoly> elems;
      for (const auto& e : *rec) elems.push_back(clear_denominators(e, l));
      if (!certify(system, eliminate, elems)) {
        it->last.reset();
        continue;
      }
      return {std::move(elems), pairs, used};
    }
    it->last = std::move(rec);
  }
  throw ResourceLimitError("modular elimination did not stabilise within " + std::to_string(options.max_primes) +
                           " primes");
}

Eliminants direct_eliminants(const std::vector<MultiPoly>& system, const std::vector<std::string>& eliminate,
                             const GroebnerOptions& options) {
  const Layout l = make_layout(system, eliminate, options.order);
  Buchberger<IntegerRing> engine(IntegerRing{}, l.order, options);
  for (const auto& f : system) engine.add_input(to_internal(f, l, IntegerRing{}));
  engine.run();
  Eliminants out;
  for (const auto& g : engine.reduced_basis()) {
    if (free_of_block(g.lm(), l.order.block)) out.elements.push_back(from_internal(g, l));
  }
  out.pairs = engine.pairs_reduced();
  return out;
}

MultiPoly homogenize(const MultiPoly& f, const Variables& hvars, const std::string& h) {
  const int d = f.total_degree();
  const std::size_t ih = hvars.require(h);
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(hvars.size());
    for (std::size_t i = 0; i < f.vars().size(); ++i) m.set(hvars.require(f.vars()[i]), t.mono[i]);
    m.set(ih, static_cast<unsigned>(d) - t.mono.degree());
    terms.push_back({m, t.coeff});
  }
  return MultiPoly::from_terms(hvars, std::move(terms));
}

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0' || n == 0) return fallback;
  return static_cast<std::size_t>(n);
}

}  // namespace

GroebnerOptions groebner_options_from_env(GroebnerOptions base) {
  base.max_terms = env_size("TRIF_MAX_TERMS", base.max_terms);
  base.max_pairs = env_size("TRIF_MAX_PAIRS", base.max_pairs);
  return base;
}

GroebnerBasis groebner_basis(const std::vector<MultiPoly>& system, const std::vector<std::string>& eliminate,
                             const GroebnerOptions& options) {
  const Layout l = make_layout(system, eliminate, options.order);
  Buchberger<IntegerRing> engine(IntegerRing{}, l.order, options);
  for (const auto& f : system) engine.add_input(to_internal(f, l, IntegerRing{}));
  engine.run();
  GroebnerBasis out;
  out.vars = l.vars;
  for (const auto& g : engine.reduced_basis()) out.elements.push_back(from_internal(g, l));
  out.pairs_reduced = engine.pairs_reduced();
  return out;
}

EliminationResult groebner_eliminate(const std::vector<MultiPoly>& system, const std::vector<std::string>& eliminate,
                                     const GroebnerOptions& options) {
  if (system.empty()) throw DomainError("empty polynomial system");
  const Variables& vars = system.front().vars();
  if (eliminate.empty() || eliminate.size() >= vars.size()) {
    throw DomainError("eliminated variables must form a nonempty strict subset");
  }
  for (const auto& name : eliminate) vars.require(name);

  if (!options.homogenize) {
    Eliminants e = options.modular ? modular_eliminants(system, eliminate, options)
                                   : direct_eliminants(system, eliminate, options);
    for (auto& g : e.elements) g = project_out(g, eliminate);
    EliminationResult r = finish(std::move(e.elements), eliminate);
    r.pairs_reduced = e.pairs;
    r.primes_used = e.primes;
    return r;
  }

  // Homogenize, eliminate, then set the extra variable back to 1. The
  // dehomogenized eliminants generate the elimination ideal of the original
  // system but need not form a basis of it, so they are completed by a second
  // (small) run over the retained variables.
  std::string h = "h";
  while (vars.index_of(h)) h += "_";
  std::vector<std::string> names = vars.names();
  names.push_back(h);
  const Variables hvars(names);
  std::vector<MultiPoly> hsys;
  hsys.reserve(system.size());
  for (const auto& f : system) hsys.push_back(homogenize(f, hvars, h));

  Eliminants e = options.modular ? modular_eliminants(hsys, eliminate, options)
                                 : direct_eliminants(hsys, eliminate, options);
  std::vector<MultiPoly> dehom;
  for (const auto& g : e.elements) {
    MultiPoly d = project_out(substitute(g, h, MultiPoly::constant(hvars, 1)), {h});
    d = project_out(d.with_variables(vars), eliminate);
    if (!d.is_zero()) dehom.push_back(primitive_part(d));
  }
  if (dehom.empty()) throw DomainError("elimination ideal is zero");
  GroebnerOptions plain = options;
  plain.order = EliminationOrder::block;
  const Layout l = make_layout(dehom, {}, plain.order);
  Buchberger<IntegerRing> engine(IntegerRing{}, l.order, plain);
  for (const auto& f : dehom) engine.add_input(to_internal(f, l, IntegerRing{}));
  engine.run();
  std::vector<MultiPoly> basis;
  for (const auto& g : engine.reduced_basis()) basis.push_back(from_internal(g, l));

  EliminationResult r = finish(std::move(basis), eliminate);
  r.pairs_reduced = e.pairs + engine.pairs_reduced();
  r.primes_used = e.primes;
  return r;
}

}  // namespace trif

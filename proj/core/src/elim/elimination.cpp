#include "trif/elim/elimination.hpp"

#include <algorithm>
#include <limits>

#include "trif/elim/division.hpp"
#include "trif/elim/gcd.hpp"
#include "trif/elim/resultant.hpp"
#include "trif/error.hpp"
#include "trif/polycore/poly_io.hpp"

namespace trif {

std::string to_string(EliminationMethod m) {
  switch (m) {
    case EliminationMethod::resultant:
      return "resultant";
    case EliminationMethod::groebner:
      return "groebner";
  }
  return "unknown";
}

MultiPoly project_out(const MultiPoly& p, const std::vector<std::string>& eliminated) {
  std::vector<std::string> keep;
  for (const auto& name : p.vars().names()) {
    if (std::find(eliminated.begin(), eliminated.end(), name) == eliminated.end()) keep.push_back(name);
  }
  for (const auto& name : eliminated) {
    if (p.depends_on(p.vars().require(name))) throw DomainError("polynomial still depends on " + name);
  }
  return p.with_variables(Variables(std::move(keep)));
}

EliminationResult resultant_eliminate(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  const MultiPoly res = sylvester_resultant(p, q, var);
  if (res.is_zero()) throw DomainError("resultant vanishes identically: inputs share a factor in " + var);
  EliminationResult r;
  r.method = EliminationMethod::resultant;
  r.eliminated_vars = {var};
  r.raw = project_out(primitive_part(res), r.eliminated_vars);
  r.generator = r.raw.is_constant() ? r.raw : squarefree_part(r.raw);
  r.principal = true;
  r.squarefree = true;
  return r;
}

nlohmann::json to_json(const EliminationResult& r) {
  nlohmann::json j;
  j["method"] = to_string(r.method);
  j["eliminated_vars"] = r.eliminated_vars;
  j["generator"] = to_json(r.generator);
  j["generator_text"] = to_text(r.generator);
  j["degree"] = r.generator.total_degree();
  j["raw_degree"] = r.raw.total_degree();
  j["principal"] = r.principal;
  j["squarefree"] = r.squarefree;
  auto removed = nlohmann::json::array();
  for (const auto& f : r.spurious_removed) removed.push_back(to_text(f));
  j["spurious_removed"] = removed;
  if (r.method == EliminationMethod::groebner) {
    j["eliminants"] = r.eliminants.size();
    j["pairs_reduced"] = r.pairs_reduced;
    if (r.primes_used > 0) j["primes_used"] = r.primes_used;
  }
  return j;
}

std::vector<MultiPoly> default_circle_candidates(const Variables& vars) {
  const MultiPoly x = MultiPoly::variable(vars, "x");
  const MultiPoly y = MultiPoly::variable(vars, "y");
  const MultiPoly rho = x * x + y * y;
  std::vector<MultiPoly> out;
  for (const long c : {1L, 4L, 16L}) {
    for (long k = -4; k <= 64; ++k) {
      const MultiPoly f = primitive_part(BigInt(c) * rho - MultiPoly::constant(vars, k));
      if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
  }
  return out;
}

namespace {

// One splitting pass; returns true when some piece was split.
bool split_once(std::vector<MultiPoly>& pieces, const std::vector<MultiPoly>& hints) {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const MultiPoly f = pieces[i];
    if (f.is_constant()) continue;
    for (std::size_t v = 0; v < f.vars().size(); ++v) {
      if (!f.depends_on(v)) continue;
      const MultiPoly c = content_in(f, v);
      if (c.is_constant()) continue;
      pieces[i] = primitive_part(*divide_exact(f, c));
      pieces.push_back(c);
      return true;
    }
    for (const auto& h : hints) {
      if (h.is_constant() || h.total_degree() >= f.total_degree()) continue;
      const auto q = divide_exact(f, h);
      if (!q) continue;
      pieces[i] = primitive_part(*q);
      pieces.push_back(h);
      return true;
    }
  }
  return false;
}

}  // namespace

FactorSplit filter_spurious_factors(const MultiPoly& candidate,
                                    const std::vector<std::pair<double, double>>& oracle_points,
                                    double keep_threshold, const std::vector<MultiPoly>& hints) {
  if (candidate.is_zero() || candidate.is_constant()) throw DomainError("candidate must be nonconstant");
  const Variables& vars = candidate.vars();
  const std::size_t ix = vars.require("x");
  const std::size_t iy = vars.require("y");
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (v != ix && v != iy && candidate.depends_on(v)) throw DomainError("candidate must live over {x, y}");
  }
  std::vector<MultiPoly> prepared;
  for (const auto& h : hints) {
    if (h.is_zero() || h.is_constant()) continue;
    prepared.push_back(primitive_part(h.with_variables(vars)));
  }

  std::vector<MultiPoly> pieces{primitive_part(candidate)};
  while (split_once(pieces, prepared)) {
  }

  FactorSplit out;
  out.kept = MultiPoly::constant(vars, 1);
  bool any = false;
  std::vector<double> values(vars.size(), 0.0);
  for (const auto& f : pieces) {
    if (f.is_constant()) continue;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [px, py] : oracle_points) {
      values[ix] = px;
      values[iy] = py;
      best = std::min(best, scaled_residual(f, values));
    }
    if (best <= keep_threshold) {
      out.kept = out.kept * f;
      any = true;
    } else {
      out.removed.push_back(f);
    }
  }
  if (!any) throw DomainError("no factor of the candidate meets the oracle samples");
  out.kept = sign_normalized(out.kept);
  return out;
}

FactorSplit filter_spurious_factors(const MultiPoly& candidate,
                                    const std::vector<std::pair<double, double>>& oracle_points,
                                    double keep_threshold) {
  return filter_spurious_factors(candidate, oracle_points, keep_threshold,
                                 default_circle_candidates(candidate.vars()));
}

}  // namespace trif

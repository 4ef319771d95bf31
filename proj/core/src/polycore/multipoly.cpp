#include "trif/polycore/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "trif/error.hpp"

namespace trif {
namespace {

bool grevlex_greater(const Term& a, const Term& b) { return compare_grevlex(a.mono, b.mono) > 0; }

void require_same_vars(const MultiPoly& p, const MultiPoly& q) {
  if (!(p.vars() == q.vars())) throw DomainError("variable-set mismatch");
}

// Merge of two canonical term lists: p + sign*q.
std::vector<Term> merge(const std::vector<Term>& p, const std::vector<Term>& q, int sign) {
  std::vector<Term> out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < p.size() && j < q.size()) {
    const int c = compare_grevlex(p[i].mono, q[j].mono);
    if (c > 0) {
      out.push_back(p[i++]);
    } else if (c < 0) {
      out.push_back({q[j].mono, sign > 0 ? q[j].coeff : BigInt(-q[j].coeff)});
      ++j;
    } else {
      BigInt s = sign > 0 ? BigInt(p[i].coeff + q[j].coeff) : BigInt(p[i].coeff - q[j].coeff);
      if (s != 0) out.push_back({p[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < p.size(); ++i) out.push_back(p[i]);
  for (; j < q.size(); ++j) out.push_back({q[j].mono, sign > 0 ? q[j].coeff : BigInt(-q[j].coeff)});
  return out;
}

// Neumaier compensated sum.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

double monomial_value(const Monomial& m, std::span<const double> values) {
  double v = 1.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) v *= std::pow(values[i], static_cast<int>(m[i]));
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------- Variables

Variables::Variables() : names_(std::make_shared<const std::vector<std::string>>()) {}

Variables::Variables(std::initializer_list<std::string> names)
    : Variables(std::vector<std::string>(names)) {}

Variables::Variables(std::vector<std::string> names) {
  if (names.size() > kMaxVariables) throw DomainError("too many variables");
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw DomainError("duplicate variable '" + names[i] + "'");
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> Variables::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Variables::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw DomainError("unknown variable '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::from_terms(Variables vars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.mono.size() != vars.size()) throw DomainError("monomial length differs from variable count");
  }
  std::sort(terms.begin(), terms.end(), grevlex_greater);
  MultiPoly p(std::move(vars));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

MultiPoly MultiPoly::constant(Variables vars, const BigInt& c) {
  MultiPoly p(vars);
  if (c != 0) p.terms_.push_back({Monomial(vars.size()), c});
  return p;
}

MultiPoly MultiPoly::variable(Variables vars, std::string_view name) {
  const std::size_t i = vars.require(name);
  Monomial m(vars.size());
  m.set(i, 1);
  MultiPoly p(std::move(vars));
  p.terms_.push_back({m, BigInt(1)});
  return p;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree()); }

int MultiPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return static_cast<int>(d);
}

MultiPoly MultiPoly::with_variables(const Variables& target) const {
  if (target == vars_) return *this;
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto j = target.index_of(vars_[i]);
    if (!j) {
      if (depends_on(i)) throw DomainError("variable '" + vars_[i] + "' missing from target variable set");
      map[i] = kMaxVariables;
    } else {
      map[i] = *j;
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (map[i] != kMaxVariables) m.set(map[i], t.mono[i]);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
  require_same_vars(p, q);
  MultiPoly r(p.vars_);
  r.terms_ = merge(p.terms_, q.terms_, 1);
  return r;
}

MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) {
  require_same_vars(p, q);
  MultiPoly r(p.vars_);
  r.terms_ = merge(p.terms_, q.terms_, -1);
  return r;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  require_same_vars(p, q);
  MultiPoly r(p.vars_);
  if (p.is_zero() || q.is_zero()) return r;
  if (p.terms_.size() == 1) return q.mul_term(p.terms_[0].mono, p.terms_[0].coeff);
  if (q.terms_.size() == 1) return p.mul_term(q.terms_[0].mono, q.terms_[0].coeff);

  std::unordered_map<Monomial, BigInt, MonomialHash> acc;
  acc.reserve(p.terms_.size() * q.terms_.size() / 2 + 16);
  for (const auto& a : p.terms_) {
    for (const auto& b : q.terms_) {
      BigInt& slot = acc[a.mono * b.mono];
      mpz_addmul(slot.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), grevlex_greater);
  return r;
}

MultiPoly operator*(const BigInt& c, const MultiPoly& p) {
  MultiPoly r(p.vars_);
  if (c == 0) return r;
  r.terms_ = p.terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const BigInt& c) const {
  MultiPoly r(vars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves grevlex order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const MultiPoly& p, const MultiPoly& q) {
  if (!(p.vars_ == q.vars_) || p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < p.terms_.size(); ++i) {
    if (!(p.terms_[i].mono == q.terms_[i].mono) || p.terms_[i].coeff != q.terms_[i].coeff) return false;
  }
  return true;
}

BigInt MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return compare_grevlex(t.mono, key) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

// ---------------------------------------------------------------- calculus

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var) {
  return partial_derivative(p, p.vars().require(var));
}

MultiPoly partial_derivative(const MultiPoly& p, std::size_t var) {
  if (var >= p.vars().size()) throw DomainError("unknown variable index");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    const unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return MultiPoly::from_terms(p.vars(), std::move(out));
}

MultiPoly substitute(const MultiPoly& p, std::string_view var, const MultiPoly& replacement) {
  const std::size_t v = p.vars().require(var);
  require_same_vars(p, replacement);
  const int n = p.degree_in(v);
  if (n <= 0) return p;

  // p = sum_k c_k * var^k with c_k free of var; Horner in the replacement.
  std::vector<std::vector<Term>> by_power(static_cast<std::size_t>(n) + 1);
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    const unsigned e = m[v];
    m.set(v, 0);
    by_power[e].push_back({m, t.coeff});
  }
  MultiPoly acc(p.vars());
  for (int k = n; k >= 0; --k) {
    acc = acc * replacement + MultiPoly::from_terms(p.vars(), std::move(by_power[static_cast<std::size_t>(k)]));
  }
  return acc;
}

// ---------------------------------------------------------------- evaluation

Rational evaluate_exact(const MultiPoly& p, const std::map<std::string, Rational>& point) {
  std::vector<Rational> values(p.vars().size());
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    auto it = point.find(p.vars()[i]);
    if (it == point.end()) {
      if (p.depends_on(i)) throw DomainError("missing binding for variable '" + p.vars()[i] + "'");
      continue;
    }
    values[i] = it->second;
  }
  return evaluate_exact(p, values);
}

Rational evaluate_exact(const MultiPoly& p, std::span<const Rational> values) {
  if (values.size() != p.vars().size()) throw DomainError("point dimension differs from variable count");
  // Power tables per variable; each monomial is a product of cached powers.
  std::vector<std::vector<mpq_class>> powers(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int d = p.degree_in(i);
    powers[i].resize(static_cast<std::size_t>(std::max(d, 0)) + 1);
    powers[i][0] = 1;
    for (int k = 1; k <= d; ++k) powers[i][static_cast<std::size_t>(k)] = powers[i][static_cast<std::size_t>(k) - 1] * values[i].raw();
  }
  mpq_class sum = 0;
  mpq_class prod;
  for (const auto& t : p.terms()) {
    prod = t.coeff;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (t.mono[i] != 0) prod *= powers[i][t.mono[i]];
    }
    sum += prod;
  }
  return Rational(sum);
}

double evaluate_float(const MultiPoly& p, const std::map<std::string, double>& point) {
  std::vector<double> values(p.vars().size(), 0.0);
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    auto it = point.find(p.vars()[i]);
    if (it == point.end()) {
      if (p.depends_on(i)) throw DomainError("missing binding for variable '" + p.vars()[i] + "'");
      continue;
    }
    values[i] = it->second;
  }
  return evaluate_float(p, values);
}

double evaluate_float(const MultiPoly& p, std::span<const double> values) {
  if (values.size() != p.vars().size()) throw DomainError("point dimension differs from variable count");
  CompensatedSum s;
  for (const auto& t : p.terms()) s.add(t.coeff.get_d() * monomial_value(t.mono, values));
  const double v = s.value();
  if (!std::isfinite(v)) throw NonFiniteError("non-finite polynomial value");
  return v;
}

double scaled_residual(const MultiPoly& p, std::span<const double> values) {
  if (values.size() != p.vars().size()) throw DomainError("point dimension differs from variable count");
  CompensatedSum s;
  double scale = 0.0;
  for (const auto& t : p.terms()) {
    const double v = t.coeff.get_d() * monomial_value(t.mono, values);
    s.add(v);
    scale += std::fabs(v);
  }
  const double v = s.value();
  if (!std::isfinite(v) || !std::isfinite(scale)) throw NonFiniteError("non-finite polynomial value");
  return scale == 0.0 ? 0.0 : std::fabs(v) / scale;
}

// ---------------------------------------------------------------- content

ContentSplit content_and_primitive(const MultiPoly& p) {
  if (p.is_zero()) throw DomainError("content of the zero polynomial");
  BigInt g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  const bool negate = p.leading_coefficient() < 0;
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    BigInt c;
    mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
    if (negate) c = -c;
    out.push_back({t.mono, std::move(c)});
  }
  // Order is unchanged, so the canonical form is preserved.
  MultiPoly prim = MultiPoly::from_terms(p.vars(), std::move(out));
  return {g, std::move(prim)};
}

MultiPoly primitive_part(const MultiPoly& p) { return content_and_primitive(p).primitive; }

MultiPoly sign_normalized(const MultiPoly& p) {
  if (p.is_zero() || p.leading_coefficient() > 0) return p;
  return -p;
}

}  // namespace trif

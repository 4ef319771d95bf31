#include "trif/polycore/monomial.hpp"

#include <algorithm>
#include <limits>

#include "trif/error.hpp"

namespace trif {
namespace {

std::uint16_t checked_exponent(unsigned long e) {
  if (e > std::numeric_limits<std::uint16_t>::max()) {
    throw ResourceLimitError("monomial exponent exceeds 65535");
  }
  return static_cast<std::uint16_t>(e);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables) throw DomainError("too many variables for a monomial");
}

Monomial::Monomial(std::initializer_list<unsigned> exps)
    : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const unsigned> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    exps_[i] = checked_exponent(exps[i]);
    degree_ += exps_[i];
  }
}

void Monomial::set(std::size_t i, unsigned e) {
  degree_ -= exps_[i];
  exps_[i] = checked_exponent(e);
  degree_ += exps_[i];
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) q.exps_[i] = static_cast<std::uint16_t>(other.exps_[i] - exps_[i]);
  q.degree_ = other.degree_ - degree_;
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    l.exps_[i] = std::max(exps_[i], other.exps_[i]);
    l.degree_ += l.exps_[i];
  }
  return l;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    m.exps_[i] = checked_exponent(static_cast<unsigned long>(a.exps_[i]) + b.exps_[i]);
  }
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exps_[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

int compare_grevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int compare_lex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace trif

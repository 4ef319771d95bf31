#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trif/polycore/monomial.hpp"
#include "trif/polycore/rational.hpp"

namespace trif {

/// Ordered, immutable list of variable names shared between polynomials of
/// one computation context. Equality is by content.
class Variables {
 public:
  Variables();
  Variables(std::initializer_list<std::string> names);
  explicit Variables(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  // Throws DomainError for an unknown variable.
  std::size_t require(std::string_view name) const;

  friend bool operator==(const Variables& a, const Variables& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

struct Term {
  Monomial mono;
  BigInt coeff;
};

/// Sparse multivariate polynomial with integer coefficients.
///
/// Terms are kept in canonical form: no zero coefficients, strictly
/// descending under graded reverse lexicographic order. Two polynomials over
/// the same variables are equal iff their term sequences are identical.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(Variables vars) : vars_(std::move(vars)) {}

  // Sorts, merges duplicate monomials and drops zeros.
  static MultiPoly from_terms(Variables vars, std::vector<Term> terms);
  static MultiPoly constant(Variables vars, const BigInt& c);
  static MultiPoly variable(Variables vars, std::string_view name);

  const Variables& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading_term() const { return terms_.front(); }
  const BigInt& leading_coefficient() const { return terms_.front().coeff; }

  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  /// Same polynomial re-expressed over another variable list. Every variable
  /// the polynomial depends on must exist in `target`.
  MultiPoly with_variables(const Variables& target) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(const BigInt& c, const MultiPoly& p);
  MultiPoly mul_term(const Monomial& m, const BigInt& c) const;
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& p, const MultiPoly& q);

  // Coefficient of a monomial (zero when absent).
  BigInt coefficient(const Monomial& m) const;

 private:
  Variables vars_;
  std::vector<Term> terms_;
};

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var);
MultiPoly partial_derivative(const MultiPoly& p, std::size_t var);

/// Exact composition p|_{var := replacement}. `replacement` must live over
/// the same variable list.
MultiPoly substitute(const MultiPoly& p, std::string_view var, const MultiPoly& replacement);

/// Exact value at a point; every variable of p must be bound.
Rational evaluate_exact(const MultiPoly& p, const std::map<std::string, Rational>& point);
// Positional form: values[i] binds vars()[i].
Rational evaluate_exact(const MultiPoly& p, std::span<const Rational> values);

/// Approximate value with compensated (Neumaier) summation over the terms.
/// Throws NonFiniteError when the result is inf or nan.
double evaluate_float(const MultiPoly& p, const std::map<std::string, double>& point);
double evaluate_float(const MultiPoly& p, std::span<const double> values);

/// |p(pt)| divided by the sum of absolute term magnitudes at pt (0 when all
/// terms vanish). The scale-free residual used by all numeric checks.
double scaled_residual(const MultiPoly& p, std::span<const double> values);

struct ContentSplit {
  BigInt content;       // positive
  MultiPoly primitive;  // content 1, positive leading coefficient
};

/// Throws DomainError for the zero polynomial.
ContentSplit content_and_primitive(const MultiPoly& p);
MultiPoly primitive_part(const MultiPoly& p);

// Positive leading coefficient (zero stays zero).
MultiPoly sign_normalized(const MultiPoly& p);

}  // namespace trif

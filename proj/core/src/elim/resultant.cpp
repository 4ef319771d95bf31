#include "trif/elim/resultant.hpp"

#include "trif/elim/division.hpp"
#include "trif/error.hpp"
#include "univariate.hpp"

namespace trif {
namespace {

struct Prepared {
  detail::UniView a;
  detail::UniView b;
};

Prepared prepare(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  if (!(p.vars() == q.vars())) throw DomainError("variable-set mismatch");
  const std::size_t v = p.vars().require(var);
  Prepared out{detail::to_univariate(p, v), detail::to_univariate(q, v)};
  if (out.a.degree() < 1 || out.b.degree() < 1) {
    throw DomainError("resultant needs positive degree in '" + std::string(var) + "' for both inputs");
  }
  return out;
}

}  // namespace

MultiPoly sylvester_resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  const auto [a, b] = prepare(p, q, var);
  const auto m = static_cast<std::size_t>(a.degree());
  const auto n = static_cast<std::size_t>(b.degree());
  const std::size_t size = m + n;
  const Variables& vars = p.vars();

  // Rows 0..n-1 hold shifted coefficients of p (highest first), rows
  // n..n+m-1 those of q.
  std::vector<std::vector<MultiPoly>> mat(size, std::vector<MultiPoly>(size, MultiPoly(vars)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= m; ++k) mat[i][i + k] = a.coeffs[m - k];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k <= n; ++k) mat[n + i][i + k] = b.coeffs[n - k];
  }

  int sign = 1;
  MultiPoly prev = MultiPoly::constant(vars, 1);
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (mat[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < size && mat[r][k].is_zero()) ++r;
      if (r == size) return MultiPoly(vars);
      std::swap(mat[k], mat[r]);
      sign = -sign;
    }
    const MultiPoly& pivot = mat[k][k];
    for (std::size_t i = k + 1; i < size; ++i) {
      const MultiPoly& lead = mat[i][k];
      for (std::size_t j = k + 1; j < size; ++j) {
        MultiPoly num = pivot * mat[i][j];
        if (!lead.is_zero() && !mat[k][j].is_zero()) num = num - lead * mat[k][j];
        mat[i][j] = detail::div_exact_or_throw(num, prev);
      }
      mat[i][k] = MultiPoly(vars);
    }
    prev = pivot;
  }
  const MultiPoly& det = mat[size - 1][size - 1];
  return sign > 0 ? det : -det;
}

MultiPoly prs_resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  const auto [a, b] = prepare(p, q, var);
  return detail::subresultant_resultant(a, b, p.vars());
}

}  // namespace trif

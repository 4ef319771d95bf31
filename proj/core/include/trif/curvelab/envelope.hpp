#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trif/curvelab/curve.hpp"
#include "trif/curvelab/parametrization.hpp"
#include "trif/elim/elimination.hpp"
#include "trif/elim/groebner.hpp"

namespace trif {

/// Circles of fixed radius centred along a rational curve.
struct CircleFamily {
  RationalParametrization centers;
  Rational radius;

  // Throws DomainError unless radius > 0.
  CircleFamily(RationalParametrization c, Rational r);
};

const Variables& family_variables();  // {x, y, t}

/// q^2*((x*W - X)^2 + (y*W - Y)^2) - p^2*W^2 for radius p/q, primitive.
MultiPoly build_family_poly(const CircleFamily& family);

struct FactorRecord {
  ImplicitCurve curve;
  int multiplicity = 1;
};

struct EnvelopeOutput {
  ImplicitCurve curve;
  int raw_degree = 0;
  std::vector<FactorRecord> factors_verified;
  // curve.poly with every verified factor divided out.
  MultiPoly residual;
  EliminationResult elimination;
};

/// Divides the residual by `candidate` as often as it goes exactly. Leaves
/// `out` unchanged when the candidate is not a factor.
EnvelopeOutput register_candidate_factor(EnvelopeOutput out, const ImplicitCurve& candidate);

/// Origin-centred circles x^2 + y^2 - rho^2 for rho = r and rho = k/4,
/// k = 1..16.
std::vector<ImplicitCurve> circle_candidates(const Rational& r);

struct EnvelopeOptions {
  EliminationMethod method = EliminationMethod::resultant;
  GroebnerOptions groebner = groebner_options_from_env();
  // Drop factors of the generator that no oracle sample lies on. Off by
  // default: numeric evidence never decides the reported generator.
  bool filter_spurious = false;
  double keep_threshold = 1e-8;
};

/// Eliminates t from {F, dF/dt} with F = build_family_poly(family), then
/// registers circle_candidates(radius).
EnvelopeOutput envelope_eliminate(const CircleFamily& family, const EnvelopeOptions& options = {});

const Variables& implicit_route_variables();  // {x, y, a, b}

/// Offset of `curve` by the Jacobian system {g(a,b), (x-a)^2 + (y-b)^2 -
/// r^2, g_a*(y-b) - g_b*(x-a)} eliminating {a, b} by Groebner bases.
EnvelopeOutput offset_implicit_route(const ImplicitCurve& curve, const Rational& r,
                                     const GroebnerOptions& options = groebner_options_from_env());

enum class OffsetRoute { parametric, implicit };

/// Searches small integer points for a base of multiplicity deg - 1.
std::optional<std::pair<Rational, Rational>> find_pencil_base(const ImplicitCurve& curve);

/// Offset by the parametric route: line-pencil parametrization, then the
/// envelope of the circle family.
EnvelopeOutput offset_parametric_route(const ImplicitCurve& curve, const Rational& r,
                                       const EnvelopeOptions& options = {});

/// Degree of the offset residual after dividing out circle_candidates(r).
int offset_degree(const ImplicitCurve& curve, const Rational& r, OffsetRoute route);

struct OracleSample {
  double t = 0;
  std::pair<double, double> first;
  std::pair<double, double> second;
};

struct OracleResult {
  std::vector<OracleSample> samples;
  std::vector<double> skipped;  // denominator root or stationary center
};

/// For each t: F = 0 is a circle and dF/dt = 0 the line through its centre
/// orthogonal to the centre's velocity. Returns both intersection points.
OracleResult oracle_envelope_points(const CircleFamily& family, const std::vector<double>& t_values);

// Flattens oracle samples into a point list for filter_spurious_factors.
std::vector<std::pair<double, double>> oracle_point_list(const OracleResult& r);

}  // namespace trif

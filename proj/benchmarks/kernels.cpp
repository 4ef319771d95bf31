#include <benchmark/benchmark.h>

#include "trif/curvelab/envelope.hpp"
#include "trif/curvelab/serialize.hpp"
#include "trif/elim/gcd.hpp"
#include "trif/elim/groebner.hpp"
#include "trif/elim/resultant.hpp"
#include "trif/polycore/poly_io.hpp"
#include "trif/render/render.hpp"

namespace {

using namespace trif;

RationalParametrization centers() { return load_parametrization(std::filesystem::path(TRIF_FIXTURE_DIR) / "param_second.json"); }

MultiPoly plane(const char* name) {
  return load_polynomial(std::filesystem::path(TRIF_FIXTURE_DIR) / name).with_variables(plane_variables());
}

void family_system(const Rational& r, MultiPoly& f, MultiPoly& ft) {
  f = build_family_poly(CircleFamily(centers(), r));
  ft = partial_derivative(f, "t");
}

void BM_SylvesterResultant(benchmark::State& state) {
  MultiPoly f, ft;
  family_system(Rational(1, state.range(0)), f, ft);
  for (auto _ : state) benchmark::DoNotOptimize(sylvester_resultant(f, ft, "t"));
}
BENCHMARK(BM_SylvesterResultant)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_PrsResultant(benchmark::State& state) {
  MultiPoly f, ft;
  family_system(Rational(1, state.range(0)), f, ft);
  for (auto _ : state) benchmark::DoNotOptimize(prs_resultant(f, ft, "t"));
}
BENCHMARK(BM_PrsResultant)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_GcdSharedComponent(benchmark::State& state) {
  const MultiPoly f1 = plane("f1.json");
  const MultiPoly f2 = plane("f2.json");
  const MultiPoly a = f1 * f2;
  const MultiPoly b = f2 * f2;
  for (auto _ : state) benchmark::DoNotOptimize(multivar_gcd(a, b));
}
BENCHMARK(BM_GcdSharedComponent)->Unit(benchmark::kMillisecond);

void BM_GcdCoprime(benchmark::State& state) {
  const MultiPoly f1 = plane("f1.json");
  const MultiPoly f2 = plane("f2.json");
  for (auto _ : state) benchmark::DoNotOptimize(multivar_gcd(f1, f2));
}
BENCHMARK(BM_GcdCoprime)->Unit(benchmark::kMillisecond);

void BM_GroebnerEnvelope(benchmark::State& state) {
  MultiPoly f, ft;
  family_system(Rational(1), f, ft);
  GroebnerOptions opt;
  opt.modular = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(groebner_eliminate({f, ft}, {"t"}, opt));
}
BENCHMARK(BM_GroebnerEnvelope)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GroebnerCircleOffset(benchmark::State& state) {
  const ImplicitCurve circle = ImplicitCurve::from_poly(parse_poly("x^2 + y^2 - 4", plane_variables()));
  for (auto _ : state) benchmark::DoNotOptimize(offset_implicit_route(circle, Rational(1)));
}
BENCHMARK(BM_GroebnerCircleOffset)->Unit(benchmark::kMillisecond);

void BM_MarchingSquares(benchmark::State& state) {
  const ImplicitCurve f2 = ImplicitCurve::from_poly(plane("f2.json"));
  Viewport vp;
  vp.grid_resolution = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(marching_squares(f2, vp, 1));
}
BENCHMARK(BM_MarchingSquares)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

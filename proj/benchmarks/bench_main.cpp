#include <benchmark/benchmark.h>

#include "zrl/explicit_formula.hpp"
#include "zrl/kronecker.hpp"
#include "zrl/regdet.hpp"
#include "zrl/special_functions.hpp"
#include "zrl/suspension.hpp"
#include "zrl/zeta_zeros.hpp"

namespace {

void BM_HurwitzZeta(benchmark::State& state) {
  const zrl::Complex s{2.5, 7.0};
  const zrl::Complex z{0.75, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(zrl::hurwitz_zeta(s, z));
}
BENCHMARK(BM_HurwitzZeta);

void BM_LogGamma(benchmark::State& state) {
  const zrl::Complex z{-3.5, 2.0};
  for (auto _ : state) benchmark::DoNotOptimize(zrl::log_gamma(z));
}
BENCHMARK(BM_LogGamma);

void BM_RegdetNumericalFinitePlace(benchmark::State& state) {
  const auto ladder = zrl::euler_factor_ladder(zrl::PlaceSpec::finite(5), {2.0, 5.0});
  for (auto _ : state) benchmark::DoNotOptimize(zrl::regdet_numerical(ladder));
}
BENCHMARK(BM_RegdetNumericalFinitePlace);

void BM_HardyZ(benchmark::State& state) {
  const auto t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zrl::hardy_z(t));
}
BENCHMARK(BM_HardyZ)->Arg(50)->Arg(500)->Arg(5000);

void BM_FindZeros(benchmark::State& state) {
  const auto t_max = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zrl::find_zeros(t_max));
}
BENCHMARK(BM_FindZeros)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ExplicitFormulaGaussian(benchmark::State& state) {
  const auto zeros = zrl::find_zeros(100.0);
  const auto phi = zrl::TestFunction::gaussian(2.0, 0.3);
  const auto field = zrl::NumberFieldData::rationals();
  for (auto _ : state) benchmark::DoNotOptimize(zrl::check_explicit_formula(phi, field, zeros, 45.0));
}
BENCHMARK(BM_ExplicitFormulaGaussian)->Unit(benchmark::kMillisecond);

void BM_ExplicitFormulaBump(benchmark::State& state) {
  const auto zeros = zrl::find_zeros(100.0);
  const auto phi = zrl::TestFunction::bump(2.0, 0.7);
  const auto field = zrl::NumberFieldData::rationals();
  for (auto _ : state) benchmark::DoNotOptimize(zrl::check_explicit_formula(phi, field, zeros, 45.0));
}
BENCHMARK(BM_ExplicitFormulaBump)->Unit(benchmark::kMillisecond);

void BM_TraceFormula(benchmark::State& state) {
  const auto spec = zrl::SuspensionSpec::elliptic(zrl::EllipticCurveData::make(5, 2));
  const auto phi = zrl::TestFunction::gaussian(std::log(5.0), 0.15);
  for (auto _ : state) benchmark::DoNotOptimize(zrl::check_trace_formula(phi, spec, 400, 12));
}
BENCHMARK(BM_TraceFormula)->Unit(benchmark::kMillisecond);

void BM_CohomologicalSolve(benchmark::State& state) {
  const int modes = static_cast<int>(state.range(0));
  zrl::FourierFunction2D g(modes);
  for (int m = -modes; m <= modes; ++m) {
    for (int n = -modes; n <= modes; ++n) g.at(m, n) = 1.0;
  }
  const auto alpha = zrl::SlopeParam::golden();
  for (auto _ : state) benchmark::DoNotOptimize(zrl::solve_cohomological(g, alpha));
}
BENCHMARK(BM_CohomologicalSolve)->Arg(32)->Arg(128);

}  // namespace
BENCHMARK_MAIN();

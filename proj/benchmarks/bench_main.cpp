#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "diskarg/experiments.hpp"
#include "diskarg/frac_calc.hpp"
#include "diskarg/herglotz.hpp"
#include "diskarg/local_zeros.hpp"

using namespace diskarg;

namespace {

void BM_ProductArg(benchmark::State& state) {
  const ZeroSequence zs = gen_power_radial(4.0, static_cast<std::size_t>(state.range(0)), BoundaryPoint(0.0));
  const cplx z = std::polar(0.999, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(product_arg(zs, z, 1e-5).value);
  state.SetItemsProcessed(state.iterations() * static_cast<long>(zs.size()));
}
BENCHMARK(BM_ProductArg)->Arg(100)->Arg(1000)->Arg(10000);

void BM_ProductArgTruncated(benchmark::State& state) {
  const ZeroSequence zs = gen_power_radial(4.0, 10000, BoundaryPoint(0.0));
  const cplx z = std::polar(1.0 - std::ldexp(1.0, -static_cast<int>(state.range(0))), 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(product_arg_truncated(zs, z, 1e-5).value);
}
BENCHMARK(BM_ProductArgTruncated)->Arg(4)->Arg(10)->Arg(16);

void BM_RlIntegral(benchmark::State& state) {
  const auto h = [](double x) { return 1.0 / std::norm(1.0 - x * std::polar(1.0, 0.3)); };
  const double r = 1.0 - std::ldexp(1.0, -static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rl_integral(h, 0.5, r).value);
}
BENCHMARK(BM_RlIntegral)->Arg(4)->Arg(10)->Arg(16);

void BM_NaiveRl(benchmark::State& state) {
  const auto h = [](double x) { return 1.0 / std::norm(1.0 - x * std::polar(1.0, 0.3)); };
  const double r = 1.0 - std::ldexp(1.0, -10);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_naive_rl(h, 0.5, r, state.range(0)));
}
BENCHMARK(BM_NaiveRl)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_HerglotzPowerLaw(benchmark::State& state) {
  const BoundaryMeasure m = power_law_measure(0.5);
  const cplx z = std::polar(0.99, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(h_psi(z, m));
  state.counters["segments"] = static_cast<double>(m.segment_count());
}
BENCHMARK(BM_HerglotzPowerLaw);

void BM_HerglotzImag(benchmark::State& state) {
  const BoundaryMeasure m = power_law_measure(0.5);
  const cplx z = std::polar(0.99, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(h_psi_imag(z, m));
}
BENCHMARK(BM_HerglotzImag);

void BM_FrostmanPiecewiseLinear(benchmark::State& state) {
  std::mt19937_64 rng(7);
  RandomSpecOptions opts;
  opts.max_segments = static_cast<int>(state.range(0));
  const BoundedFunctionSpec spec = random_spec(rng, opts);
  for (auto _ : state) benchmark::DoNotOptimize(frostman_integral(spec.complete_measure(), BoundaryPoint(0.1), 0.5).value);
}
BENCHMARK(BM_FrostmanPiecewiseLinear)->Arg(4)->Arg(32);

void BM_LValue(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const BoundedFunctionSpec spec = random_spec(rng);
  const cplx z{0.4, -0.3};
  for (auto _ : state) benchmark::DoNotOptimize(L_value(spec, z, 0.5));
}
BENCHMARK(BM_LValue);

void BM_SweepAtomLevel(benchmark::State& state) {
  SweepConfig cfg;
  cfg.levels = {static_cast<int>(state.range(0))};
  cfg.necessity_subproduct = false;
  const BoundedFunctionSpec spec = atom_spec();
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_arg(spec, cfg).levels.back().sup);
}
BENCHMARK(BM_SweepAtomLevel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

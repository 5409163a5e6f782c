#include <benchmark/benchmark.h>

#include "ternary/kernels.hpp"
#include "ternary/qseries.hpp"

using namespace ternary;

static void BM_ConvolveSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QSeries a = pow(phi(n), 2), b = phi(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::convolveSerial(a.coeffs(), b.coeffs(), n));
}
BENCHMARK(BM_ConvolveSerial)->Arg(10000)->Arg(50000);

static void BM_ConvolveParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QSeries a = pow(phi(n), 2), b = phi(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve(a.coeffs(), b.coeffs(), n));
}
BENCHMARK(BM_ConvolveParallel)->Arg(10000)->Arg(50000);

static void BM_ThetaSweepSerial(benchmark::State& state) {
  const TernaryForm f{3, 31, 31, -30, 2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(kernels::thetaSweepSerial(f, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ThetaSweepSerial)->Arg(2000)->Arg(8000);

static void BM_ThetaSweepParallel(benchmark::State& state) {
  const TernaryForm f{3, 31, 31, -30, 2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(kernels::thetaSweep(f, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ThetaSweepParallel)->Arg(2000)->Arg(8000);

static void BM_ClassCandidatesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::classCandidatesSerial(state.range(0)));
}
BENCHMARK(BM_ClassCandidatesSerial)->Arg(529)->Arg(4624);

static void BM_ClassCandidatesParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::classCandidates(state.range(0)));
}
BENCHMARK(BM_ClassCandidatesParallel)->Arg(529)->Arg(4624);

BENCHMARK_MAIN();

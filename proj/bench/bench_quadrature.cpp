// Serial reference vs OpenMP panel kernel for I(p).

#include <benchmark/benchmark.h>

#include "sincpow/quadrature.hpp"
#include "sincpow/theorem.hpp"

namespace {

double exponent(const benchmark::State& state) { return static_cast<double>(state.range(0)) / 100.0; }

void BM_IntegralSerial(benchmark::State& state) {
  const sincpow::PValue p(exponent(state));
  for (auto _ : state) benchmark::DoNotOptimize(sincpow::integral_numeric_serial(p));
}

void BM_IntegralParallel(benchmark::State& state) {
  const sincpow::PValue p(exponent(state));
  for (auto _ : state) benchmark::DoNotOptimize(sincpow::integral_numeric(p));
}

void BM_CertifyGrid(benchmark::State& state) {
  const auto grid = sincpow::p_grid(1.0, 2.0, 0.05);
  const auto& consts = sincpow::TheoremConstants::standard();
  for (auto _ : state) benchmark::DoNotOptimize(sincpow::certify_grid(grid, {}, consts));
}

// p = 1.00, 1.10, 1.50, 3.00, 20.00
BENCHMARK(BM_IntegralSerial)->Arg(100)->Arg(110)->Arg(150)->Arg(300)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntegralParallel)->Arg(100)->Arg(110)->Arg(150)->Arg(300)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyGrid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

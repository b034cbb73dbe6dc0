#include <benchmark/benchmark.h>

#include "waring/engine.hpp"
#include "waring/local.hpp"
#include "waring/ring.hpp"

using namespace waring;

static void BM_PowerSet(benchmark::State& state) {
  Ring r = Ring::zmod(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nth_power_set(r, 4));
}
BENCHMARK(BM_PowerSet)->Arg(1 << 10)->Arg(1 << 15)->Arg(1 << 20);

static void BM_LengthTable(benchmark::State& state) {
  Ring r = Ring::zmod(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(length_table(r, 4));
}
BENCHMARK(BM_LengthTable)->Arg(1 << 10)->Arg(1 << 13)->Arg(1 << 15);

static void BM_LengthTableQuadratic(benchmark::State& state) {
  i64 e1 = state.range(0);
  Ring r = Ring::quadratic_quotient(2, e1, e1 / 2);
  for (auto _ : state) benchmark::DoNotOptimize(length_table(r, 4));
}
BENCHMARK(BM_LengthTableQuadratic)->Arg(1 << 5)->Arg(1 << 6)->Arg(1 << 7);

static void BM_UnitScan(benchmark::State& state) {
  Ring r = Ring::trunc_poly(3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(r.local_structure());
}
BENCHMARK(BM_UnitScan)->Arg(3)->Arg(4)->Arg(5);

static void BM_PadicPipeline(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(padic_waring(2, state.range(0)));
}
BENCHMARK(BM_PadicPipeline)->Arg(4)->Arg(8)->Arg(12);

BENCHMARK_MAIN();

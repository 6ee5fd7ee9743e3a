#include <benchmark/benchmark.h>

#include "fabius/fabius.hpp"
#include "fabius/matrix_forms.hpp"
#include "fabius/number_theory.hpp"
#include "fabius/oracle.hpp"

using namespace fabius;

// Fresh table each iteration, so this times a cold fill.
static void BM_FTableFill(benchmark::State& state) {
  for (auto _ : state) {
    DyadicTable table;
    benchmark::DoNotOptimize(fabius_dyadic(state.range(0), table));
  }
}
BENCHMARK(BM_FTableFill)->Arg(16)->Arg(32)->Arg(64);

static void BM_DAlternatingFill(benchmark::State& state) {
  for (auto _ : state) {
    DyadicTable table;
    benchmark::DoNotOptimize(d_value(state.range(0), DRoute::alternating, table));
  }
}
BENCHMARK(BM_DAlternatingFill)->Arg(32)->Arg(64)->Arg(128);

static void BM_DTheoremFill(benchmark::State& state) {
  for (auto _ : state) {
    DyadicTable table;
    benchmark::DoNotOptimize(theorem_d_odd(state.range(0), table));
  }
}
BENCHMARK(BM_DTheoremFill)->Arg(15)->Arg(31)->Arg(63);

static void BM_BuildG(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_G(state.range(0)));
}
BENCHMARK(BM_BuildG)->Arg(5)->Arg(10)->Arg(20);

static void BM_VerifyTheorem(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(state.range(0)));
}
BENCHMARK(BM_VerifyTheorem)->Arg(10)->Arg(25);

// Memoized after the first call; this measures the cached lookup path.
static void BM_Bernoulli(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli(state.range(0)));
}
BENCHMARK(BM_Bernoulli)->Arg(60)->Arg(200);

static void BM_OracleCdf(benchmark::State& state) {
  const UniformSumOracle oracle;
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle.truncated_cdf(depth, Rational(5, 16)));
}
BENCHMARK(BM_OracleCdf)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_OracleMomentBounds(benchmark::State& state) {
  const UniformSumOracle oracle;
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle.moment_bounds(depth, 2));
}
BENCHMARK(BM_OracleMomentBounds)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "surd/approximant.hpp"
#include "surd/error_analysis.hpp"
#include "surd/roots.hpp"
#include "surd/series.hpp"

namespace surd {
namespace {

// To run: ./build/benchmarks/surd_benchmarks --benchmark_filter=<regex>

void BM_NthRootInterval(benchmark::State& state) {
  const Rational eps = pow10(-state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nth_root_interval(Rational(10001), 4, eps));
  }
}
BENCHMARK(BM_NthRootInterval)->Arg(25)->Arg(100)->Arg(1000);

void BM_RemainderExponentPower(benchmark::State& state) {
  const Rational base(Integer(10001), Integer(10000));
  const Rational exponent(Integer(-15), Integer(4));
  const Rational eps = pow10(-state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rational_pow_interval(base, exponent, eps));
  }
}
BENCHMARK(BM_RemainderExponentPower)->Arg(40)->Arg(400);

void BM_Derive(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(derive(k));
}
BENCHMARK(BM_Derive)->Arg(4)->Arg(64);

void BM_TrueError(benchmark::State& state) {
  const SurdForm form = derive(4);
  const int digits = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(true_error(form, Rational(10), Rational(1), digits));
  }
}
BENCHMARK(BM_TrueError)->Arg(24)->Arg(200);

void BM_FormulaEnclosure(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(formula_enclosure(Rational(10), Rational(1)));
}
BENCHMARK(BM_FormulaEnclosure);

void BM_RemainderEnclosure(benchmark::State& state) {
  const Rational alpha(Integer(1), Integer(7));
  const Rational t(Integer(-3), Integer(10));
  for (auto _ : state) benchmark::DoNotOptimize(remainder_enclosure(alpha, 5, t));
}
BENCHMARK(BM_RemainderEnclosure);

void BM_WindowSign(benchmark::State& state) {
  const Rational t(Integer(5336), Integer(100000));
  for (auto _ : state) benchmark::DoNotOptimize(window_function_sign(t));
}
BENCHMARK(BM_WindowSign);

}  // namespace
}  // namespace surd

BENCHMARK_MAIN();

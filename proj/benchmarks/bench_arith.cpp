#include <benchmark/benchmark.h>

#include "p3hc/cyclo.hpp"
#include "p3hc/golden.hpp"

using p3hc::Cyclo;
using p3hc::Golden;

static void BM_GoldenMul(benchmark::State& state) {
  Golden a(p3hc::Rational(355, 113), p3hc::Rational(-13, 7));
  Golden b(3, 5);
  for (auto _ : state) {
    Golden c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_GoldenMul);

static void BM_GoldenSignMixed(benchmark::State& state) {
  Golden x(p3hc::Rational(987654321), p3hc::Rational(-610510510));
  for (auto _ : state) benchmark::DoNotOptimize(x.sign());
}
BENCHMARK(BM_GoldenSignMixed);

static void BM_CycloMul(benchmark::State& state) {
  Cyclo u(12, -7, 5, 9), v(-3, 8, 1, -6);
  for (auto _ : state) {
    Cyclo w = u * v;
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_CycloMul);

static void BM_CycloNorm2(benchmark::State& state) {
  Cyclo u(123, -77, 51, 94);
  for (auto _ : state) benchmark::DoNotOptimize(u.norm2());
}
BENCHMARK(BM_CycloNorm2);

BENCHMARK_MAIN();

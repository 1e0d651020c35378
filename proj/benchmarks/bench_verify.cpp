#include <benchmark/benchmark.h>

#include "frobrr/chow.hpp"
#include "frobrr/frobenius.hpp"
#include "frobrr/poly.hpp"
#include "frobrr/verify.hpp"

using namespace frobrr;

static void BM_PolyMul(benchmark::State& state) {
  const Poly x = Poly::symbol("x");
  const Poly y = Poly::symbol("y");
  const Poly a = (x + y + Rational(1, 3)).pow(static_cast<std::uint32_t>(state.range(0)));
  const Poly b = (x - 2 * y).pow(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_PolyMul)->Arg(4)->Arg(8)->Arg(16);

static void BM_CoeffTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify::coeff_table(state.range(0)));
  }
}
BENCHMARK(BM_CoeffTable)->Arg(2)->Arg(31)->Arg(97);

static void BM_MainDegree(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify::verify_main_degree(state.range(0), true));
  }
}
BENCHMARK(BM_MainDegree)->Arg(2)->Arg(13)->Arg(31);

static void BM_CubeTriviality(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(chow::cube_triviality({2, -1}, {-3, 1}, {1, 3}));
  }
}
BENCHMARK(BM_CubeTriviality);

static void BM_Arr(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(frob::verify_arr(97, 50));
  }
}
BENCHMARK(BM_Arr);

static void BM_Sweep(benchmark::State& state) {
  verify::SweepOptions o;
  o.p_max = state.range(0);
  o.parallel = state.range(1) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify::sweep(o));
  }
}
BENCHMARK(BM_Sweep)->Args({13, 0})->Args({13, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "cauchymix/mixed.hpp"
#include "cauchymix/polyseries.hpp"
#include "cauchymix/sequences.hpp"
#include "cauchymix/sheffer.hpp"

using namespace cauchymix;

static void BM_SeriesMul(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  Series a = Series::exp(order);
  Series b = Series::log1p(order);
  for (auto _ : state) {
    Series c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_SeriesMul)->Arg(16)->Arg(32)->Arg(64);

static void BM_CompInverse(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  Series f = Series::exp(order) - Series::one(order);
  for (auto _ : state) {
    Series g = f.comp_inverse();
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_CompInverse)->Arg(8)->Arg(16)->Arg(32);

static void BM_MixedOracleTable(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // rebuild the table from scratch each iteration
    Series pref = mixed::mixed_prefactor(2, 1, n);
    PolySeries ps = PolySeries::from_exp(Series::log1p(n), pref);
    benchmark::DoNotOptimize(ps.egf_coeff(n));
  }
}
BENCHMARK(BM_MixedOracleTable)->Arg(8)->Arg(16)->Arg(24);

static void BM_ShefferPolys(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  ShefferPair pair = mixed::mixed_pair(2, 1, n);
  for (auto _ : state) {
    auto polys = sheffer_polys(pair, n);
    benchmark::DoNotOptimize(polys);
  }
}
BENCHMARK(BM_ShefferPolys)->Arg(8)->Arg(16);

static void BM_Stirling(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Rational acc(0);
    for (int l = 0; l <= n; ++l) acc = acc + seq::stirling1(n, l);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_Stirling)->Arg(20)->Arg(50);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "gaussq/gaussq.hpp"

using namespace gaussq;

static void BM_QBinomialCoefficients(benchmark::State& state) {
  const long a = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(qbinomial_coefficients(a, 6));
}
BENCHMARK(BM_QBinomialCoefficients)->Arg(50)->Arg(200)->Arg(800);

static void BM_FixedKMiddle(benchmark::State& state) {
  const long a = state.range(0);
  const FixedKCoefficients fk(6, 3 * a);
  for (auto _ : state) benchmark::DoNotOptimize(fk.g(0, a));
}
BENCHMARK(BM_FixedKMiddle)->Arg(200)->Arg(2000);

static void BM_Reconstruct(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(k, Which::F));
}
BENCHMARK(BM_Reconstruct)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

static void BM_LemmaRoots(benchmark::State& state) {
  UniPoly den = UniPoly::constant(1);
  for (int i = 1; i <= 5; ++i) den *= UniPoly::constant(1) - UniPoly::monomial(1, static_cast<std::size_t>(i));
  const RatFun f{subset_sum_polys(5)[2], den};
  for (auto _ : state) benchmark::DoNotOptimize(lemma_a_roots(f, {1, 4, 1, 24}));
}
BENCHMARK(BM_LemmaRoots)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

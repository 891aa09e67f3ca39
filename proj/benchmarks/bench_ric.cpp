#include <benchmark/benchmark.h>

#include "riclab/ensembles.hpp"
#include "riclab/ric.hpp"
#include "riclab/rng.hpp"

using namespace riclab;

// Exhaustive enumeration cost grows as C(n, k); these fix n = 16.
static void BM_ExactRic(benchmark::State& state) {
  Rng rng(29);
  const DenseMatrix a = random_column_normalized(8, 16, rng);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_ric(a, order));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExactRic)->Arg(1)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

static void BM_ExactRicWide(benchmark::State& state) {
  Rng rng(31);
  const int n = static_cast<int>(state.range(0));
  const DenseMatrix a = random_column_normalized(10, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(exact_ric(a, 3));
}
BENCHMARK(BM_ExactRicWide)->Arg(12)->Arg(20)->Arg(32);

#include <benchmark/benchmark.h>

#include "riclab/ensembles.hpp"
#include "riclab/omp.hpp"
#include "riclab/oracle.hpp"
#include "riclab/rng.hpp"

using namespace riclab;

static void BM_OmpRun(benchmark::State& state) {
  Rng rng(37);
  const int m = 64, n = 256;
  const int k = static_cast<int>(state.range(0));
  const DenseMatrix a = random_column_normalized(m, n, rng);
  std::vector<int> support;
  std::vector<double> values;
  for (int i = 0; i < k; ++i) {
    support.push_back(1 + 7 * i);
    values.push_back(rng.signed_coefficient());
  }
  const Vector y = matvec(a, to_dense(make_sparse_signal(n, support, values)));
  for (auto _ : state)
    benchmark::DoNotOptimize(omp_run(a, y, k, TiePolicy::smallest()));
}
BENCHMARK(BM_OmpRun)->Arg(2)->Arg(8)->Arg(16);

static void BM_L0Oracle(benchmark::State& state) {
  Rng rng(41);
  const int n = static_cast<int>(state.range(0));
  const DenseMatrix a = random_column_normalized(8, n, rng);
  const Vector y = matvec(a, to_dense(make_sparse_signal(n, {2, 5}, {1.0, -1.0})));
  for (auto _ : state) benchmark::DoNotOptimize(l0_oracle(a, y, 2));
}
BENCHMARK(BM_L0Oracle)->Arg(12)->Arg(24)->Arg(48);

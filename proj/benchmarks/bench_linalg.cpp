#include <benchmark/benchmark.h>

#include "riclab/counterexample.hpp"
#include "riclab/ensembles.hpp"
#include "riclab/linalg.hpp"
#include "riclab/rng.hpp"

using namespace riclab;

namespace {

DenseMatrix spd_fixture(int n) {
  Rng rng(17);
  const DenseMatrix g = random_column_normalized(n, n, rng);
  DenseMatrix c = matmul(transpose(g), g);
  for (int i = 0; i < n; ++i) c(i, i) += 0.5;
  return c;
}

}  // namespace

static void BM_SymEigenvalues(benchmark::State& state) {
  const DenseMatrix c = spd_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sym_eigenvalues(c));
}
BENCHMARK(BM_SymEigenvalues)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

static void BM_SpdUpperFactor(benchmark::State& state) {
  const DenseMatrix c = spd_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spd_upper_factor(c));
}
BENCHMARK(BM_SpdUpperFactor)->Arg(8)->Arg(16)->Arg(24);

static void BM_LeastSquares(benchmark::State& state) {
  Rng rng(23);
  const int m = static_cast<int>(state.range(0));
  const DenseMatrix a = random_column_normalized(m, m / 4, rng);
  Vector y(static_cast<std::size_t>(m));
  for (double& v : y) v = rng.normal();
  for (auto _ : state) benchmark::DoNotOptimize(least_squares(a, y));
}
BENCHMARK(BM_LeastSquares)->Arg(32)->Arg(64)->Arg(128);

static void BM_BuildInstance(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_instance(k, 0.9));
}
BENCHMARK(BM_BuildInstance)->Arg(2)->Arg(10)->Arg(20);

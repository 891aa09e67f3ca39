#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "riclab/counterexample.hpp"
#include "riclab/ensembles.hpp"
#include "riclab/errors.hpp"
#include "riclab/linalg.hpp"
#include "riclab/omp.hpp"
#include "riclab/oracle.hpp"
#include "riclab/rng.hpp"

using namespace riclab;

TEST_CASE("make_sparse_signal canonicalizes and validates") {
  const SparseSignal x = make_sparse_signal(6, {5, 2}, {-1.0, 3.0});
  CHECK(x.support == std::vector<int>{2, 5});
  CHECK(x.values == std::vector<double>{3.0, -1.0});
  const Vector d = to_dense(x);
  CHECK(d[1] == 3.0);
  CHECK(d[4] == -1.0);
  CHECK(norm2(x) == doctest::Approx(std::sqrt(10.0)));

  // exactly-zero values are dropped so the support stays the true support
  const SparseSignal y = make_sparse_signal(4, {1, 2}, {1.0, 0.0});
  CHECK(y.support == std::vector<int>{1});

  CHECK_THROWS_AS(make_sparse_signal(4, {0}, {1.0}), Error);
  CHECK_THROWS_AS(make_sparse_signal(4, {5}, {1.0}), Error);
  CHECK_THROWS_AS(make_sparse_signal(4, {2, 2}, {1.0, 1.0}), Error);
  CHECK_THROWS_AS(make_sparse_signal(4, {1}, {1.0, 2.0}), Error);
}

TEST_CASE("correlations") {
  SUBCASE("basis pick-off") {
    const Vector c = correlations(DenseMatrix::identity(3), {0.0, -5.0, 0.0});
    CHECK(c == Vector{0.0, 5.0, 0.0});
  }
  SUBCASE("failure instance at t = 0.8 reproduces the predicted values") {
    const CounterexampleInstance inst = build_instance(2, 0.8);
    const Vector y = matvec(inst.sensing, to_dense(inst.signal));
    const Vector c = correlations(inst.sensing, y);
    const double s = 0.8 - 1.0 / std::sqrt(3.0);
    CHECK(c[0] == doctest::Approx(2.0 / 3.0 - s).epsilon(1e-12));
    CHECK(c[1] == doctest::Approx(2.0 / 3.0 - s).epsilon(1e-12));
    CHECK(c[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(c[0] == doctest::Approx(0.4440170).epsilon(1e-6));
  }
  SUBCASE("zero residual gives all zeros") {
    const Vector c = correlations(DenseMatrix::identity(3), {0.0, 0.0, 0.0});
    CHECK(c == Vector{0.0, 0.0, 0.0});
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(correlations(DenseMatrix::identity(3), {1.0, 2.0}), Error);
  }
}

TEST_CASE("omp_run on orthonormal columns") {
  const OmpTrace trace =
      omp_run(DenseMatrix::identity(3), {0.0, 5.0, 0.0}, 1, TiePolicy::smallest());
  REQUIRE(trace.iterations.size() == 1);
  CHECK(trace.iterations[0].selected == 2);
  CHECK(trace.iterations[0].residual_norm == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(trace.final_estimate.support == std::vector<int>{2});
  CHECK(trace.final_estimate.values[0] == doctest::Approx(5.0));
}

TEST_CASE("omp_run picks the off-support column on the failure instance") {
  const CounterexampleInstance inst = build_instance(2, 0.8);
  const Vector y = matvec(inst.sensing, to_dense(inst.signal));
  const OmpTrace trace = omp_run(inst.sensing, y, 2, TiePolicy::smallest());
  REQUIRE(trace.iterations.size() == 2);
  CHECK(trace.iterations[0].selected == 3);  // strictly largest correlation 2/3
  CHECK(trace.iterations[0].tie == false);
  const auto& support = trace.final_estimate.support;
  CHECK(std::find(support.begin(), support.end(), 3) != support.end());
  const RecoveryCheck rc = exact_recovery_check(inst.sensing, inst.signal, 2, TiePolicy::smallest());
  CHECK_FALSE(rc.recovered);
}

TEST_CASE("omp_run recovers a planted 2-sparse signal and agrees with the exhaustive oracle") {
  Rng rng(2024);
  const DenseMatrix a = random_column_normalized(8, 12, rng);
  const SparseSignal x = make_sparse_signal(12, {3, 9}, {1.5, -2.0});
  const Vector y = matvec(a, to_dense(x));

  const OmpTrace trace = omp_run(a, y, 2, TiePolicy::smallest());
  CHECK(same_support(trace.final_estimate, x));
  CHECK(max_value_diff(trace.final_estimate, x) <= 1e-8 * std::max(1.0, norm2(x)));

  const L0Result oracle = l0_oracle(a, y, 2);
  CHECK(same_support(oracle.signal, trace.final_estimate));
  CHECK(max_value_diff(oracle.signal, trace.final_estimate) <= 1e-8);
}

TEST_CASE("omp_run trace invariants hold on seeded instances") {
  Rng rng(99);
  for (int round = 0; round < 15; ++round) {
    const int m = 8 + rng.uniform_int(0, 6);
    const int n = m + rng.uniform_int(1, 6);
    const int k = 1 + rng.uniform_int(0, 3);
    const DenseMatrix a = random_column_normalized(m, n, rng);
    Vector y(static_cast<std::size_t>(m));
    for (double& v : y) v = rng.normal();

    const OmpTrace trace = omp_run(a, y, k, TiePolicy::smallest());
    REQUIRE(static_cast<int>(trace.iterations.size()) == k);
    double prev_norm = norm2(y);
    std::vector<int> prev_support;
    for (const auto& it : trace.iterations) {
      // supports are nested and grow by exactly one
      CHECK(static_cast<int>(it.support_after.size()) == it.k);
      CHECK(std::includes(it.support_after.begin(), it.support_after.end(),
                          prev_support.begin(), prev_support.end()));
      // monotone residual
      CHECK(it.residual_norm <= prev_norm + 1e-12);
      // the selection is an argmax over the not-yet-selected columns
      double cmax = 0.0;
      for (int j = 1; j <= n; ++j) {
        if (std::binary_search(prev_support.begin(), prev_support.end(), j)) continue;
        cmax = std::max(cmax, it.correlations[static_cast<std::size_t>(j - 1)]);
      }
      CHECK(it.correlations[static_cast<std::size_t>(it.selected - 1)] >=
            cmax - kDefaultTieTol * cmax - 1e-300);
      prev_norm = it.residual_norm;
      prev_support = it.support_after;
    }

    // after the final iteration the residual is orthogonal to the selected columns
    const SparseSignal& est = trace.final_estimate;
    Vector fitted = matvec(a, to_dense(est));
    Vector r(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) r[i] = y[i] - fitted[i];
    for (int j : trace.iterations.back().support_after)
      CHECK(std::abs(dot(column(a, j - 1), r)) <= 1e-10 * norm2(y));
  }
}

TEST_CASE("the final estimate equals a fresh least-squares solve on the final support") {
  // the output stage needs no re-solve: the iteration-K projection already is
  // the minimizer over T^K, and the solver is deterministic across call sites
  Rng rng(1717);
  const DenseMatrix a = random_column_normalized(9, 13, rng);
  Vector y(9);
  for (double& v : y) v = rng.normal();
  const OmpTrace trace = omp_run(a, y, 4, TiePolicy::smallest());

  std::vector<int> cols0;
  for (int j : trace.iterations.back().support_after) cols0.push_back(j - 1);
  const Vector direct = least_squares(select_columns(a, cols0), y);
  const Vector est = to_dense(trace.final_estimate);
  for (std::size_t i = 0; i < cols0.size(); ++i)
    CHECK(est[static_cast<std::size_t>(cols0[i])] == direct[i]);
}

TEST_CASE("omp_run is scale equivariant") {
  Rng rng(4242);
  const DenseMatrix a = random_column_normalized(10, 14, rng);
  Vector y(10);
  for (double& v : y) v = rng.normal();
  Vector y_scaled = y;
  for (double& v : y_scaled) v *= 3.7;

  const OmpTrace t1 = omp_run(a, y, 3, TiePolicy::smallest());
  const OmpTrace t2 = omp_run(a, y_scaled, 3, TiePolicy::smallest());
  for (std::size_t k = 0; k < t1.iterations.size(); ++k)
    CHECK(t1.iterations[k].selected == t2.iterations[k].selected);
  for (std::size_t i = 0; i < t1.final_estimate.values.size(); ++i)
    CHECK(t2.final_estimate.values[i] ==
          doctest::Approx(3.7 * t1.final_estimate.values[i]).epsilon(1e-10));
}

TEST_CASE("smallest and largest index policies differ only when a tie is flagged") {
  SUBCASE("generic seeded instances produce no ties and identical selections") {
    Rng rng(808);
    for (int round = 0; round < 10; ++round) {
      const DenseMatrix a = random_column_normalized(8, 12, rng);
      Vector y(8);
      for (double& v : y) v = rng.normal();
      const OmpTrace ts = omp_run(a, y, 3, TiePolicy::smallest());
      const OmpTrace tl = omp_run(a, y, 3, TiePolicy::largest());
      bool any_tie = false;
      for (const auto& it : ts.iterations) any_tie = any_tie || it.tie;
      if (!any_tie)
        for (std::size_t k = 0; k < ts.iterations.size(); ++k)
          CHECK(ts.iterations[k].selected == tl.iterations[k].selected);
    }
  }
  SUBCASE("the boundary instance ties and the policies split") {
    const CounterexampleInstance inst = build_instance(2, 1.0 / std::sqrt(3.0));
    const Vector y = matvec(inst.sensing, to_dense(inst.signal));
    const OmpTrace ts = omp_run(inst.sensing, y, 2, TiePolicy::smallest());
    const OmpTrace tl = omp_run(inst.sensing, y, 2, TiePolicy::largest());
    CHECK(ts.iterations[0].tie);
    CHECK(tl.iterations[0].tie);
    CHECK(ts.iterations[0].tied == std::vector<int>{1, 2, 3});
    CHECK(ts.iterations[0].selected == 1);
    CHECK(tl.iterations[0].selected == 3);
  }
}

TEST_CASE("early stop") {
  SUBCASE("zero measurements stop before any selection") {
    const OmpTrace trace = omp_run(DenseMatrix::identity(3), {0.0, 0.0, 0.0}, 2,
                                   TiePolicy::smallest(), kDefaultTieTol, true);
    CHECK(trace.early_stopped);
    CHECK(trace.iterations.empty());
    CHECK(trace.final_estimate.support.empty());
  }
  SUBCASE("exact representation stops after one iteration") {
    const OmpTrace trace = omp_run(DenseMatrix::identity(3), {0.0, 5.0, 0.0}, 3,
                                   TiePolicy::smallest(), kDefaultTieTol, true);
    CHECK(trace.early_stopped);
    CHECK(trace.iterations.size() == 1);
  }
  SUBCASE("without the flag the loop runs all K iterations") {
    const OmpTrace trace =
        omp_run(DenseMatrix::identity(3), {0.0, 5.0, 0.0}, 3, TiePolicy::smallest());
    CHECK_FALSE(trace.early_stopped);
    CHECK(trace.iterations.size() == 3);
  }
}

TEST_CASE("omp_run error paths") {
  const DenseMatrix a = DenseMatrix::identity(3);
  CHECK_THROWS_AS(omp_run(a, {1.0, 2.0}, 1, TiePolicy::smallest()), Error);
  CHECK_THROWS_AS(omp_run(a, {1.0, 2.0, 3.0}, 0, TiePolicy::smallest()), Error);
  CHECK_THROWS_AS(omp_run(a, {1.0, 2.0, 3.0}, 4, TiePolicy::smallest()), Error);
  CHECK_THROWS_AS(omp_run(a, {1.0, 2.0, 3.0}, 1, TiePolicy{TiePolicy::Kind::kAdversarial, {}}),
                  Error);

  // duplicated columns force a rank-deficient selected support
  const DenseMatrix dup(2, 2, {1.0, 1.0, 0.0, 0.0});
  try {
    omp_run(dup, {1.0, 0.0}, 2, TiePolicy::smallest());
    FAIL("expected RankDeficient");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::rank_deficient);
  }
}

TEST_CASE("exact_recovery_check") {
  SUBCASE("identity recovers any 1-sparse signal") {
    const SparseSignal x = make_sparse_signal(3, {2}, {-4.0});
    const RecoveryCheck rc = exact_recovery_check(DenseMatrix::identity(3), x, 1,
                                                  TiePolicy::smallest());
    CHECK(rc.recovered);
  }
  SUBCASE("failure instance at t = 0.8") {
    const CounterexampleInstance inst = build_instance(2, 0.8);
    const RecoveryCheck rc =
        exact_recovery_check(inst.sensing, inst.signal, 2, TiePolicy::smallest());
    CHECK_FALSE(rc.recovered);
  }
  SUBCASE("boundary instance fails under the adversarial policy with a flagged tie") {
    const CounterexampleInstance inst = build_instance(2, 1.0 / std::sqrt(3.0));
    const RecoveryCheck rc = exact_recovery_check(inst.sensing, inst.signal, 2,
                                                  TiePolicy::adversarial(inst.signal.support));
    CHECK_FALSE(rc.recovered);
    CHECK(rc.trace.iterations[0].tie);
    CHECK(rc.trace.iterations[0].selected == 3);
  }
  SUBCASE("zero signals are rejected") {
    const SparseSignal zero{3, {}, {}};
    CHECK_THROWS_AS(exact_recovery_check(DenseMatrix::identity(3), zero, 1, TiePolicy::smallest()),
                    Error);
  }
  SUBCASE("an adversarial policy without a support is given supp(x)") {
    const CounterexampleInstance inst = build_instance(2, 1.0 / std::sqrt(3.0));
    const RecoveryCheck rc = exact_recovery_check(inst.sensing, inst.signal, 2,
                                                  TiePolicy{TiePolicy::Kind::kAdversarial, {}});
    CHECK_FALSE(rc.recovered);
  }
}

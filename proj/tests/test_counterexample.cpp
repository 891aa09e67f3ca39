#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "riclab/counterexample.hpp"
#include "riclab/errors.hpp"
#include "riclab/linalg.hpp"
#include "riclab/ric.hpp"

using namespace riclab;

namespace {

// test-only determinant oracle: Gaussian elimination with partial pivoting
double det_oracle(DenseMatrix a) {
  const int n = a.rows();
  double det = 1.0;
  for (int j = 0; j < n; ++j) {
    int piv = j;
    for (int i = j + 1; i < n; ++i)
      if (std::abs(a(i, j)) > std::abs(a(piv, j))) piv = i;
    if (a(piv, j) == 0.0) return 0.0;
    if (piv != j) {
      for (int c = 0; c < n; ++c) std::swap(a(piv, c), a(j, c));
      det = -det;
    }
    det *= a(j, j);
    for (int i = j + 1; i < n; ++i) {
      const double f = a(i, j) / a(j, j);
      for (int c = j; c < n; ++c) a(i, c) -= f * a(j, c);
    }
  }
  return det;
}

}  // namespace

TEST_CASE("build_base_gram block structure") {
  SUBCASE("K = 2") {
    const DenseMatrix b = build_base_gram(2);
    const double third = 1.0 / 3.0;
    const DenseMatrix expected(
        3, 3, {2 * third, 0.0, third, 0.0, 2 * third, third, third, third, 4 * third});
    CHECK(max_abs_diff(b, expected) == 0.0);
  }
  SUBCASE("K = 3") {
    const DenseMatrix b = build_base_gram(3);
    for (int i = 0; i < 3; ++i) {
      CHECK(b(i, i) == 0.75);
      CHECK(b(i, 3) == 0.25);
      CHECK(b(3, i) == 0.25);
    }
    CHECK(b(3, 3) == 1.25);
  }
  SUBCASE("first K row sums equal 1") {
    for (int k = 2; k <= 12; ++k) {
      const DenseMatrix b = build_base_gram(k);
      for (int i = 0; i < k; ++i) {
        double sum = 0.0;
        for (int j = 0; j <= k; ++j) sum += b(i, j);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
      }
    }
  }
  SUBCASE("K below 2 is rejected") {
    try {
      build_base_gram(1);
      FAIL("expected KTooSmall");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::k_too_small);
    }
  }
}

TEST_CASE("closed_form_eigs") {
  const double root3 = std::sqrt(3.0);
  SUBCASE("K = 2 at the boundary") {
    const auto eigs = closed_form_eigs(2, 1.0 / root3);
    REQUIRE(eigs.size() == 3);
    CHECK(eigs[0] == doctest::Approx(1.0 - 1.0 / root3).epsilon(1e-15));
    CHECK(eigs[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(eigs[2] == doctest::Approx(1.0 + 1.0 / root3).epsilon(1e-15));
  }
  SUBCASE("K = 2 at t = 0.8") {
    const double s = 0.8 - 1.0 / root3;
    const auto eigs = closed_form_eigs(2, 0.8);
    CHECK(eigs[0] == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(eigs[1] == doctest::Approx(2.0 / 3.0 - s).epsilon(1e-14));
    CHECK(eigs[2] == doctest::Approx(1.0 + 1.0 / root3 - s).epsilon(1e-14));
    CHECK(eigs[1] == doctest::Approx(0.4440170).epsilon(1e-6));
    CHECK(eigs[2] == doctest::Approx(1.3547005).epsilon(1e-6));
  }
  SUBCASE("1 - t is the smallest eigenvalue across the verification grid") {
    for (int k = 2; k <= 8; ++k)
      for (double t : t_grid(k)) {
        const auto eigs = closed_form_eigs(k, t);
        CHECK(eigs.front() == doctest::Approx(1.0 - t).epsilon(1e-14));
        CHECK(std::is_sorted(eigs.begin(), eigs.end()));
      }
  }
  SUBCASE("t range validation") {
    try {
      closed_form_eigs(2, 0.5);  // below 1/sqrt(3)
      FAIL("expected TOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::t_out_of_range);
    }
    CHECK_THROWS_AS(closed_form_eigs(2, 1.0), Error);
    CHECK_NOTHROW(closed_form_eigs(2, 0.99999));
  }
}

TEST_CASE("build_instance") {
  SUBCASE("at the boundary the shifted Gram equals the base") {
    const CounterexampleInstance inst = build_instance(2, 1.0 / std::sqrt(3.0));
    CHECK(inst.shift == 0.0);
    CHECK(max_abs_diff(inst.shifted_gram, inst.base_gram) == 0.0);
  }
  SUBCASE("t = 0.8 diagonal values") {
    const CounterexampleInstance inst = build_instance(2, 0.8);
    const double s = 0.8 - 1.0 / std::sqrt(3.0);
    CHECK(inst.shifted_gram(0, 0) == doctest::Approx(2.0 / 3.0 - s).epsilon(1e-15));
    CHECK(inst.shifted_gram(1, 1) == doctest::Approx(2.0 / 3.0 - s).epsilon(1e-15));
    CHECK(inst.shifted_gram(2, 2) == doctest::Approx(4.0 / 3.0 - s).epsilon(1e-15));
    CHECK(inst.shifted_gram(0, 0) == doctest::Approx(0.4440170).epsilon(1e-6));
    CHECK(inst.shifted_gram(2, 2) == doctest::Approx(1.1106836).epsilon(1e-6));
  }
  SUBCASE("K = 5, t = 0.99 stays positive definite with smallest eigenvalue 1 - t") {
    const CounterexampleInstance inst = build_instance(5, 0.99);
    CHECK(inst.predicted_eigs.front() == doctest::Approx(0.01).epsilon(1e-12));
    const auto eigs = sym_eigenvalues(inst.shifted_gram);
    CHECK(eigs.front() == doctest::Approx(0.01).epsilon(1e-8));
    CHECK(eigs.front() > 0.0);
  }
  SUBCASE("the signal is exactly K-sparse") {
    for (int k = 2; k <= 8; ++k) {
      const CounterexampleInstance inst = build_instance(k, t_grid(k)[3]);
      CHECK(static_cast<int>(inst.signal.support.size()) == k);
      CHECK(inst.signal.len == k + 1);
    }
  }
}

TEST_CASE("spectral identities of the construction") {
  SUBCASE("trace equals the eigenvalue sum across the grid") {
    for (int k = 2; k <= 10; ++k)
      for (double t : t_grid(k)) {
        const CounterexampleInstance inst = build_instance(k, t);
        double tr = 0.0;
        for (int i = 0; i <= k; ++i) tr += inst.shifted_gram(i, i);
        double sum = 0.0;
        for (double v : inst.predicted_eigs) sum += v;
        CHECK(std::abs(tr - sum) <= 1e-10);
      }
  }
  SUBCASE("determinant equals the eigenvalue product at the boundary") {
    for (int k = 2; k <= 10; ++k) {
      const DenseMatrix b = build_base_gram(k);
      double prod = 1.0;
      for (double v : closed_form_eigs(k, 1.0 / std::sqrt(static_cast<double>(k) + 1.0)))
        prod *= v;
      CHECK(std::abs(det_oracle(b) - prod) <= 1e-10);
    }
  }
}

TEST_CASE("witness_check on the three canonical cases") {
  SUBCASE("interior t under the smallest-index policy") {
    const CounterexampleInstance inst = build_instance(2, 0.8);
    const WitnessReport r = witness_check(inst, TiePolicy::smallest());
    CHECK(r.failed_clauses.empty());
    CHECK(r.omp_failed);
    CHECK_FALSE(r.tie_detected);
    CHECK_FALSE(r.boundary_tie_case);
    CHECK(r.first_selected == 3);
    CHECK(r.delta_computed == doctest::Approx(0.8).epsilon(1e-10));
  }
  SUBCASE("boundary t under the adversarial policy") {
    const CounterexampleInstance inst = build_instance(2, 1.0 / std::sqrt(3.0));
    const WitnessReport r =
        witness_check(inst, TiePolicy::adversarial(inst.signal.support));
    CHECK(r.failed_clauses.empty());
    CHECK(r.omp_failed);
    CHECK(r.tie_detected);
    CHECK(r.boundary_tie_case);
    CHECK(r.first_selected == 3);
  }
  SUBCASE("boundary t under the smallest-index policy recovers, reported honestly") {
    const CounterexampleInstance inst = build_instance(2, 1.0 / std::sqrt(3.0));
    const WitnessReport r = witness_check(inst, TiePolicy::smallest());
    CHECK(r.failed_clauses.empty());
    CHECK_FALSE(r.omp_failed);  // the smallest tied index is a correct one
    CHECK(r.tie_detected);
    CHECK(r.boundary_tie_case);
    CHECK(r.first_selected == 1);
    CHECK(r.eig_max_abs_diff <= 1e-10);
    CHECK(r.delta_abs_diff <= 1e-8);
    CHECK(r.corr_max_abs_diff <= 1e-10);
  }
}

TEST_CASE("witness_check rejects a tampered instance and names the clauses") {
  CounterexampleInstance inst = build_instance(2, 0.8);
  inst.sensing(0, 0) += 1e-3;
  try {
    witness_check(inst, TiePolicy::smallest());
    FAIL("expected VerificationError");
  } catch (const VerificationError& e) {
    CHECK(e.code() == Errc::verification_failed);
    CHECK_FALSE(e.report().failed_clauses.empty());
    const auto& clauses = e.report().failed_clauses;
    CHECK(std::find(clauses.begin(), clauses.end(), "ric") != clauses.end());
  }
}

TEST_CASE("off the boundary the first selection is K+1 under every policy") {
  for (int k = 2; k <= 6; ++k) {
    const CounterexampleInstance probe = build_instance(k, t_grid(k)[1]);
    for (double t : t_grid(k)) {
      const CounterexampleInstance inst = build_instance(k, t);
      if (inst.shift <= 1e-6) continue;
      for (const TiePolicy& policy :
           {TiePolicy::smallest(), TiePolicy::largest(),
            TiePolicy::adversarial(inst.signal.support)}) {
        const RecoveryCheck rc = exact_recovery_check(inst.sensing, inst.signal, k, policy);
        CHECK_FALSE(rc.recovered);
        CHECK(rc.trace.iterations.front().selected == k + 1);
      }
    }
    (void)probe;
  }
}

TEST_CASE("t_grid covers the boundary and stays inside the valid range") {
  for (int k = 2; k <= 10; ++k) {
    const auto ts = t_grid(k);
    REQUIRE(ts.size() == 10);
    CHECK(ts.front() == 1.0 / std::sqrt(static_cast<double>(k) + 1.0));
    CHECK(ts.back() < 1.0);
    CHECK(std::is_sorted(ts.begin(), ts.end()));
  }
}

TEST_CASE("gap_search") {
  SUBCASE("zero trials yield an empty report") {
    GapSearchParams p;
    p.sparsity_k = 2;
    p.trials = 0;
    p.seed = 1;
    CHECK(gap_search(p).empty());
  }
  SUBCASE("findings lie strictly inside the interval and re-measure identically") {
    GapSearchParams p;
    p.sparsity_k = 2;
    p.trials = 40;
    p.seed = 42;
    p.rows = 8;
    p.cols = 10;
    const auto findings = gap_search(p);
    REQUIRE_FALSE(findings.empty());
    const double lo = 1.0 / (std::sqrt(2.0) + 1.0);
    const double hi = 1.0 / std::sqrt(3.0);
    for (const auto& f : findings) {
      CHECK(f.delta > lo);
      CHECK(f.delta < hi);
      // interval membership is re-checked from the recorded matrix alone
      const RicReport r = exact_ric(f.matrix, p.sparsity_k + 1);
      CHECK(r.delta == f.delta);
      CHECK(matrix_digest(f.matrix) == f.digest);
      CHECK(f.signals_checked > 0);
    }
  }
  SUBCASE("identical parameters replay to identical findings") {
    GapSearchParams p;
    p.sparsity_k = 2;
    p.trials = 30;
    p.seed = 7;
    p.rows = 8;
    p.cols = 10;
    const auto a = gap_search(p);
    const auto b = gap_search(p);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].trial == b[i].trial);
      CHECK(a[i].digest == b[i].digest);
      CHECK(a[i].delta == b[i].delta);
      CHECK(a[i].failure_found == b[i].failure_found);
    }
  }
  SUBCASE("recorded failures replay") {
    GapSearchParams p;
    p.sparsity_k = 2;
    p.trials = 60;
    p.seed = 11;
    p.rows = 8;
    p.cols = 10;
    for (const auto& f : gap_search(p)) {
      if (!f.failure_found) continue;
      const TiePolicy policy =
          f.failing_policy == "largest" ? TiePolicy::largest() : TiePolicy::smallest();
      const RecoveryCheck rc =
          exact_recovery_check(f.matrix, f.failing_signal, p.sparsity_k, policy);
      CHECK_FALSE(rc.recovered);
    }
  }
  SUBCASE("budget violations are rejected") {
    GapSearchParams p;
    p.sparsity_k = 2;
    p.trials = 1;
    p.seed = 1;
    p.rows = 8;
    p.cols = 400;
    p.budget = 1000;
    try {
      gap_search(p);
      FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::budget_exceeded);
    }
  }
}

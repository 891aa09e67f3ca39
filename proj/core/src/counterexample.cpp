#include "riclab/counterexample.hpp"

#include <algorithm>
#include <cmath>

#include "riclab/ensembles.hpp"
#include "riclab/linalg.hpp"
#include "riclab/rng.hpp"
#include "riclab/subsets.hpp"

namespace riclab {

namespace {

void require_valid_kt(int sparsity_k, double t) {
  if (sparsity_k < 2) fail(Errc::k_too_small, "construction requires K >= 2");
  const double lo = 1.0 / std::sqrt(static_cast<double>(sparsity_k) + 1.0);
  if (t < lo || t >= 1.0)
    fail(Errc::t_out_of_range,
         "t must lie in [1/sqrt(K+1), 1) = [" + format_double17(lo) + ", 1)");
}

}  // namespace

DenseMatrix build_base_gram(int sparsity_k) {
  if (sparsity_k < 2) fail(Errc::k_too_small, "construction requires K >= 2");
  const int n = sparsity_k + 1;
  const double diag = static_cast<double>(sparsity_k) / n;
  const double border = 1.0 / n;
  DenseMatrix b(n, n);
  for (int i = 0; i < sparsity_k; ++i) {
    b(i, i) = diag;
    b(i, n - 1) = border;
    b(n - 1, i) = border;
  }
  b(n - 1, n - 1) = static_cast<double>(sparsity_k + 2) / n;
  return b;
}

std::vector<double> closed_form_eigs(int sparsity_k, double t) {
  require_valid_kt(sparsity_k, t);
  const double root = 1.0 / std::sqrt(static_cast<double>(sparsity_k) + 1.0);
  const double shift = t - root;
  const double mid = static_cast<double>(sparsity_k) / (sparsity_k + 1) - shift;

  std::vector<double> eigs;
  eigs.reserve(static_cast<std::size_t>(sparsity_k) + 1);
  eigs.push_back(1.0 - t);  // always the smallest: mid - (1-t) = 1/sqrt(K+1) - 1/(K+1) > 0
  for (int i = 0; i < sparsity_k - 1; ++i) eigs.push_back(mid);
  eigs.push_back(1.0 + root - shift);
  return eigs;
}

CounterexampleInstance build_instance(int sparsity_k, double t) {
  require_valid_kt(sparsity_k, t);
  const int n = sparsity_k + 1;
  const double root = 1.0 / std::sqrt(static_cast<double>(n));

  CounterexampleInstance inst;
  inst.sparsity_k = sparsity_k;
  inst.target_delta = t;
  inst.shift = t - root;
  inst.base_gram = build_base_gram(sparsity_k);
  inst.shifted_gram = inst.base_gram;
  for (int i = 0; i < n; ++i) inst.shifted_gram(i, i) -= inst.shift;
  inst.sensing = spd_upper_factor(inst.shifted_gram);

  std::vector<int> support(static_cast<std::size_t>(sparsity_k));
  std::vector<double> ones(static_cast<std::size_t>(sparsity_k), 1.0);
  for (int i = 0; i < sparsity_k; ++i) support[static_cast<std::size_t>(i)] = i + 1;
  inst.signal = make_sparse_signal(n, std::move(support), std::move(ones));

  inst.predicted_eigs = closed_form_eigs(sparsity_k, t);
  inst.predicted_on_support_corr = static_cast<double>(sparsity_k) / n - inst.shift;
  inst.predicted_off_support_corr = static_cast<double>(sparsity_k) / n;
  return inst;
}

WitnessReport witness_check(const CounterexampleInstance& inst, const TiePolicy& policy,
                            const WitnessTolerances& tol) {
  WitnessReport report;
  report.sparsity_k = inst.sparsity_k;
  report.target_delta = inst.target_delta;
  report.shift = inst.shift;
  report.policy_used = policy_name(policy.kind);
  report.predicted_eigs = inst.predicted_eigs;
  report.predicted_on_support_corr = inst.predicted_on_support_corr;
  report.predicted_off_support_corr = inst.predicted_off_support_corr;
  report.boundary_tie_case = inst.shift <= tol.tie;

  const int n = inst.sparsity_k + 1;

  // (a) spectrum of the shifted Gram matrix vs. closed forms
  report.computed_eigs = sym_eigenvalues(inst.shifted_gram);
  report.eig_max_abs_diff = 0.0;
  for (int i = 0; i < n; ++i)
    report.eig_max_abs_diff =
        std::max(report.eig_max_abs_diff,
                 std::abs(report.computed_eigs[static_cast<std::size_t>(i)] -
                          report.predicted_eigs[static_cast<std::size_t>(i)]));
  if (report.eig_max_abs_diff > tol.eig) report.failed_clauses.push_back("eigenvalues");

  // (b) exact restricted isometry constant of order K+1 equals t
  report.delta_computed = exact_ric(inst.sensing, n, tol.budget).delta;
  report.delta_abs_diff = std::abs(report.delta_computed - inst.target_delta);
  if (report.delta_abs_diff > tol.ric) report.failed_clauses.push_back("ric");

  // (c) first-iteration correlations
  const Vector y = matvec(inst.sensing, to_dense(inst.signal));
  report.first_correlations = correlations(inst.sensing, y);
  report.corr_max_abs_diff = 0.0;
  for (int j = 0; j < n; ++j) {
    const double predicted =
        (j < inst.sparsity_k) ? inst.predicted_on_support_corr : inst.predicted_off_support_corr;
    report.corr_max_abs_diff =
        std::max(report.corr_max_abs_diff,
                 std::abs(report.first_correlations[static_cast<std::size_t>(j)] - predicted));
  }
  if (report.corr_max_abs_diff > tol.corr) report.failed_clauses.push_back("correlations");

  // (d) recovery failure
  const RecoveryCheck rc =
      exact_recovery_check(inst.sensing, inst.signal, inst.sparsity_k, policy, tol.tie);
  report.omp_failed = !rc.recovered;
  report.tie_detected = !rc.trace.iterations.empty() && rc.trace.iterations.front().tie;
  report.first_selected =
      rc.trace.iterations.empty() ? 0 : rc.trace.iterations.front().selected;

  if (!report.boundary_tie_case) {
    if (!report.omp_failed) report.failed_clauses.push_back("omp_failure");
  } else if (policy.kind == TiePolicy::Kind::kAdversarial) {
    if (!report.omp_failed) report.failed_clauses.push_back("omp_failure_at_boundary");
    if (!report.tie_detected) report.failed_clauses.push_back("tie_not_detected");
  }
  // At the boundary under a non-adversarial policy a successful recovery is a
  // legitimate outcome: the tied candidate set contains a correct index.

  if (!report.failed_clauses.empty()) {
    std::string msg = "witness_check failed clause(s):";
    for (const auto& c : report.failed_clauses) msg += " " + c;
    throw VerificationError(msg, std::move(report));
  }
  return report;
}

std::vector<double> t_grid(int sparsity_k, int points) {
  if (sparsity_k < 2) fail(Errc::k_too_small, "construction requires K >= 2");
  if (points < 1) fail(Errc::invalid_argument, "t_grid: points must be >= 1");
  const double lo = 1.0 / std::sqrt(static_cast<double>(sparsity_k) + 1.0);
  std::vector<double> ts;
  ts.reserve(static_cast<std::size_t>(points));
  for (int j = 0; j < points; ++j)
    ts.push_back(lo + static_cast<double>(j) * (1.0 - lo) / points);
  return ts;
}

namespace {

// The boundary construction's Gram shape is an identity block plus one
// correlated border column. Reproducing that shape with a weaker border lands
// the constant inside the gap: orthonormal basis columns plus sign-pattern
// columns (+-1/sqrt(r) on r rows). The dominant subsets (K basis columns
// against one pattern) have Gram I + border with entries 1/sqrt(r), giving a
// deviation of exactly sqrt(K/r); r is drawn so that value is strictly inside
// the interval. Cross terms between patterns are random; the caller's exact
// re-measurement keeps only genuine in-gap candidates.
DenseMatrix structured_candidate(int sparsity_k, int rows, int cols, Rng& rng) {
  const double k = static_cast<double>(sparsity_k);
  // sqrt(K/r) in gap  <=>  K(K+1) < r < K(sqrt(K)+1)^2
  const int r_min = static_cast<int>(std::floor(k * (k + 1.0))) + 1;
  const int r_max_excl = static_cast<int>(std::ceil(k * (std::sqrt(k) + 1.0) * (std::sqrt(k) + 1.0))) - 1;
  const int r_hi = std::min(rows, r_max_excl);
  if (rows < sparsity_k + 1 || r_hi < r_min)
    return random_column_normalized(rows, cols, rng);  // geometry cannot reach the gap

  DenseMatrix a(rows, cols);
  const int basis = std::min(rows, cols);
  for (int j = 0; j < basis; ++j) a(j, j) = 1.0;
  for (int j = basis; j < cols; ++j) {
    const int r = rng.uniform_int(r_min, r_hi);
    // choose r support rows by a seeded partial shuffle
    std::vector<int> perm(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < r; ++i) {
      const int swap_with = rng.uniform_int(i, rows - 1);
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(swap_with)]);
    }
    const double mag = 1.0 / std::sqrt(static_cast<double>(r));
    for (int i = 0; i < r; ++i)
      a(perm[static_cast<std::size_t>(i)], j) = (rng.next_u64() & 1ULL) ? mag : -mag;
  }
  // small perturbation spreads the measured constants across the interval
  const double eta = rng.uniform(0.0, 0.04) / std::sqrt(static_cast<double>(rows));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) += eta * rng.normal();
  return normalize_columns(std::move(a));
}

}  // namespace

std::vector<GapFinding> gap_search(const GapSearchParams& params) {
  const int k = params.sparsity_k;
  if (k < 2) fail(Errc::k_too_small, "gap_search requires K >= 2");
  if (params.trials < 0) fail(Errc::invalid_argument, "gap_search: trials must be >= 0");
  if (params.cols <= k) fail(Errc::invalid_argument, "gap_search: cols must exceed K");
  if (params.rows < 1) fail(Errc::invalid_argument, "gap_search: rows must be >= 1");
  if (params.draws_per_support < 1)
    fail(Errc::invalid_argument, "gap_search: draws_per_support must be >= 1");
  const unsigned long long subsets =
      binomial_capped(params.cols, k + 1, static_cast<unsigned long long>(params.budget));
  if (subsets > static_cast<unsigned long long>(params.budget))
    fail(Errc::budget_exceeded, "gap_search: C(cols, K+1) exceeds the enumeration budget");

  const double gap_lo = 1.0 / (std::sqrt(static_cast<double>(k)) + 1.0);
  const double gap_hi = 1.0 / std::sqrt(static_cast<double>(k) + 1.0);

  std::vector<GapFinding> findings;
  for (int trial = 0; trial < params.trials; ++trial) {
    Rng rng(mix_seed(params.seed, static_cast<std::uint64_t>(trial)));
    GapFinding finding;
    finding.trial = trial;
    if (trial % 2 == 0) {
      finding.generator = "random";
      finding.matrix = random_column_normalized(params.rows, params.cols, rng);
    } else {
      finding.generator = "structured";
      finding.matrix = structured_candidate(k, params.rows, params.cols, rng);
    }
    finding.delta = exact_ric(finding.matrix, k + 1, params.budget).delta;
    if (!(finding.delta > gap_lo && finding.delta < gap_hi)) continue;  // strictly inside only

    finding.digest = matrix_digest(finding.matrix);
    finding.failing_signal = SparseSignal{params.cols, {}, {}};

    for (SubsetIterator sit(params.cols, k); !sit.done() && !finding.failure_found;
         sit.advance()) {
      std::vector<int> support;
      for (int c : sit.current()) support.push_back(c + 1);
      for (int d = 0; d < params.draws_per_support && !finding.failure_found; ++d) {
        std::vector<double> values;
        values.reserve(support.size());
        for (std::size_t i = 0; i < support.size(); ++i) values.push_back(rng.signed_coefficient());
        const SparseSignal x = make_sparse_signal(params.cols, support, values);
        for (const TiePolicy& policy : {TiePolicy::smallest(), TiePolicy::largest()}) {
          ++finding.signals_checked;
          const RecoveryCheck rc = exact_recovery_check(finding.matrix, x, k, policy);
          if (!rc.recovered) {
            finding.failure_found = true;
            finding.failing_signal = x;
            finding.failing_policy = policy_name(policy.kind);
            break;
          }
        }
      }
    }
    findings.push_back(std::move(finding));
  }
  return findings;
}

}  // namespace riclab

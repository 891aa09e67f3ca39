#include "riclab/omp.hpp"

#include <algorithm>
#include <cmath>

#include "riclab/errors.hpp"
#include "riclab/linalg.hpp"

namespace riclab {

std::string policy_name(TiePolicy::Kind kind) {
  switch (kind) {
    case TiePolicy::Kind::kSmallestIndex: return "smallest";
    case TiePolicy::Kind::kLargestIndex: return "largest";
    case TiePolicy::Kind::kAdversarial: return "adversarial";
  }
  return "?";
}

Vector correlations(const DenseMatrix& a, const Vector& r) {
  Vector c = matvec_transpose(a, r);
  for (double& v : c) v = std::abs(v);
  return c;
}

namespace {

bool contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

int pick_from_tied(const std::vector<int>& tied, const TiePolicy& policy) {
  switch (policy.kind) {
    case TiePolicy::Kind::kSmallestIndex:
      return tied.front();
    case TiePolicy::Kind::kLargestIndex:
      return tied.back();
    case TiePolicy::Kind::kAdversarial: {
      if (policy.true_support.empty())
        fail(Errc::invalid_argument, "adversarial tie policy needs the true support");
      std::vector<int> sorted_support = policy.true_support;
      std::sort(sorted_support.begin(), sorted_support.end());
      for (int j : tied)
        if (!contains(sorted_support, j)) return j;
      return tied.front();
    }
  }
  fail(Errc::invalid_argument, "unknown tie policy");
}

SparseSignal estimate_from(int len, const std::vector<int>& support, const Vector& coeffs) {
  return make_sparse_signal(len, support, coeffs);
}

}  // namespace

OmpTrace omp_run(const DenseMatrix& a, const Vector& y, int sparsity, const TiePolicy& policy,
                 double tie_tol, bool early_stop) {
  if (static_cast<int>(y.size()) != a.rows())
    fail(Errc::dimension_mismatch, "omp_run: measurement length != rows");
  if (sparsity < 1 || sparsity > a.cols())
    fail(Errc::invalid_argument, "omp_run: sparsity must be in [1, cols]");
  if (policy.kind == TiePolicy::Kind::kAdversarial && policy.true_support.empty())
    fail(Errc::invalid_argument, "adversarial tie policy needs the true support");

  const double y_norm = norm2(y);

  OmpTrace trace;
  trace.final_estimate = SparseSignal{a.cols(), {}, {}};

  Vector residual = y;
  std::vector<int> support;          // 1-based, ascending
  std::vector<int> support_cols0;    // 0-based, ascending
  Vector coeffs;

  for (int k = 1; k <= sparsity; ++k) {
    if (early_stop && norm2(residual) <= kEarlyStopRel * y_norm) {
      trace.early_stopped = true;
      break;
    }

    OmpIteration it;
    it.k = k;
    it.correlations = correlations(a, residual);

    double cmax = -1.0;
    for (int j = 1; j <= a.cols(); ++j) {
      if (contains(support, j)) continue;
      cmax = std::max(cmax, it.correlations[static_cast<std::size_t>(j - 1)]);
    }
    const double threshold = cmax - tie_tol * cmax;
    for (int j = 1; j <= a.cols(); ++j) {
      if (contains(support, j)) continue;
      if (it.correlations[static_cast<std::size_t>(j - 1)] >= threshold) it.tied.push_back(j);
    }
    it.tie = it.tied.size() > 1;
    it.selected = pick_from_tied(it.tied, policy);

    support.insert(std::upper_bound(support.begin(), support.end(), it.selected), it.selected);
    support_cols0.clear();
    for (int j : support) support_cols0.push_back(j - 1);

    const DenseMatrix a_t = select_columns(a, support_cols0);
    coeffs = least_squares(a_t, y);
    Vector fitted = matvec(a_t, coeffs);
    for (std::size_t i = 0; i < residual.size(); ++i) residual[i] = y[i] - fitted[i];

    it.support_after = support;
    it.residual_norm = norm2(residual);
    trace.iterations.push_back(std::move(it));
  }

  if (!support.empty()) trace.final_estimate = estimate_from(a.cols(), support, coeffs);
  return trace;
}

RecoveryCheck exact_recovery_check(const DenseMatrix& a, const SparseSignal& x, int sparsity,
                                   TiePolicy policy, double tie_tol) {
  if (x.len != a.cols()) fail(Errc::dimension_mismatch, "exact_recovery_check: signal length != cols");
  if (x.support.empty()) fail(Errc::zero_vector, "exact_recovery_check: signal is zero");
  if (!is_k_sparse(x, sparsity))
    fail(Errc::invalid_argument, "exact_recovery_check: signal has more than K nonzeros");
  if (policy.kind == TiePolicy::Kind::kAdversarial && policy.true_support.empty())
    policy.true_support = x.support;

  const Vector y = matvec(a, to_dense(x));

  RecoveryCheck result;
  result.trace = omp_run(a, y, sparsity, policy, tie_tol);
  const SparseSignal& est = result.trace.final_estimate;
  result.recovered = same_support(est, x) &&
                     max_value_diff(est, x) <= kRecoveryTol * std::max(1.0, norm2(x));
  return result;
}

}  // namespace riclab

#include "riclab/ric.hpp"

#include <algorithm>
#include <cmath>

#include "riclab/errors.hpp"
#include "riclab/linalg.hpp"
#include "riclab/subsets.hpp"

namespace riclab {

RicReport exact_ric(const DenseMatrix& a, int order, long long budget) {
  if (order < 1 || order > a.cols())
    fail(Errc::index_out_of_range, "exact_ric: order must be in [1, cols]");
  if (budget < 1) fail(Errc::invalid_argument, "exact_ric: budget must be positive");

  const unsigned long long count =
      binomial_capped(a.cols(), order, static_cast<unsigned long long>(budget));
  if (count > static_cast<unsigned long long>(budget))
    fail(Errc::budget_exceeded, "exact_ric: C(cols, k) exceeds the enumeration budget");

  RicReport report;
  report.order = order;
  report.delta = -1.0;
  report.lambda_min = std::numeric_limits<double>::infinity();
  report.lambda_max = -std::numeric_limits<double>::infinity();

  for (SubsetIterator it(a.cols(), order); !it.done(); it.advance()) {
    ++report.subsets_examined;
    const std::vector<double> eigs = sym_eigenvalues(gram_submatrix0(a, it.current()));
    const double lo = eigs.front();
    const double hi = eigs.back();
    report.lambda_min = std::min(report.lambda_min, lo);
    report.lambda_max = std::max(report.lambda_max, hi);
    const double dev = std::max(hi - 1.0, 1.0 - lo);
    // strict improvement keeps the lexicographically first witness
    if (dev > report.delta) {
      report.delta = dev;
      report.witness_subset.clear();
      for (int c : it.current()) report.witness_subset.push_back(c + 1);
    }
  }
  return report;
}

ConditionReport evaluate_conditions(double delta, int sparsity_k) {
  if (delta < 0.0) fail(Errc::invalid_argument, "evaluate_conditions: delta must be >= 0");
  if (sparsity_k < 1) fail(Errc::invalid_argument, "evaluate_conditions: K must be >= 1");

  const double sqrt_k = std::sqrt(static_cast<double>(sparsity_k));
  const double sqrt_k1 = std::sqrt(static_cast<double>(sparsity_k) + 1.0);

  ConditionReport report;
  report.sparsity_k = sparsity_k;
  report.delta_measured = delta;

  auto add = [&](std::string name, double threshold, bool strict, bool geq) {
    ConditionRow row;
    row.name = std::move(name);
    row.threshold = threshold;
    row.strict = strict;
    row.geq = geq;
    if (geq)
      row.satisfied = strict ? (delta > threshold) : (delta >= threshold);
    else
      row.satisfied = strict ? (delta < threshold) : (delta <= threshold);
    report.rows.push_back(std::move(row));
  };

  add("sufficient: delta <= 1/(sqrt(K)+1)", 1.0 / (sqrt_k + 1.0), false, false);
  add("sufficient: delta < 1/(sqrt(K)+1)", 1.0 / (sqrt_k + 1.0), true, false);
  add("sufficient: delta < 1/(3*sqrt(K))", 1.0 / (3.0 * sqrt_k), true, false);
  add("sufficient: delta < 1/((1+sqrt(2))*sqrt(K))", 1.0 / ((1.0 + std::sqrt(2.0)) * sqrt_k), true,
      false);
  add("failure region: delta >= 1/sqrt(K+1) (a failing pair exists at this delta)",
      1.0 / sqrt_k1, false, true);
  return report;
}

DisjointCorrelationResult restricted_orthogonality_check(const DenseMatrix& a,
                                                         const SparseSignal& x,
                                                         const SparseSignal& xp, double delta,
                                                         double tol) {
  if (x.support.empty() || xp.support.empty())
    fail(Errc::zero_vector, "restricted_orthogonality_check: zero signal");
  if (x.len != a.cols() || xp.len != a.cols())
    fail(Errc::dimension_mismatch, "restricted_orthogonality_check: signal length != cols");
  for (int i : x.support)
    for (int j : xp.support)
      if (i == j) fail(Errc::overlapping_supports, "supports share index " + std::to_string(i));

  const double nx = norm2(x);
  const double nxp = norm2(xp);
  Vector xd = to_dense(x);
  Vector xpd = to_dense(xp);
  for (double& v : xd) v /= nx;
  for (double& v : xpd) v /= nxp;

  const Vector ax = matvec(a, xd);
  const Vector axp = matvec(a, xpd);

  DisjointCorrelationResult r;
  r.inner = std::abs(dot(ax, axp));
  r.energy_sum = dot(ax, ax) + dot(axp, axp);
  r.bound_holds = r.inner <= delta + tol;
  r.equality = std::abs(r.inner - delta) <= tol;
  r.implication_holds = !r.equality || std::abs(r.energy_sum - 2.0) <= tol;
  return r;
}

GramBoundsResult gram_action_bounds_check(const DenseMatrix& a, const std::vector<int>& s_one_based,
                                          const SparseSignal& x, double delta_s, double tol) {
  if (delta_s >= 1.0) fail(Errc::delta_too_large, "gram_action_bounds_check: delta_S >= 1");
  if (x.len != a.cols())
    fail(Errc::dimension_mismatch, "gram_action_bounds_check: signal length != cols");

  std::vector<int> s_sorted = s_one_based;
  std::sort(s_sorted.begin(), s_sorted.end());
  for (int idx : x.support)
    if (!std::binary_search(s_sorted.begin(), s_sorted.end(), idx))
      fail(Errc::support_violation, "supp(x) not contained in S");

  std::vector<int> cols0;
  cols0.reserve(s_sorted.size());
  for (int t : s_sorted) {
    if (t < 1 || t > a.cols()) fail(Errc::index_out_of_range, "S index out of [1, cols]");
    cols0.push_back(t - 1);
  }

  // x restricted to S, in S order
  Vector xs(s_sorted.size(), 0.0);
  for (std::size_t i = 0; i < x.support.size(); ++i) {
    const auto pos = std::lower_bound(s_sorted.begin(), s_sorted.end(), x.support[i]);
    xs[static_cast<std::size_t>(pos - s_sorted.begin())] = x.values[i];
  }

  const DenseMatrix a_s = select_columns(a, cols0);
  const Vector g = matvec_transpose(a_s, matvec(a_s, xs));

  GramBoundsResult r;
  r.value = norm2(g);
  const double nx = norm2(x);
  r.lower_ok = r.value >= (1.0 - delta_s) * nx - tol;
  r.upper_ok = r.value <= (1.0 + delta_s) * nx + tol;
  return r;
}

bool coordinate_correlation_bound_check(const DenseMatrix& a, const SparseSignal& x,
                                        int j_one_based, double delta, double tol) {
  if (x.len != a.cols())
    fail(Errc::dimension_mismatch, "coordinate_correlation_bound_check: signal length != cols");
  if (j_one_based < 1 || j_one_based > a.cols())
    fail(Errc::index_out_of_range, "coordinate index out of [1, cols]");
  for (int idx : x.support)
    if (idx == j_one_based)
      fail(Errc::support_violation, "coordinate lies inside supp(x)");

  const Vector ax = matvec(a, to_dense(x));
  const Vector aj = column(a, j_one_based - 1);
  return std::abs(dot(aj, ax)) <= delta * norm2(x) + tol;
}

}  // namespace riclab

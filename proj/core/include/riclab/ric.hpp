#ifndef RICLAB_RIC_HPP
#define RICLAB_RIC_HPP

#include <string>
#include <vector>

#include "riclab/dense.hpp"
#include "riclab/signal.hpp"

namespace riclab {

inline constexpr long long kDefaultRicBudget = 5'000'000;
inline constexpr double kDefaultCheckTol = 1e-9;

// Exact order-k restricted isometry constant with an attaining witness.
struct RicReport {
  int order = 0;
  double delta = 0.0;
  std::vector<int> witness_subset;  // 1-based, ascending, lexicographically first attaining
  double lambda_min = 0.0;          // extremal Gram eigenvalues over all subsets
  double lambda_max = 0.0;
  long long subsets_examined = 0;
};

// delta_k by exhaustive enumeration of every size-k column subset:
// delta_k = max over subsets of max(lambda_max - 1, 1 - lambda_min) of the
// subset Gram matrix. Never samples; throws BudgetExceeded when C(cols, k)
// is beyond `budget`.
RicReport exact_ric(const DenseMatrix& a, int order, long long budget = kDefaultRicBudget);

struct ConditionRow {
  std::string name;
  double threshold = 0.0;
  bool strict = false;   // strict comparison against the threshold
  bool geq = false;      // false: satisfied when delta is below the threshold
                         // true:  satisfied when delta is at or above it
  bool satisfied = false;
};

struct ConditionReport {
  int sparsity_k = 0;
  double delta_measured = 0.0;
  std::vector<ConditionRow> rows;
};

// Compares a measured delta_{K+1} against the published recovery thresholds
// (the sharp non-strict 1/(sqrt(K)+1) bound, its strict predecessor, the two
// earlier 1/sqrt(K)-scale bounds) and the failure region delta >= 1/sqrt(K+1)
// where a failing matrix/signal pair is known to exist.
ConditionReport evaluate_conditions(double delta, int sparsity_k);

struct DisjointCorrelationResult {
  double inner = 0.0;        // |<A xbar, A xbar'>| for the unit-normalized pair
  bool bound_holds = false;  // inner <= delta + tol
  bool equality = false;     // |inner - delta| <= tol
  double energy_sum = 0.0;   // ||A xbar||^2 + ||A xbar'||^2
  bool implication_holds = false;  // equality implies energy_sum == 2
};

// Checks the parallelogram-identity bound for disjointly supported signals:
// the normalized cross-correlation never exceeds delta, and when it attains
// delta the two image energies must sum to 2. Only this forward implication
// is asserted; the converse fails on a concrete instance (see the gap /
// witness reports).
DisjointCorrelationResult restricted_orthogonality_check(const DenseMatrix& a,
                                                         const SparseSignal& x,
                                                         const SparseSignal& xp, double delta,
                                                         double tol = kDefaultCheckTol);

struct GramBoundsResult {
  bool lower_ok = false;
  bool upper_ok = false;
  double value = 0.0;  // ||A_S^T A_S x_S||_2
};

// (1 - delta_S)||x|| <= ||A_S^T A_S x_S|| <= (1 + delta_S)||x|| for any x
// supported on S, requiring delta_S < 1.
GramBoundsResult gram_action_bounds_check(const DenseMatrix& a, const std::vector<int>& s_one_based,
                                          const SparseSignal& x, double delta_s,
                                          double tol = kDefaultCheckTol);

// |<a_j, A x>| <= delta * ||x||_2 + tol for j outside supp(x), with delta a
// valid constant of order |supp(x)| + 1.
bool coordinate_correlation_bound_check(const DenseMatrix& a, const SparseSignal& x, int j_one_based,
                                        double delta, double tol = kDefaultCheckTol);

}  // namespace riclab

#endif

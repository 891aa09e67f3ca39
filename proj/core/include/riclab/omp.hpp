#ifndef RICLAB_OMP_HPP
#define RICLAB_OMP_HPP

#include <string>
#include <vector>

#include "riclab/dense.hpp"
#include "riclab/signal.hpp"

namespace riclab {

// Ties within tie_tol*max of the maximal correlation are treated as exact
// ties; the boundary construction produces them by design and floating point
// turns them into near-ties.
inline constexpr double kDefaultTieTol = 1e-9;
inline constexpr double kRecoveryTol = 1e-8;
inline constexpr double kEarlyStopRel = 1e-12;

// Rule for resolving tied maximal correlations. Adversarial prefers a tied
// index outside the supplied true support when one exists, which is the
// resolution that exhibits first-iteration failure at the boundary.
struct TiePolicy {
  enum class Kind { kSmallestIndex, kLargestIndex, kAdversarial };

  Kind kind = Kind::kSmallestIndex;
  std::vector<int> true_support;  // 1-based; required for kAdversarial

  static TiePolicy smallest() { return {Kind::kSmallestIndex, {}}; }
  static TiePolicy largest() { return {Kind::kLargestIndex, {}}; }
  static TiePolicy adversarial(std::vector<int> support_one_based) {
    return {Kind::kAdversarial, std::move(support_one_based)};
  }
};

std::string policy_name(TiePolicy::Kind kind);

struct OmpIteration {
  int k = 0;                      // iteration number, 1-based
  Vector correlations;            // |<r^{k-1}, a_j>| for every column j
  int selected = 0;               // chosen column, 1-based
  bool tie = false;               // more than one candidate within tolerance
  std::vector<int> tied;          // the tied candidate set, 1-based, ascending
  std::vector<int> support_after; // T^k, 1-based, ascending
  double residual_norm = 0.0;     // ||r^k||_2
};

struct OmpTrace {
  std::vector<OmpIteration> iterations;
  SparseSignal final_estimate;
  bool early_stopped = false;
};

// Entry j is |<r, a_j>|; all entries nonnegative.
Vector correlations(const DenseMatrix& a, const Vector& r);

// Orthogonal matching pursuit: exactly K greedy selections (r^0 = y,
// T^0 = empty), each followed by a least-squares re-projection onto the
// selected columns. Selection maximizes over not-yet-selected columns, which
// coincides with the plain argmax whenever the residual is nonzero and keeps
// |T^k| = k in degenerate all-zero-correlation iterations. With `early_stop`
// the loop exits once ||r||_2 <= 1e-12*||y||_2.
OmpTrace omp_run(const DenseMatrix& a, const Vector& y, int sparsity,
                 const TiePolicy& policy, double tie_tol = kDefaultTieTol,
                 bool early_stop = false);

struct RecoveryCheck {
  bool recovered = false;
  OmpTrace trace;
};

// Runs OMP on y = A x and compares the estimate against x: identical support
// and max value difference <= 1e-8 * max(1, ||x||_2). Zero signals are
// rejected. An adversarial policy with no support set is given supp(x).
RecoveryCheck exact_recovery_check(const DenseMatrix& a, const SparseSignal& x, int sparsity,
                                   TiePolicy policy, double tie_tol = kDefaultTieTol);

}  // namespace riclab

#endif

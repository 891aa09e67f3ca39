#ifndef RICLAB_ORACLE_HPP
#define RICLAB_ORACLE_HPP

#include "riclab/dense.hpp"
#include "riclab/signal.hpp"

namespace riclab {

inline constexpr long long kDefaultOracleBudget = 2'000'000;

struct L0Result {
  SparseSignal signal;
  double residual_norm = 0.0;
  long long supports_tried = 0;
  long long supports_skipped = 0;  // rank-deficient column subsets
};

// Exhaustive best K-term approximation: least squares on every size-K column
// subset, minimum residual wins, ties resolved by lexicographically smallest
// support. Ground truth for the greedy path; refuses to run beyond `budget`
// subsets rather than sampling.
L0Result l0_oracle(const DenseMatrix& a, const Vector& y, int sparsity,
                   long long budget = kDefaultOracleBudget);

}  // namespace riclab

#endif

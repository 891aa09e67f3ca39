#ifndef RICLAB_SIGNAL_HPP
#define RICLAB_SIGNAL_HPP

#include <vector>

#include "riclab/dense.hpp"

namespace riclab {

// Sparse vector as (support, values). Support indices are 1-based, sorted,
// distinct and in [1, len]; stored values are nonzero.
struct SparseSignal {
  int len = 0;
  std::vector<int> support;
  std::vector<double> values;
};

// Validates and canonicalizes (sorts support, permuting values alongside).
// Entries with an exactly-zero value are dropped, so the support is always
// the true support.
SparseSignal make_sparse_signal(int len, std::vector<int> support, std::vector<double> values);

Vector to_dense(const SparseSignal& x);

bool is_k_sparse(const SparseSignal& x, int k);

double norm2(const SparseSignal& x);

bool same_support(const SparseSignal& a, const SparseSignal& b);

// max_i |a_i - b_i| over the union of supports.
double max_value_diff(const SparseSignal& a, const SparseSignal& b);

}  // namespace riclab

#endif

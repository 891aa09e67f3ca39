#include "riclab/oracle.hpp"

#include <cmath>

#include "riclab/errors.hpp"
#include "riclab/linalg.hpp"
#include "riclab/subsets.hpp"

namespace riclab {

L0Result l0_oracle(const DenseMatrix& a, const Vector& y, int sparsity, long long budget) {
  if (static_cast<int>(y.size()) != a.rows())
    fail(Errc::dimension_mismatch, "l0_oracle: measurement length != rows");
  if (sparsity < 1 || sparsity > a.cols())
    fail(Errc::invalid_argument, "l0_oracle: sparsity must be in [1, cols]");
  if (budget < 1) fail(Errc::invalid_argument, "l0_oracle: budget must be positive");

  const unsigned long long count =
      binomial_capped(a.cols(), sparsity, static_cast<unsigned long long>(budget));
  if (count > static_cast<unsigned long long>(budget))
    fail(Errc::budget_exceeded, "l0_oracle: C(cols, K) exceeds the enumeration budget");

  L0Result best;
  bool have_best = false;

  for (SubsetIterator it(a.cols(), sparsity); !it.done(); it.advance()) {
    ++best.supports_tried;
    const std::vector<int>& cols0 = it.current();
    Vector z;
    try {
      z = least_squares(select_columns(a, cols0), y);
    } catch (const Error& e) {
      if (e.code() == Errc::rank_deficient) {
        ++best.supports_skipped;
        continue;
      }
      throw;
    }
    Vector fitted = matvec(select_columns(a, cols0), z);
    double r2 = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double d = y[i] - fitted[i];
      r2 += d * d;
    }
    // strict improvement keeps the lexicographically first minimizer
    if (!have_best || r2 < best.residual_norm) {
      std::vector<int> support;
      support.reserve(cols0.size());
      for (int c : cols0) support.push_back(c + 1);
      best.signal = make_sparse_signal(a.cols(), support, z);
      best.residual_norm = r2;
      have_best = true;
    }
  }

  if (!have_best)
    fail(Errc::rank_deficient, "l0_oracle: every size-K column subset is rank deficient");
  best.residual_norm = std::sqrt(best.residual_norm);
  return best;
}

}  // namespace riclab

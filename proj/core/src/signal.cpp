#include "riclab/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "riclab/errors.hpp"

namespace riclab {

SparseSignal make_sparse_signal(int len, std::vector<int> support, std::vector<double> values) {
  if (len <= 0) fail(Errc::invalid_argument, "signal length must be positive");
  if (support.size() != values.size())
    fail(Errc::dimension_mismatch, "support and value counts differ");

  std::vector<std::size_t> order(support.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });

  SparseSignal x;
  x.len = len;
  int prev = 0;
  for (std::size_t p : order) {
    const int idx = support[p];
    const double v = values[p];
    if (idx < 1 || idx > len) fail(Errc::index_out_of_range, "support index out of [1, len]");
    if (idx == prev) fail(Errc::invalid_argument, "duplicate support index");
    if (!std::isfinite(v)) fail(Errc::invalid_argument, "signal values must be finite");
    prev = idx;
    if (v == 0.0) continue;
    x.support.push_back(idx);
    x.values.push_back(v);
  }
  return x;
}

Vector to_dense(const SparseSignal& x) {
  Vector v(static_cast<std::size_t>(x.len), 0.0);
  for (std::size_t i = 0; i < x.support.size(); ++i)
    v[static_cast<std::size_t>(x.support[i] - 1)] = x.values[i];
  return v;
}

bool is_k_sparse(const SparseSignal& x, int k) {
  return static_cast<int>(x.support.size()) <= k;
}

double norm2(const SparseSignal& x) {
  double s = 0.0;
  for (double v : x.values) s += v * v;
  return std::sqrt(s);
}

bool same_support(const SparseSignal& a, const SparseSignal& b) {
  return a.len == b.len && a.support == b.support;
}

double max_value_diff(const SparseSignal& a, const SparseSignal& b) {
  double m = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.support.size() || j < b.support.size()) {
    if (j >= b.support.size() || (i < a.support.size() && a.support[i] < b.support[j])) {
      m = std::max(m, std::abs(a.values[i]));
      ++i;
    } else if (i >= a.support.size() || b.support[j] < a.support[i]) {
      m = std::max(m, std::abs(b.values[j]));
      ++j;
    } else {
      m = std::max(m, std::abs(a.values[i] - b.values[j]));
      ++i;
      ++j;
    }
  }
  return m;
}

}  // namespace riclab

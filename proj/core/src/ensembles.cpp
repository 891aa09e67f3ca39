#include "riclab/ensembles.hpp"

#include <cmath>

#include "riclab/errors.hpp"

namespace riclab {

DenseMatrix normalize_columns(DenseMatrix a) {
  for (int j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i) s += a(i, j) * a(i, j);
    const double nrm = std::sqrt(s);
    if (nrm == 0.0) continue;
    for (int i = 0; i < a.rows(); ++i) a(i, j) /= nrm;
  }
  return a;
}

DenseMatrix random_column_normalized(int rows, int cols, Rng& rng) {
  DenseMatrix a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = rng.normal();
  return normalize_columns(std::move(a));
}

DenseMatrix random_orthonormal_columns(int rows, int cols, Rng& rng) {
  if (rows < cols)
    fail(Errc::invalid_argument, "random_orthonormal_columns: rows must be >= cols");
  DenseMatrix w(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) w(i, j) = rng.normal();

  // Householder QR; Q assembled by applying the reflectors to I.
  std::vector<std::vector<double>> vs;
  std::vector<double> vtvs;
  vs.reserve(static_cast<std::size_t>(cols));
  for (int j = 0; j < cols; ++j) {
    double sigma2 = 0.0;
    for (int i = j; i < rows; ++i) sigma2 += w(i, j) * w(i, j);
    const double sigma = std::sqrt(sigma2);
    std::vector<double> v(static_cast<std::size_t>(rows), 0.0);
    double vtv = 0.0;
    if (sigma > 0.0) {
      const double wjj = w(j, j);
      const double alpha = (wjj >= 0.0) ? -sigma : sigma;
      v[static_cast<std::size_t>(j)] = wjj - alpha;
      for (int i = j + 1; i < rows; ++i) v[static_cast<std::size_t>(i)] = w(i, j);
      vtv = 2.0 * sigma * (sigma + std::abs(wjj));
      for (int col = j; col < cols; ++col) {
        double vtc = 0.0;
        for (int i = j; i < rows; ++i) vtc += v[static_cast<std::size_t>(i)] * w(i, col);
        const double f = 2.0 * vtc / vtv;
        for (int i = j; i < rows; ++i) w(i, col) -= f * v[static_cast<std::size_t>(i)];
      }
    }
    vs.push_back(std::move(v));
    vtvs.push_back(vtv);
  }

  DenseMatrix q(rows, cols);
  for (int j = 0; j < cols; ++j) {
    std::vector<double> e(static_cast<std::size_t>(rows), 0.0);
    e[static_cast<std::size_t>(j)] = 1.0;
    // Q e_j = H_0 H_1 ... H_{cols-1} e_j
    for (int r = cols - 1; r >= 0; --r) {
      if (vtvs[static_cast<std::size_t>(r)] == 0.0) continue;
      const auto& v = vs[static_cast<std::size_t>(r)];
      double vte = 0.0;
      for (int i = r; i < rows; ++i) vte += v[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(i)];
      const double f = 2.0 * vte / vtvs[static_cast<std::size_t>(r)];
      for (int i = r; i < rows; ++i) e[static_cast<std::size_t>(i)] -= f * v[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < rows; ++i) q(i, j) = e[static_cast<std::size_t>(i)];
  }
  return q;
}

DenseMatrix near_orthogonal(int rows, int cols, double eps, Rng& rng) {
  DenseMatrix q = random_orthonormal_columns(rows, cols, rng);
  const double scale = eps / std::sqrt(static_cast<double>(rows));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) q(i, j) += scale * rng.normal();
  return normalize_columns(std::move(q));
}

DenseMatrix random_tight_frame(int rows, int cols, Rng& rng) {
  if (cols < rows) fail(Errc::invalid_argument, "random_tight_frame: cols must be >= rows");
  DenseMatrix qt = random_orthonormal_columns(cols, rows, rng);
  return normalize_columns(transpose(qt));
}

}  // namespace riclab

#include "riclab/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "riclab/errors.hpp"

namespace riclab {

namespace {

void require_square(const DenseMatrix& m, const char* who) {
  if (m.rows() != m.cols()) fail(Errc::not_square, std::string(who) + ": matrix is not square");
}

double max_asymmetry(const DenseMatrix& m) {
  double a = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j) a = std::max(a, std::abs(m(i, j) - m(j, i)));
  return a;
}

}  // namespace

std::vector<double> sym_eigenvalues(const DenseMatrix& s, double tol) {
  require_square(s, "sym_eigenvalues");
  const int n = s.rows();
  const double scale = max_abs(s);
  if (max_asymmetry(s) > tol * std::max(1.0, scale))
    fail(Errc::not_symmetric, "asymmetry exceeds tolerance");

  std::vector<double> eigs(static_cast<std::size_t>(n), 0.0);
  if (scale == 0.0) return eigs;

  DenseMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (s(i, j) + s(j, i));

  const int max_sweeps = 64;
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(2.0 * off) <= 1e-15 * n * scale) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (int k = 0; k < n; ++k) {  // A <- A J
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {  // A <- J^T A
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        // annihilated in exact arithmetic; pin to keep symmetry bit-exact
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  if (!converged) fail(Errc::numerical_failure, "Jacobi iteration did not converge");

  for (int i = 0; i < n; ++i) eigs[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

DenseMatrix spd_upper_factor(const DenseMatrix& c) {
  require_square(c, "spd_upper_factor");
  const double scale = max_abs(c);
  if (max_asymmetry(c) > kSymmetryTol * std::max(1.0, scale))
    fail(Errc::not_symmetric, "asymmetry exceeds tolerance");

  const int n = c.rows();
  DenseMatrix r(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      double sum = c(i, j);
      for (int k = 0; k < i; ++k) sum -= r(k, i) * r(k, j);
      r(i, j) = sum / r(i, i);
    }
    double d = c(j, j);
    for (int k = 0; k < j; ++k) d -= r(k, j) * r(k, j);
    if (d <= 0.0)
      fail(Errc::not_positive_definite, "nonpositive pivot at column " + std::to_string(j + 1));
    r(j, j) = std::sqrt(d);
  }
  return r;
}

Vector least_squares(const DenseMatrix& a, const Vector& y) {
  const int m = a.rows();
  const int p = a.cols();
  if (static_cast<int>(y.size()) != m)
    fail(Errc::dimension_mismatch, "least_squares: vector length != rows");
  if (m < p) fail(Errc::rank_deficient, "least_squares: fewer rows than columns");

  DenseMatrix w = a;
  Vector u = y;
  std::vector<double> v(static_cast<std::size_t>(m));
  for (int j = 0; j < p; ++j) {
    double sigma2 = 0.0;
    for (int i = j; i < m; ++i) sigma2 += w(i, j) * w(i, j);
    const double sigma = std::sqrt(sigma2);
    if (sigma == 0.0) continue;  // zero column tail; caught by the rank test

    const double wjj = w(j, j);
    const double alpha = (wjj >= 0.0) ? -sigma : sigma;
    v[static_cast<std::size_t>(j)] = wjj - alpha;
    for (int i = j + 1; i < m; ++i) v[static_cast<std::size_t>(i)] = w(i, j);
    const double vtv = 2.0 * sigma * (sigma + std::abs(wjj));

    for (int col = j + 1; col < p; ++col) {
      double vtc = 0.0;
      for (int i = j; i < m; ++i) vtc += v[static_cast<std::size_t>(i)] * w(i, col);
      const double f = 2.0 * vtc / vtv;
      for (int i = j; i < m; ++i) w(i, col) -= f * v[static_cast<std::size_t>(i)];
    }
    double vtu = 0.0;
    for (int i = j; i < m; ++i) vtu += v[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i)];
    const double fu = 2.0 * vtu / vtv;
    for (int i = j; i < m; ++i) u[static_cast<std::size_t>(i)] -= fu * v[static_cast<std::size_t>(i)];

    w(j, j) = alpha;
    for (int i = j + 1; i < m; ++i) w(i, j) = 0.0;
  }

  double dmax = 0.0;
  for (int j = 0; j < p; ++j) dmax = std::max(dmax, std::abs(w(j, j)));
  if (dmax == 0.0) fail(Errc::rank_deficient, "least_squares: zero matrix");
  for (int j = 0; j < p; ++j)
    if (std::abs(w(j, j)) <= 1e-12 * dmax)
      fail(Errc::rank_deficient, "least_squares: numerically dependent columns");

  Vector z(static_cast<std::size_t>(p), 0.0);
  for (int i = p - 1; i >= 0; --i) {
    double s = u[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < p; ++k) s -= w(i, k) * z[static_cast<std::size_t>(k)];
    z[static_cast<std::size_t>(i)] = s / w(i, i);
  }
  return z;
}

DenseMatrix gram_submatrix0(const DenseMatrix& a, const std::vector<int>& cols0) {
  const int k = static_cast<int>(cols0.size());
  DenseMatrix g(k, k);
  for (int p = 0; p < k; ++p) {
    for (int q = p; q < k; ++q) {
      double s = 0.0;
      for (int i = 0; i < a.rows(); ++i) s += a(i, cols0[static_cast<std::size_t>(p)]) * a(i, cols0[static_cast<std::size_t>(q)]);
      g(p, q) = s;
      g(q, p) = s;
    }
  }
  return g;
}

DenseMatrix gram_submatrix(const DenseMatrix& a, const std::vector<int>& t_one_based) {
  if (t_one_based.empty()) fail(Errc::invalid_argument, "gram_submatrix: empty index set");
  std::vector<int> cols0;
  cols0.reserve(t_one_based.size());
  for (int t : t_one_based) {
    if (t < 1 || t > a.cols()) fail(Errc::index_out_of_range, "gram_submatrix: index out of [1, cols]");
    for (int seen : cols0)
      if (seen == t - 1) fail(Errc::invalid_argument, "gram_submatrix: duplicate index");
    cols0.push_back(t - 1);
  }
  return gram_submatrix0(a, cols0);
}

}  // namespace riclab

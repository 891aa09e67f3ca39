#include "riclab/dense.hpp"

#include <cmath>
#include <cstdio>

#include "riclab/errors.hpp"

namespace riclab {

DenseMatrix::DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) fail(Errc::invalid_argument, "matrix dimensions must be positive");
  entries_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

DenseMatrix::DenseMatrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows <= 0 || cols <= 0) fail(Errc::invalid_argument, "matrix dimensions must be positive");
  if (entries_.size() != static_cast<std::size_t>(rows) * cols)
    fail(Errc::dimension_mismatch, "entry count does not equal rows*cols");
  if (!all_finite()) fail(Errc::invalid_argument, "matrix entries must be finite");
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<double>& d) {
  DenseMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

bool DenseMatrix::all_finite() const {
  for (double v : entries_)
    if (!std::isfinite(v)) return false;
  return true;
}

Vector matvec(const DenseMatrix& a, const Vector& x) {
  if (static_cast<int>(x.size()) != a.cols())
    fail(Errc::dimension_mismatch, "matvec: vector length != cols");
  Vector y(static_cast<std::size_t>(a.rows()), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

Vector matvec_transpose(const DenseMatrix& a, const Vector& r) {
  if (static_cast<int>(r.size()) != a.rows())
    fail(Errc::dimension_mismatch, "matvec_transpose: vector length != rows");
  Vector y(static_cast<std::size_t>(a.cols()), 0.0);
  for (int j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i) s += a(i, j) * r[static_cast<std::size_t>(i)];
    y[static_cast<std::size_t>(j)] = s;
  }
  return y;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) fail(Errc::dimension_mismatch, "matmul: inner dimensions differ");
  DenseMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

DenseMatrix select_columns(const DenseMatrix& a, const std::vector<int>& cols0) {
  if (cols0.empty()) fail(Errc::invalid_argument, "select_columns: empty index set");
  DenseMatrix s(a.rows(), static_cast<int>(cols0.size()));
  for (std::size_t j = 0; j < cols0.size(); ++j) {
    int c = cols0[j];
    if (c < 0 || c >= a.cols()) fail(Errc::index_out_of_range, "column index out of range");
    for (int i = 0; i < a.rows(); ++i) s(i, static_cast<int>(j)) = a(i, c);
  }
  return s;
}

Vector column(const DenseMatrix& a, int col0) {
  if (col0 < 0 || col0 >= a.cols()) fail(Errc::index_out_of_range, "column index out of range");
  Vector v(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) v[static_cast<std::size_t>(i)] = a(i, col0);
  return v;
}

double dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) fail(Errc::dimension_mismatch, "dot: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm2(const Vector& x) { return std::sqrt(dot(x, x)); }

double max_abs(const DenseMatrix& a) {
  double m = 0.0;
  for (double v : a.entries()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::dimension_mismatch, "max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

std::string format_double17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string matrix_digest(const DenseMatrix& a) {
  std::string text = std::to_string(a.rows()) + " " + std::to_string(a.cols());
  for (double v : a.entries()) {
    text += ' ';
    text += format_double17(v);
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(text)));
  return buf;
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::not_square: return "NotSquare";
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::numerical_failure: return "NumericalFailure";
    case Errc::not_positive_definite: return "NotPositiveDefinite";
    case Errc::rank_deficient: return "RankDeficient";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::overlapping_supports: return "OverlappingSupports";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::support_violation: return "SupportViolation";
    case Errc::delta_too_large: return "DeltaTooLarge";
    case Errc::t_out_of_range: return "TOutOfRange";
    case Errc::k_too_small: return "KTooSmall";
    case Errc::verification_failed: return "VerificationFailed";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace riclab

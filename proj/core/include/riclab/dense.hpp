#ifndef RICLAB_DENSE_HPP
#define RICLAB_DENSE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace riclab {

using Vector = std::vector<double>;

// Row-major dense real matrix. Entries are validated finite on construction;
// dimensions are strictly positive.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols);  // zero-filled
  DenseMatrix(int rows, int cols, std::vector<double> entries);

  static DenseMatrix identity(int n);
  static DenseMatrix diagonal(const std::vector<double>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  double& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }

  const std::vector<double>& entries() const { return entries_; }

  bool all_finite() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> entries_;
};

Vector matvec(const DenseMatrix& a, const Vector& x);            // A x
Vector matvec_transpose(const DenseMatrix& a, const Vector& r);  // A^T r
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& a);

// Columns of `a` picked by 0-based indices, in the given order.
DenseMatrix select_columns(const DenseMatrix& a, const std::vector<int>& cols0);
Vector column(const DenseMatrix& a, int col0);

double dot(const Vector& x, const Vector& y);
double norm2(const Vector& x);
double max_abs(const DenseMatrix& a);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

// Shortest decimal form that round-trips a 64-bit double (17 significant digits).
std::string format_double17(double v);

std::uint64_t fnv1a64(std::string_view data);

// Hash of the canonical decimal serialization ("rows cols" header plus
// row-major entries); identifies a matrix in reports reproducibly.
std::string matrix_digest(const DenseMatrix& a);

}  // namespace riclab

#endif

#ifndef RICLAB_LINALG_HPP
#define RICLAB_LINALG_HPP

#include <vector>

#include "riclab/dense.hpp"

namespace riclab {

inline constexpr double kSymmetryTol = 1e-12;

// All eigenvalues of the symmetrized (S + S^T)/2, ascending, with
// multiplicity. Cyclic Jacobi with a fixed sweep cap: bit-deterministic for a
// fixed input, throws NumericalFailure instead of degrading silently.
// `tol` bounds the accepted asymmetry, relative to max(1, ||S||_max).
std::vector<double> sym_eigenvalues(const DenseMatrix& s, double tol = kSymmetryTol);

// Upper-triangular R with R^T R = C for symmetric positive definite C,
// computed column-by-column so strictly-subdiagonal entries are exactly zero
// and diagonal entries are strictly positive. A nonpositive pivot throws
// NotPositiveDefinite.
DenseMatrix spd_upper_factor(const DenseMatrix& c);

// Minimizer of ||y - A z||_2 via Householder QR. Requires full column rank
// (relative R-diagonal test at 1e-12); the computed residual is orthogonal to
// every column of A far within the 1e-10*||y||_2 contract.
Vector least_squares(const DenseMatrix& a, const Vector& y);

// |T| x |T| Gram matrix of the columns of `a` picked by the 1-based index set
// T, exactly symmetric by construction.
DenseMatrix gram_submatrix(const DenseMatrix& a, const std::vector<int>& t_one_based);

// Internal variant on 0-based indices (hot path for subset enumeration).
DenseMatrix gram_submatrix0(const DenseMatrix& a, const std::vector<int>& cols0);

}  // namespace riclab

#endif

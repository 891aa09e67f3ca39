#ifndef RICLAB_ENSEMBLES_HPP
#define RICLAB_ENSEMBLES_HPP

#include "riclab/dense.hpp"
#include "riclab/rng.hpp"

namespace riclab {

// Seeded matrix generators for the experiment commands and tests.

// Rescales every column to unit Euclidean norm (zero columns are left alone).
DenseMatrix normalize_columns(DenseMatrix a);

// i.i.d. standard normal entries, columns scaled to unit norm.
DenseMatrix random_column_normalized(int rows, int cols, Rng& rng);

// Q with Q^T Q = I (rows >= cols), from Householder QR of a Gaussian draw.
DenseMatrix random_orthonormal_columns(int rows, int cols, Rng& rng);

// Orthonormal columns plus an entrywise perturbation of magnitude ~eps per
// column, re-normalized. Small eps keeps all restricted isometry constants
// near zero.
DenseMatrix near_orthogonal(int rows, int cols, double eps, Rng& rng);

// Unit-norm frame with nearly orthonormal rows (cols >= rows): columns of a
// random row-orthonormal matrix, re-normalized. Deviations from isometry stay
// moderate even when cols > rows.
DenseMatrix random_tight_frame(int rows, int cols, Rng& rng);

}  // namespace riclab

#endif

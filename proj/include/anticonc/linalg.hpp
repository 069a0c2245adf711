#pragma once

#include <Eigen/Dense>
#include <vector>

namespace anticonc {

// Result of a diagonally pivoted Cholesky factorization of a symmetric PSD
// matrix A: P A P^T = L L^T with L n-by-rank and P the permutation that
// brings the largest remaining pivot to the front at every step.
struct PivotedCholesky {
  Eigen::MatrixXd factor;      // n x rank, lower trapezoidal in pivoted order
  std::vector<int> perm;       // perm[j] = original index of pivoted row j
  int rank = 0;
  double min_pivot = 0.0;      // most negative pivot encountered (0 if none)
  bool psd = true;             // false iff a pivot fell below the tolerance
};

// tol is the absolute pivot floor, typically rel_tol * max(diag(A)).
// Pivots in (-tol, tol] terminate the factorization (rank detected);
// a pivot below -tol marks the matrix as not PSD.
PivotedCholesky pivoted_cholesky(const Eigen::MatrixXd& a, double tol);

// Lower-triangular Cholesky factor of a PSD matrix that may be singular:
// columns whose pivot falls below tol are zeroed instead of aborting, so
// L L^T reproduces A for exactly rank-deficient inputs (duplicate or
// mirrored coordinates). Caller must have established PSD-ness first.
Eigen::MatrixXd cholesky_psd_lower(const Eigen::MatrixXd& a, double tol);

}  // namespace anticonc

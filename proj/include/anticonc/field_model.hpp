#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace anticonc {

// Validated Gaussian field specification: mean vector, covariance matrix and
// the cached factorization used for sampling. Immutable after construction,
// safe to share across threads.
class FieldSpec {
 public:
  // Validates symmetry (1e-12 relative) and positive semi-definiteness
  // (pivoted Cholesky, pivot floor -1e-10 * max diagonal). No PSD repair is
  // attempted: a failing matrix is reported, never projected.
  // Throws DimensionMismatchError, NotSymmetricError, NotPsdError.
  static FieldSpec validate(Eigen::VectorXd mu, Eigen::MatrixXd sigma);

  // Unit-variance field with constant pairwise correlation rho.
  // Requires -1/(n-1) < rho < 1; throws RhoOutOfRangeError.
  static FieldSpec equicorrelated(int n, double rho);

  int dim() const noexcept { return static_cast<int>(mu_.size()); }
  const Eigen::VectorXd& mean() const noexcept { return mu_; }
  const Eigen::MatrixXd& cov() const noexcept { return sigma_; }
  // Lower-triangular factor with chol * chol^T == cov; singular directions
  // appear as zero columns.
  const Eigen::MatrixXd& chol() const noexcept { return chol_; }
  const Eigen::VectorXd& variances() const noexcept { return variances_; }
  int rank() const noexcept { return rank_; }

  double sd(int i) const { return std::sqrt(variances_[i]); }
  // 0 if either coordinate is degenerate.
  double correlation(int i, int j) const;

  // Stable content hash (means, covariance); used as the opaque spec_id in
  // sample batches and reports.
  std::string id() const;

 private:
  FieldSpec(Eigen::VectorXd mu, Eigen::MatrixXd sigma, Eigen::MatrixXd chol,
            int rank);

  Eigen::VectorXd mu_;
  Eigen::MatrixXd sigma_;
  Eigen::MatrixXd chol_;
  Eigen::VectorXd variances_;
  int rank_;
};

enum class DropReason { kZeroVariance, kDuplicate };

struct DroppedCoordinate {
  int index = -1;
  DropReason reason = DropReason::kZeroVariance;
  int duplicate_of = -1;  // kept coordinate it duplicates, -1 for variance drops
};

// Outcome of deleting degenerate / perfectly correlated coordinates.
// When every coordinate is degenerate (`all_degenerate`), the max is the
// constant `degenerate_max` and Q(max, eps) == 1 for every eps; `reduced`
// is absent in that case.
struct DegeneracyReport {
  std::vector<int> kept;
  std::vector<DroppedCoordinate> dropped;
  std::optional<FieldSpec> reduced;
  bool all_degenerate = false;
  double degenerate_max = 0.0;
};

// Deletes coordinates with variance below tol (relative to the largest
// diagonal entry) and duplicates (correlation >= 1 - tol with equal means
// and equal sds within tol; the lower index survives). Idempotent. Note the
// zero-variance deletion leaves the law of the max unchanged exactly when
// the deleted constant is a.s. dominated, which holds in the |X|-max and
// augmented-field settings this is used for.
DegeneracyReport reduce_degenerate(const FieldSpec& spec, double tol = 1e-9);

// Mirror augmentation: the 2n-dimensional field (X, -X), whose maximum
// equals max_i |X_i| pathwise. Mean negated and covariance sign-flipped on
// the mirrored block.
FieldSpec augment_for_abs(const FieldSpec& spec);

}  // namespace anticonc

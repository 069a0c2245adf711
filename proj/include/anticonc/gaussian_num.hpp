#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "anticonc/field_model.hpp"

namespace anticonc {

// Scalar Gaussian kernels.
//
// erf/erfc follow W. J. Cody's rational Chebyshev approximations
// (Math. Comp. 23, 1969; SPECFUN coefficients), certified to a maximal
// relative error below 1.2e-16 in double precision, so pdf/cdf/erf are
// accurate to well under the 1e-14 absolute target. The quantile is
// Wichura's algorithm AS241 (Applied Statistics 37, 1988), accurate to
// about one part in 1e15.
double norm_pdf(double x);
double norm_cdf(double x);
double erf_accurate(double x);
double erfc_accurate(double x);
// Requires 0 < p < 1; throws QuantileDomainError.
double norm_quantile(double p);

enum class StdNormalKind { kPdf, kCdf, kErf, kQuantile };
double std_normal(StdNormalKind kind, double x);

// Law of (X_j)_{j != i} given X_i = z: affine conditional means
// intercept + slope * z with the fixed Schur-complement covariance.
struct ConditionalSpec {
  int conditioned_index = 0;
  Eigen::VectorXd intercept;  // length n-1, original coordinate order sans i
  Eigen::VectorXd slope;      //   "    (slope_j = sigma_ji / sigma_ii)
  Eigen::MatrixXd cond_cov;   // (n-1)x(n-1) Schur complement

  Eigen::VectorXd mean_at(double z) const { return intercept + slope * z; }
};

// Requires Var(X_i) > 0; throws ZeroVarianceCoordinateError.
ConditionalSpec condition_on_coordinate(const FieldSpec& spec, int i);

enum class RectMethod { kClosedForm1d, kClosedForm2dOrthant, kQmc, kPlainMc };

struct RectProbEstimate {
  double p = 0.0;
  double se = 0.0;
  RectMethod method = RectMethod::kQmc;
  bool se_target_met = true;  // false if the budget ran out first
};

// P{ lower < X <= upper } for X ~ N(mean, cov); +-infinity bounds allowed.
// The half-open convention only matters for degenerate coordinates, where
// the event becomes an indicator; continuous coordinates are unaffected.
//
// Dimension 1 is exact via the normal cdf; bivariate boxes reducible to an
// orthant at the means use arcsin closed forms; everything else runs the
// Genz sequential-conditioning integrand over a randomized rank-1 lattice
// (32 random shifts, variables reordered by increasing interval
// probability). Points are added until se <= max(1e-5, p*1e-3) or `budget`
// integrand evaluations are spent, whichever is first. A rank-deficient
// conditional factor falls back to plain Monte Carlo.
//
// Deterministic given (seed, budget). Throws BoxEmptyError, NotPsdError,
// DimensionMismatchError.
RectProbEstimate rectangle_probability(const Eigen::MatrixXd& cov,
                                       Eigen::VectorXd lower,
                                       Eigen::VectorXd upper,
                                       Eigen::VectorXd mean, int budget,
                                       std::uint64_t seed = 0);

}  // namespace anticonc

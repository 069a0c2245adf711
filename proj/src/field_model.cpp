#include "anticonc/field_model.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>

#include "anticonc/errors.hpp"
#include "anticonc/linalg.hpp"

namespace anticonc {

namespace {

constexpr double kSymmetryRelTol = 1e-12;
constexpr double kPsdRelTol = 1e-10;

std::uint64_t fnv1a(const double* data, std::size_t count, std::uint64_t h) {
  const auto* bytes = reinterpret_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < count * sizeof(double); ++i) {
    h ^= bytes[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

FieldSpec::FieldSpec(Eigen::VectorXd mu, Eigen::MatrixXd sigma,
                     Eigen::MatrixXd chol, int rank)
    : mu_(std::move(mu)),
      sigma_(std::move(sigma)),
      chol_(std::move(chol)),
      variances_(sigma_.diagonal()),
      rank_(rank) {}

FieldSpec FieldSpec::validate(Eigen::VectorXd mu, Eigen::MatrixXd sigma) {
  const auto n = mu.size();
  if (n < 1) throw DimensionMismatchError("mean vector must be non-empty");
  if (sigma.rows() != n || sigma.cols() != n) {
    throw DimensionMismatchError("covariance is " +
                                 std::to_string(sigma.rows()) + "x" +
                                 std::to_string(sigma.cols()) +
                                 ", expected " + std::to_string(n) + "x" +
                                 std::to_string(n));
  }
  if (!mu.allFinite() || !sigma.allFinite()) {
    throw DimensionMismatchError("mean/covariance entries must be finite");
  }

  const double scale = sigma.cwiseAbs().maxCoeff();
  const double asym = (sigma - sigma.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryRelTol * std::max(scale, 1.0)) {
    throw NotSymmetricError("covariance asymmetry " + std::to_string(asym) +
                            " exceeds tolerance");
  }
  // Work with the symmetrized matrix so the factor matches it exactly.
  Eigen::MatrixXd sym = 0.5 * (sigma + sigma.transpose());

  const double max_diag = sym.diagonal().maxCoeff();
  if (max_diag < 0.0) {
    throw NotPsdError("negative variance on the diagonal", max_diag);
  }
  const double pivot_tol = kPsdRelTol * std::max(max_diag, 1.0);
  PivotedCholesky pc = pivoted_cholesky(sym, pivot_tol);
  if (!pc.psd) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", pc.min_pivot);
    throw NotPsdError(
        "covariance is not positive semi-definite (most negative pivot " +
            std::string(buf) + ")",
        pc.min_pivot);
  }

  Eigen::MatrixXd chol = cholesky_psd_lower(sym, pivot_tol);
  return FieldSpec(std::move(mu), std::move(sym), std::move(chol), pc.rank);
}

FieldSpec FieldSpec::equicorrelated(int n, double rho) {
  if (n < 1) throw DimensionMismatchError("dimension must be positive");
  const double lo = (n > 1) ? -1.0 / (n - 1) : -1.0;
  if (!(rho > lo && rho < 1.0)) {
    throw RhoOutOfRangeError("rho=" + std::to_string(rho) +
                             " outside (" + std::to_string(lo) + ", 1)");
  }
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Constant(n, n, rho);
  sigma.diagonal().setOnes();
  return validate(Eigen::VectorXd::Zero(n), std::move(sigma));
}

double FieldSpec::correlation(int i, int j) const {
  const double denom = std::sqrt(variances_[i] * variances_[j]);
  if (denom <= 0.0) return 0.0;
  return sigma_(i, j) / denom;
}

std::string FieldSpec::id() const {
  std::uint64_t h = 1469598103934665603ull;
  h = fnv1a(mu_.data(), static_cast<std::size_t>(mu_.size()), h);
  h = fnv1a(sigma_.data(), static_cast<std::size_t>(sigma_.size()), h);
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

DegeneracyReport reduce_degenerate(const FieldSpec& spec, double tol) {
  const int n = spec.dim();
  const double max_var = std::max(spec.variances().maxCoeff(), 0.0);
  const double var_tol = tol * std::max(max_var, 1.0);

  DegeneracyReport report;
  for (int i = 0; i < n; ++i) {
    if (spec.variances()[i] <= var_tol) {
      report.dropped.push_back({i, DropReason::kZeroVariance, -1});
      continue;
    }
    bool duplicate = false;
    for (int j : report.kept) {
      const bool same_mean = std::abs(spec.mean()[i] - spec.mean()[j]) <= tol;
      const bool same_sd =
          std::abs(spec.sd(i) - spec.sd(j)) <= tol * std::max(1.0, spec.sd(j));
      if (same_mean && same_sd && spec.correlation(i, j) >= 1.0 - tol) {
        report.dropped.push_back({i, DropReason::kDuplicate, j});
        duplicate = true;
        break;
      }
    }
    if (!duplicate) report.kept.push_back(i);
  }

  if (report.kept.empty()) {
    report.all_degenerate = true;
    report.degenerate_max = spec.mean().maxCoeff();
    return report;
  }

  const auto m = static_cast<int>(report.kept.size());
  Eigen::VectorXd mu(m);
  Eigen::MatrixXd sigma(m, m);
  for (int a = 0; a < m; ++a) {
    mu[a] = spec.mean()[report.kept[a]];
    for (int b = 0; b < m; ++b) {
      sigma(a, b) = spec.cov()(report.kept[a], report.kept[b]);
    }
  }
  report.reduced = FieldSpec::validate(std::move(mu), std::move(sigma));
  return report;
}

FieldSpec augment_for_abs(const FieldSpec& spec) {
  const int n = spec.dim();
  Eigen::VectorXd mu(2 * n);
  mu.head(n) = spec.mean();
  mu.tail(n) = -spec.mean();
  Eigen::MatrixXd sigma(2 * n, 2 * n);
  sigma.topLeftCorner(n, n) = spec.cov();
  sigma.bottomRightCorner(n, n) = spec.cov();
  sigma.topRightCorner(n, n) = -spec.cov();
  sigma.bottomLeftCorner(n, n) = -spec.cov();
  return FieldSpec::validate(std::move(mu), std::move(sigma));
}

}  // namespace anticonc

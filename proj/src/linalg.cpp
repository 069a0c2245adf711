#include "anticonc/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace anticonc {

PivotedCholesky pivoted_cholesky(const Eigen::MatrixXd& a, double tol) {
  const int n = static_cast<int>(a.rows());
  PivotedCholesky out;
  out.perm.resize(n);
  for (int i = 0; i < n; ++i) out.perm[i] = i;

  Eigen::MatrixXd work = a;
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  int rank = 0;
  double min_pivot = 0.0;

  for (int j = 0; j < n; ++j) {
    // Bring the largest remaining diagonal entry to position j.
    int piv = j;
    for (int i = j + 1; i < n; ++i) {
      if (work(i, i) > work(piv, piv)) piv = i;
    }
    if (piv != j) {
      work.row(j).swap(work.row(piv));
      work.col(j).swap(work.col(piv));
      l.row(j).swap(l.row(piv));
      std::swap(out.perm[j], out.perm[piv]);
    }

    const double d = work(j, j);
    min_pivot = std::min(min_pivot, d);
    if (d < -tol) {
      out.psd = false;
      break;
    }
    if (d <= tol) break;  // remaining block is numerically zero: rank found

    const double root = std::sqrt(d);
    l(j, j) = root;
    for (int i = j + 1; i < n; ++i) l(i, j) = work(i, j) / root;
    for (int i = j + 1; i < n; ++i) {
      for (int k = j + 1; k <= i; ++k) {
        work(i, k) -= l(i, j) * l(k, j);
        work(k, i) = work(i, k);
      }
    }
    ++rank;
  }

  out.rank = rank;
  out.min_pivot = min_pivot;
  out.factor = l.leftCols(rank);
  return out;
}

Eigen::MatrixXd cholesky_psd_lower(const Eigen::MatrixXd& a, double tol) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    double d = a(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d <= tol) continue;  // singular direction: keep the column at zero
    const double root = std::sqrt(d);
    l(j, j) = root;
    for (int i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / root;
    }
  }
  return l;
}

}  // namespace anticonc

#include "qec/hyperplane.hpp"

#include <cmath>

#include "qec/errors.hpp"

namespace qec {

namespace {

// Applies H^T to each column of `m` (n rows -> n-1 rows) in O(n) per column
// using running prefix sums.
Eigen::MatrixXd apply_helmert_transpose(const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd out(n - 1, m.cols());
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    double prefix = 0.0;
    for (Eigen::Index k = 1; k < n; ++k) {
      prefix += m(k - 1, c);
      const double kk = static_cast<double>(k);
      out(k - 1, c) = (prefix - kk * m(k, c)) / std::sqrt(kk * (kk + 1.0));
    }
  }
  return out;
}

}  // namespace

Eigen::MatrixXd helmert_basis(Eigen::Index n) {
  if (n < 2) throw InvalidParameterError("hyperplane basis needs n >= 2");
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n - 1);
  for (Eigen::Index k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double s = 1.0 / std::sqrt(kk * (kk + 1.0));
    h.col(k - 1).head(k).setConstant(s);
    h(k, k - 1) = -kk * s;
  }
  return h;
}

Eigen::MatrixXd restrict_to_hyperplane(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || a.rows() < 2) {
    throw InvalidParameterError("hyperplane restriction needs a square matrix of size >= 2");
  }
  const Eigen::MatrixXd half = apply_helmert_transpose(a);              // H^T A
  const Eigen::MatrixXd full = apply_helmert_transpose(half.transpose());  // H^T (H^T A)^T
  return 0.5 * (full + full.transpose());
}

Eigen::VectorXd lift_from_hyperplane(const Eigen::VectorXd& y) {
  const Eigen::Index n = y.size() + 1;
  Eigen::VectorXd z = Eigen::VectorXd::Zero(n);
  // z_i = sum_{k > i, k >= 1} y_{k-1}/sqrt(k(k+1)) - [i >= 1] * i * y_{i-1}/sqrt(i(i+1))
  double suffix = 0.0;
  for (Eigen::Index k = n - 1; k >= 1; --k) {
    const double kk = static_cast<double>(k);
    const double s = 1.0 / std::sqrt(kk * (kk + 1.0));
    z(k) = suffix - kk * s * y(k - 1);
    suffix += s * y(k - 1);
  }
  z(0) = suffix;
  return z;
}

void fix_sign(Eigen::VectorXd& v, double tol) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > tol) {
      if (v(i) < 0) v = -v;
      return;
    }
  }
}

}  // namespace qec

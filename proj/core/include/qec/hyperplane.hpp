#pragma once

#include <Eigen/Core>

namespace qec {

/// Orthonormal basis of the hyperplane {z in R^n : <1, z> = 0}, as the
/// columns of an n x (n-1) matrix.
///
/// Column k-1 (k = 1..n-1) has its first k entries equal to 1/sqrt(k(k+1))
/// and entry k equal to -k/sqrt(k(k+1)); the remaining entries are zero.
Eigen::MatrixXd helmert_basis(Eigen::Index n);

/// H^T A H for the Helmert basis H, without materialising H.
Eigen::MatrixXd restrict_to_hyperplane(const Eigen::MatrixXd& a);

/// Maps reduced coordinates y (length n-1) back to z = H y in R^n.
Eigen::VectorXd lift_from_hyperplane(const Eigen::VectorXd& y);

/// Flips the sign of v so that its first entry with |v_i| > tol is positive.
void fix_sign(Eigen::VectorXd& v, double tol = 1e-12);

}  // namespace qec

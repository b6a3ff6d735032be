#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include "qec/graph.hpp"

namespace qec {

using Rational = boost::multiprecision::cpp_rational;

enum class QecMethod { projected_eigen, path_pencil };

std::string_view to_string(QecMethod m);

struct QECResult {
  double value = 0.0;
  /// Unit vector orthogonal to the all-ones vector attaining the supremum,
  /// first nonzero coordinate positive.
  Eigen::VectorXd optimizer;
  QecMethod method = QecMethod::projected_eigen;
  /// Sup-norm of P D f - value f, with P the projection onto the hyperplane.
  double residual = 0.0;
};

/// Distance matrix as a dense double matrix.
Eigen::MatrixXd to_matrix(const DistanceMatrix& d);

/// sup <f, D f> over unit f with <1, f> = 0, as the largest eigenvalue of D
/// restricted to the hyperplane. Throws InvalidParameterError for a single
/// vertex.
QECResult qec_exact(const Graph& g);
QECResult qec_exact(const DistanceMatrix& d);

/// <f, D f> / <f, f>. Throws InvalidParameterError when f is zero, has the
/// wrong length, or |<1, f>| exceeds 1e-10 (relative to sum |f_i| when that
/// is larger than one).
double qec_rayleigh(const Graph& g, const Eigen::VectorXd& f);
double qec_rayleigh(const DistanceMatrix& d, const Eigen::VectorXd& f);

/// QEC(P_n) through the pencil ([2 min(i, j)], J + I) of size n - 1:
/// -c where c is the smallest generalized eigenvalue. Requires n >= 2.
double qec_path_pencil(std::size_t n);

struct PathBounds {
  Rational lower_exact;  // -(2n^4 + 20n^2 - 7 + 15(-1)^n) / (4n^4 - 4 + 15n + 15n(-1)^n)
  double lower = 0.0;
  double upper = -0.5;
};

/// Two-sided bound on QEC(P_n), n >= 2.
PathBounds thm56_bounds(std::size_t n);

/// f(i) = i (n - i) (-1)^i for 1 <= i <= n - 1, f(0) = -sum_i f(i).
/// Requires n >= 2.
Eigen::VectorXd alternating_witness(std::size_t n);

/// qec_exact(g) < -1 / (|V| - 1). Throws NotATreeError for a non-tree.
bool tree_qec_bound_check(const Graph& g);

}  // namespace qec

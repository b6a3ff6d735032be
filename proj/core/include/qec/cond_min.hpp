#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace qec {

/// phi(x0, x_1..x_r) = sum_j a_j (<x_j, x_j> + <1, x_j>^2) on
/// R^{1 + d_1 + ... + d_r}, all d_j finite.
class PhiInstance {
 public:
  /// Throws InvalidParameterError unless r >= 1, sizes match, a_j > 0 and
  /// d_j >= 1.
  PhiInstance(std::vector<double> a, std::vector<std::size_t> d);

  std::size_t size() const { return a_.size(); }
  std::span<const double> a() const { return a_; }
  std::span<const std::size_t> d() const { return d_; }

  /// 1 + sum d_j.
  std::size_t dimension() const { return dimension_; }

  /// Offset of block j inside the flat vector z = (x0, x_1, ..., x_r).
  std::size_t offset(std::size_t j) const { return offsets_[j]; }

  /// Block-diagonal matrix of phi: zero for x0, a_j (I + J) for block j.
  Eigen::MatrixXd matrix() const;

 private:
  std::vector<double> a_;
  std::vector<std::size_t> d_;
  std::vector<std::size_t> offsets_;
  std::size_t dimension_ = 0;
};

struct PhiPoint {
  double x0 = 0.0;
  std::vector<Eigen::VectorXd> xs;

  /// Flattened (x0, x_1, ..., x_r).
  Eigen::VectorXd flatten() const;
  static PhiPoint unflatten(const PhiInstance& inst, const Eigen::VectorXd& z);
};

/// Throws InvalidParameterError on a block count or length mismatch.
double phi_eval(const PhiInstance& inst, double x0, std::span<const Eigen::VectorXd> xs);
double phi_eval(const PhiInstance& inst, const PhiPoint& point);

struct CondMinResult {
  double value = 0.0;
  PhiPoint argmin;
};

/// Conditional minimum of phi on the unit sphere intersected with the
/// hyperplane orthogonal to the all-ones vector.
///
/// Dense route: the smallest eigenvalue of phi's matrix restricted to the
/// hyperplane through the Helmert basis (dimension N - 1). The argmin is a
/// unit eigenvector whose first nonzero coordinate is positive, and the
/// returned value is phi_eval at that argmin.
CondMinResult cond_min(const PhiInstance& inst);

/// Same minimum through the block symmetry of phi, for large d_j.
///
/// Vectors whose blocks each sum to zero are eigenvectors of phi with
/// eigenvalue a_j (block j, multiplicity d_j - 1) and already lie in the
/// constraint hyperplane. What remains is an r-dimensional problem on
/// block-constant vectors, solved densely. No root finding is involved.
double cond_min_block_reduced(std::span<const double> a, std::span<const std::size_t> d);

/// Minimum when some a_j = 0 (all a_j >= 0): exactly 0.
/// Throws InvalidParameterError if every a_j is positive or any is negative.
double cond_min_zero_case(std::span<const double> a, std::span<const std::size_t> d);

inline constexpr double kFeasibilityTolerance = 1e-8;

/// Residual of the stationarity system at (x0, xs) with multiplier lambda and
/// mu := -2 lambda x0: the max over j of the sup-norm of
///   2 a_j x_j + 2 a_j <1, x_j> 1 - 2 lambda x_j - mu 1.
/// Throws InvalidParameterError when (x0, xs) violates either constraint by
/// more than 1e-8.
double stationarity_residual(const PhiInstance& inst, double x0,
                             std::span<const Eigen::VectorXd> xs, double lambda);

/// Solution set of (J - alpha I) x = beta 1 for the m x m all-ones matrix J.
struct JShiftSolution {
  enum class Kind {
    unique,        // x = particular
    affine,        // x = particular + Ker J, dim Ker J = m - 1
    span_of_ones,  // x = c 1
    none
  };
  Kind kind = Kind::none;
  Eigen::VectorXd particular;
  std::size_t kernel_dimension = 0;
};

/// Throws InvalidParameterError when m == 0.
JShiftSolution solve_J_shift(std::size_t m, double alpha, double beta);

}  // namespace qec

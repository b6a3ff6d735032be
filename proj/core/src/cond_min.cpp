#include "qec/cond_min.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "qec/errors.hpp"
#include "qec/hyperplane.hpp"

namespace qec {

PhiInstance::PhiInstance(std::vector<double> a, std::vector<std::size_t> d)
    : a_(std::move(a)), d_(std::move(d)) {
  if (a_.empty()) throw InvalidParameterError("phi needs r >= 1");
  if (a_.size() != d_.size()) throw InvalidParameterError("a and d must have the same length");
  for (double aj : a_) {
    if (!(aj > 0.0) || !std::isfinite(aj)) {
      throw InvalidParameterError("every a_j must be positive (use cond_min_zero_case for a_j = 0)");
    }
  }
  std::size_t offset = 1;
  for (std::size_t dj : d_) {
    if (dj < 1) throw InvalidParameterError("every d_j must be >= 1");
    offsets_.push_back(offset);
    offset += dj;
  }
  dimension_ = offset;
}

Eigen::MatrixXd PhiInstance::matrix() const {
  const auto n = static_cast<Eigen::Index>(dimension_);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t j = 0; j < size(); ++j) {
    const auto off = static_cast<Eigen::Index>(offsets_[j]);
    const auto len = static_cast<Eigen::Index>(d_[j]);
    m.block(off, off, len, len).setConstant(a_[j]);
    m.block(off, off, len, len).diagonal().array() += a_[j];
  }
  return m;
}

Eigen::VectorXd PhiPoint::flatten() const {
  Eigen::Index n = 1;
  for (const auto& x : xs) n += x.size();
  Eigen::VectorXd z(n);
  z(0) = x0;
  Eigen::Index off = 1;
  for (const auto& x : xs) {
    z.segment(off, x.size()) = x;
    off += x.size();
  }
  return z;
}

PhiPoint PhiPoint::unflatten(const PhiInstance& inst, const Eigen::VectorXd& z) {
  if (static_cast<std::size_t>(z.size()) != inst.dimension()) {
    throw InvalidParameterError("vector length does not match phi's dimension");
  }
  PhiPoint p;
  p.x0 = z(0);
  for (std::size_t j = 0; j < inst.size(); ++j) {
    p.xs.push_back(z.segment(static_cast<Eigen::Index>(inst.offset(j)),
                             static_cast<Eigen::Index>(inst.d()[j])));
  }
  return p;
}

namespace {

void check_shape(const PhiInstance& inst, std::span<const Eigen::VectorXd> xs) {
  if (xs.size() != inst.size()) {
    throw InvalidParameterError("expected " + std::to_string(inst.size()) + " blocks, got " +
                                std::to_string(xs.size()));
  }
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (static_cast<std::size_t>(xs[j].size()) != inst.d()[j]) {
      throw InvalidParameterError("block " + std::to_string(j) + " has length " +
                                  std::to_string(xs[j].size()) + ", expected " +
                                  std::to_string(inst.d()[j]));
    }
  }
}

}  // namespace

double phi_eval(const PhiInstance& inst, double /*x0*/, std::span<const Eigen::VectorXd> xs) {
  check_shape(inst, xs);
  double total = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const double s = xs[j].sum();
    total += inst.a()[j] * (xs[j].squaredNorm() + s * s);
  }
  return total;
}

double phi_eval(const PhiInstance& inst, const PhiPoint& point) {
  return phi_eval(inst, point.x0, point.xs);
}

CondMinResult cond_min(const PhiInstance& inst) {
  const Eigen::MatrixXd reduced = restrict_to_hyperplane(inst.matrix());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(reduced);
  if (eig.info() != Eigen::Success) throw Error("eigen-decomposition failed");
  Eigen::VectorXd z = lift_from_hyperplane(eig.eigenvectors().col(0));
  z.normalize();
  fix_sign(z);
  CondMinResult out;
  out.argmin = PhiPoint::unflatten(inst, z);
  out.value = phi_eval(inst, out.argmin);
  return out;
}

double cond_min_block_reduced(std::span<const double> a, std::span<const std::size_t> d) {
  // Validates the same way as the dense route.
  const PhiInstance inst(std::vector<double>(a.begin(), a.end()),
                         std::vector<std::size_t>(d.begin(), d.end()));
  const auto r = static_cast<Eigen::Index>(a.size());

  // Orthonormal coordinates (x0, u_1, ..., u_r) with u_j = 1_j / sqrt(d_j):
  // phi is diag(0, a_j (1 + d_j)) and the all-ones vector is (1, sqrt(d_j)).
  Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(r + 1, r + 1);
  Eigen::VectorXd ones(r + 1);
  ones(0) = 1.0;
  for (Eigen::Index j = 0; j < r; ++j) {
    const double dj = static_cast<double>(d[static_cast<std::size_t>(j)]);
    phi(j + 1, j + 1) = a[static_cast<std::size_t>(j)] * (1.0 + dj);
    ones(j + 1) = std::sqrt(dj);
  }
  ones.normalize();

  // Complement of `ones` from the Householder reflector that maps it to e_0.
  Eigen::VectorXd v = ones;
  v(0) += (ones(0) >= 0.0 ? 1.0 : -1.0);
  v.normalize();
  const Eigen::MatrixXd reflector =
      Eigen::MatrixXd::Identity(r + 1, r + 1) - 2.0 * v * v.transpose();
  const Eigen::MatrixXd basis = reflector.rightCols(r);
  const Eigen::MatrixXd reduced = basis.transpose() * phi * basis;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(reduced, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw Error("eigen-decomposition failed");
  double best = eig.eigenvalues()(0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (d[j] >= 2) best = std::min(best, a[j]);
  }
  return best;
}

double cond_min_zero_case(std::span<const double> a, std::span<const std::size_t> d) {
  if (a.empty() || a.size() != d.size()) {
    throw InvalidParameterError("a and d must be nonempty and of the same length");
  }
  bool has_zero = false;
  for (double aj : a) {
    if (aj < 0.0 || !std::isfinite(aj)) throw InvalidParameterError("every a_j must be >= 0");
    has_zero = has_zero || aj == 0.0;
  }
  for (std::size_t dj : d) {
    if (dj < 1) throw InvalidParameterError("every d_j must be >= 1");
  }
  if (!has_zero) throw InvalidParameterError("no a_j is zero; use cond_min");
  return 0.0;
}

double stationarity_residual(const PhiInstance& inst, double x0,
                             std::span<const Eigen::VectorXd> xs, double lambda) {
  check_shape(inst, xs);
  double norm2 = x0 * x0;
  double total = x0;
  for (const auto& x : xs) {
    norm2 += x.squaredNorm();
    total += x.sum();
  }
  if (std::abs(norm2 - 1.0) > kFeasibilityTolerance) {
    throw InvalidParameterError("point is off the unit sphere");
  }
  if (std::abs(total) > kFeasibilityTolerance) {
    throw InvalidParameterError("point is not orthogonal to the all-ones vector");
  }
  const double mu = -2.0 * lambda * x0;
  double worst = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const double aj = inst.a()[j];
    const Eigen::VectorXd res =
        (2.0 * aj - 2.0 * lambda) * xs[j] +
        Eigen::VectorXd::Constant(xs[j].size(), 2.0 * aj * xs[j].sum() - mu);
    worst = std::max(worst, res.cwiseAbs().maxCoeff());
  }
  return worst;
}

JShiftSolution solve_J_shift(std::size_t m, double alpha, double beta) {
  if (m == 0) throw InvalidParameterError("dimension must be >= 1");
  const auto n = static_cast<Eigen::Index>(m);
  const double md = static_cast<double>(m);
  JShiftSolution s;
  if (alpha == 0.0) {
    s.kind = (m == 1) ? JShiftSolution::Kind::unique : JShiftSolution::Kind::affine;
    s.particular = Eigen::VectorXd::Constant(n, beta / md);
    s.kernel_dimension = m - 1;
  } else if (alpha == md) {
    if (beta == 0.0) {
      s.kind = JShiftSolution::Kind::span_of_ones;
      s.particular = Eigen::VectorXd::Zero(n);
      s.kernel_dimension = 1;
    } else {
      s.kind = JShiftSolution::Kind::none;
    }
  } else {
    s.kind = JShiftSolution::Kind::unique;
    s.particular = Eigen::VectorXd::Constant(n, beta / (md - alpha));
  }
  return s;
}

}  // namespace qec

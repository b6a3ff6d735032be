#include "qec/embedding_constant.hpp"

#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "qec/errors.hpp"
#include "qec/hyperplane.hpp"

namespace qec {

std::string_view to_string(QecMethod m) {
  switch (m) {
    case QecMethod::projected_eigen: return "projected_eigen";
    case QecMethod::path_pencil: return "path_pencil";
  }
  return "unknown";
}

Eigen::MatrixXd to_matrix(const DistanceMatrix& d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = d(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return m;
}

QECResult qec_exact(const DistanceMatrix& d) {
  if (d.size() < 2) throw InvalidParameterError("QEC needs at least two vertices");
  const Eigen::MatrixXd dm = to_matrix(d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(restrict_to_hyperplane(dm));
  if (eig.info() != Eigen::Success) throw Error("eigen-decomposition failed");
  const Eigen::Index top = eig.eigenvalues().size() - 1;

  QECResult out;
  out.value = eig.eigenvalues()(top);
  out.optimizer = lift_from_hyperplane(eig.eigenvectors().col(top));
  out.optimizer.normalize();
  fix_sign(out.optimizer);
  out.method = QecMethod::projected_eigen;

  Eigen::VectorXd r = dm * out.optimizer;
  r.array() -= r.mean();
  r -= out.value * out.optimizer;
  out.residual = r.cwiseAbs().maxCoeff();
  return out;
}

QECResult qec_exact(const Graph& g) { return qec_exact(distance_matrix(g)); }

double qec_rayleigh(const DistanceMatrix& d, const Eigen::VectorXd& f) {
  if (static_cast<std::size_t>(f.size()) != d.size()) {
    throw InvalidParameterError("vector length does not match the vertex count");
  }
  const double norm2 = f.squaredNorm();
  if (norm2 == 0.0) throw InvalidParameterError("f must be nonzero");
  const double scale = std::max(1.0, f.cwiseAbs().sum());
  if (std::abs(f.sum()) > 1e-10 * scale) {
    throw InvalidParameterError("f is not orthogonal to the all-ones vector");
  }
  return f.dot(to_matrix(d) * f) / norm2;
}

double qec_rayleigh(const Graph& g, const Eigen::VectorXd& f) {
  return qec_rayleigh(distance_matrix(g), f);
}

double qec_path_pencil(std::size_t n) {
  if (n < 2) throw InvalidParameterError("path pencil needs n >= 2");
  const auto m = static_cast<Eigen::Index>(n - 1);
  Eigen::MatrixXd mins(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) mins(i, j) = 2.0 * static_cast<double>(std::min(i, j) + 1);
  Eigen::MatrixXd b = Eigen::MatrixXd::Ones(m, m);
  b.diagonal().array() += 1.0;

  // c is the smallest eigenvalue of L^-1 M L^-T with J + I = L L^T.
  const Eigen::LLT<Eigen::MatrixXd> llt(b);
  if (llt.info() != Eigen::Success) throw Error("Cholesky factorisation of J + I failed");
  const auto lower = llt.matrixL();
  Eigen::MatrixXd tmp = lower.solve(mins);
  Eigen::MatrixXd sym = lower.solve(tmp.transpose()).transpose();
  sym = 0.5 * (sym + sym.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw Error("eigen-decomposition failed");
  return -eig.eigenvalues()(0);
}

PathBounds thm56_bounds(std::size_t n) {
  if (n < 2) throw InvalidParameterError("path bounds need n >= 2");
  using boost::multiprecision::cpp_int;
  const cpp_int nn = n;
  const int sign = (n % 2 == 0) ? 1 : -1;
  const cpp_int n2 = nn * nn;
  const cpp_int n4 = n2 * n2;
  const cpp_int num = 2 * n4 + 20 * n2 - 7 + 15 * sign;
  const cpp_int den = 4 * n4 - 4 + 15 * nn + 15 * nn * sign;
  PathBounds b;
  b.lower_exact = -Rational(num, den);
  b.lower = b.lower_exact.convert_to<double>();
  b.upper = -0.5;
  return b;
}

Eigen::VectorXd alternating_witness(std::size_t n) {
  if (n < 2) throw InvalidParameterError("alternating witness needs n >= 2");
  Eigen::VectorXd f = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  double total = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double v = static_cast<double>(i) * static_cast<double>(n - i) * (i % 2 == 0 ? 1.0 : -1.0);
    f(static_cast<Eigen::Index>(i)) = v;
    total += v;
  }
  f(0) = -total;
  return f;
}

bool tree_qec_bound_check(const Graph& g) {
  if (!g.is_tree()) throw NotATreeError("graph is not a tree");
  if (g.vertex_count() < 2) throw InvalidParameterError("tree bound needs at least two vertices");
  return qec_exact(g).value < -1.0 / static_cast<double>(g.vertex_count() - 1);
}

}  // namespace qec

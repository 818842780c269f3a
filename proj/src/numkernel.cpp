#include "gavekit/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "gavekit/errors.hpp"

namespace gavekit::num {
namespace {

double norm_inf(const Eigen::MatrixXd& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

void require_square(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": matrix must be square");
}

double power_iteration(const Eigen::MatrixXd& m, double shift) {
  const Eigen::Index n = m.rows();
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n) / std::sqrt(static_cast<double>(n));
  double previous = 0.0;
  for (int it = 0; it < kPowerMaxIterations; ++it) {
    Eigen::VectorXd y = m * x;
    if (shift != 0.0) y += shift * x;
    const double len = y.norm();
    if (len == 0.0) return 0.0;  // nilpotent: M^k 1 = 0 with M >= 0
    const double estimate = x.dot(y);
    if (it > 0 && std::abs(estimate - previous) < kPowerRelTol * std::abs(estimate)) {
      return estimate - shift;
    }
    previous = estimate;
    x = y / len;
  }
  throw ConvergenceError("power iteration did not converge in " +
                         std::to_string(kPowerMaxIterations) + " iterations");
}

}  // namespace

LuFactorization::LuFactorization(const Eigen::MatrixXd& m) {
  require_square(m, "LU");
  lu_.compute(m);
  const double scale = norm_inf(m);
  const double min_pivot = lu_.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(min_pivot >= kPivotRelTol * scale) || scale == 0.0) {
    throw SingularError("matrix is singular to working precision (min pivot " +
                        std::to_string(min_pivot) + ")");
  }
}

PivotSummary pivot_summary(const Eigen::MatrixXd& m) {
  require_square(m, "pivot_summary");
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  PivotSummary s;
  s.min_abs_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  s.norm_inf = norm_inf(m);
  s.determinant = lu.determinant();
  return s;
}

Vector solve_linear(const Matrix& m, const Vector& rhs) {
  if (!m.is_square() || rhs.size() != m.rows()) {
    throw std::invalid_argument("solve_linear: dimension mismatch");
  }
  return Vector(LuFactorization(m).solve(rhs.eigen()));
}

SigmaExtremes sigma_extremes(const Eigen::MatrixXd& m) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  return {s.maxCoeff(), s.minCoeff()};
}

SigmaExtremes sigma_extremes(const Matrix& m) { return sigma_extremes(m.eigen()); }

double sigma_max_gram(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(m.cols(), m.cols());
  gram.selfadjointView<Eigen::Lower>().rankUpdate(m.transpose());
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(eig.eigenvalues()(m.cols() - 1), 0.0));
}

bool is_symmetric(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) return false;
  return norm_inf(m - m.transpose()) <= 1e-12 * norm_inf(m);
}

bool is_symmetric(const Matrix& m) { return is_symmetric(m.eigen()); }

SymEigen sym_eigen(const Eigen::MatrixXd& m) {
  if (!is_symmetric(m)) throw NotSymmetricError("matrix is not symmetric");
  const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  SymEigen out;
  out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  const double tol = eigen_zero_tolerance(ev.cwiseAbs().maxCoeff());
  for (double lambda : out.eigenvalues) {
    if (std::abs(lambda) <= tol) ++out.signature.zero;
    else if (lambda > 0) ++out.signature.positive;
    else ++out.signature.negative;
  }
  return out;
}

SymEigen sym_eigen(const Matrix& m) { return sym_eigen(m.eigen()); }

bool is_positive_definite(const SymEigen& e) {
  return e.signature.positive == e.eigenvalues.size();
}

double nonneg_spectral_radius(const Eigen::MatrixXd& m) {
  require_square(m, "nonneg_spectral_radius");
  if ((m.array() < 0.0).any()) {
    throw std::invalid_argument("nonneg_spectral_radius: matrix has negative entries");
  }
  try {
    return power_iteration(m, 0.0);
  } catch (const ConvergenceError&) {
    // Periodic (cyclic) matrices oscillate; a positive shift makes the Perron
    // root strictly dominant without moving it.
    const double shift = norm_inf(m);
    return std::max(0.0, power_iteration(m, shift));
  }
}

double nonneg_spectral_radius(const Matrix& m) { return nonneg_spectral_radius(m.eigen()); }

Matrix comparison_matrix(const Matrix& m) {
  require_square(m.eigen(), "comparison_matrix");
  Eigen::MatrixXd c = -m.eigen().cwiseAbs();
  c.diagonal() = m.eigen().diagonal().cwiseAbs();
  return Matrix(std::move(c));
}

MMatrixCertificate is_nonsingular_m_matrix(const Matrix& m) {
  const Eigen::MatrixXd& a = m.eigen();
  require_square(a, "is_nonsingular_m_matrix");
  MMatrixCertificate cert;
  cert.gamma = a.diagonal().maxCoeff();
  const double tol = 1e-12 * norm_inf(a);
  cert.z_matrix = true;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j && a(i, j) > tol) cert.z_matrix = false;
  if (!cert.z_matrix || cert.gamma <= 0.0) return cert;

  Eigen::MatrixXd delta = -a;
  delta.diagonal().array() += cert.gamma;
  delta = delta.cwiseMax(0.0);
  cert.rho = nonneg_spectral_radius(delta);
  cert.holds = strictly_less(cert.rho, cert.gamma);
  return cert;
}

}  // namespace gavekit::num

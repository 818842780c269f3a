#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "gavekit/matrix.hpp"

namespace gavekit::num {

/// Pivots below this fraction of ||M||_inf mark M as singular.
inline constexpr double kPivotRelTol = 1e-13;
/// Iteration cap for the nonnegative power iteration.
inline constexpr int kPowerMaxIterations = 100000;
inline constexpr double kPowerRelTol = 1e-10;

/// Margin used to turn a strict inequality into a floating-point test.
inline double strict_margin(double rhs) { return 1e-10 * std::max(1.0, std::abs(rhs)); }

/// lhs < rhs, with boundary cases counted as failures.
inline bool strictly_less(double lhs, double rhs) { return lhs <= rhs - strict_margin(rhs); }

/// Zero-eigenvalue tolerance for a spectrum whose largest magnitude is max_abs.
inline double eigen_zero_tolerance(double max_abs) { return 1e-9 * std::max(1.0, max_abs); }

/// Partial-pivot LU of a square matrix. Construction throws SingularError
/// when a pivot falls under kPivotRelTol * ||M||_inf.
class LuFactorization {
 public:
  explicit LuFactorization(const Eigen::MatrixXd& m);
  explicit LuFactorization(const Matrix& m) : LuFactorization(m.eigen()) {}

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const { return lu_.solve(rhs); }
  Eigen::MatrixXd solve(const Eigen::MatrixXd& rhs) const { return lu_.solve(rhs); }
  Eigen::VectorXd solve_transpose(const Eigen::VectorXd& rhs) const {
    return lu_.transpose().solve(rhs);
  }

  double determinant() const { return lu_.determinant(); }
  std::size_t dim() const { return static_cast<std::size_t>(lu_.rows()); }

 private:
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

/// Smallest |pivot| of a partial-pivot LU relative to ||M||_inf, and the
/// determinant; used where singularity is a result rather than an error.
struct PivotSummary {
  double min_abs_pivot = 0.0;
  double norm_inf = 0.0;
  double determinant = 0.0;
  bool singular(double rel_tol = kPivotRelTol) const { return min_abs_pivot < rel_tol * norm_inf; }
};
PivotSummary pivot_summary(const Eigen::MatrixXd& m);

Vector solve_linear(const Matrix& m, const Vector& rhs);

struct SigmaExtremes {
  double sigma_max = 0.0;
  double sigma_min = 0.0;
};

SigmaExtremes sigma_extremes(const Matrix& m);
SigmaExtremes sigma_extremes(const Eigen::MatrixXd& m);

/// Largest singular value from the top eigenvalue of the Gram matrix M^T M.
double sigma_max_gram(const Eigen::MatrixXd& m);

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct SymEigen {
  std::vector<double> eigenvalues;  // ascending
  Signature signature;
};

bool is_symmetric(const Eigen::MatrixXd& m);
bool is_symmetric(const Matrix& m);

/// Eigenvalues and signature of a symmetric matrix; throws NotSymmetricError
/// if ||M - M^T||_inf > 1e-12 ||M||_inf.
SymEigen sym_eigen(const Matrix& m);
SymEigen sym_eigen(const Eigen::MatrixXd& m);

/// True iff every eigenvalue exceeds the zero tolerance.
bool is_positive_definite(const SymEigen& e);

/// Perron root of an entrywise nonnegative square matrix by power iteration
/// from the all-ones vector. Throws ConvergenceError at the iteration cap.
double nonneg_spectral_radius(const Matrix& m);
double nonneg_spectral_radius(const Eigen::MatrixXd& m);

/// |m_ii| on the diagonal, -|m_ij| off it.
Matrix comparison_matrix(const Matrix& m);

struct MMatrixCertificate {
  bool holds = false;
  bool z_matrix = false;
  double gamma = 0.0;  // max diagonal entry
  double rho = 0.0;    // spectral radius of gamma*I - M (0 when not a Z-matrix)
};

/// Nonsingular M-matrix test via M = gamma*I - Delta with gamma > rho(Delta).
/// Propagates ConvergenceError from the spectral radius.
MMatrixCertificate is_nonsingular_m_matrix(const Matrix& m);

}  // namespace gavekit::num

#include "gavekit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "gavekit/errors.hpp"
#include "gavekit/numkernel.hpp"

namespace gavekit::oracle {
namespace {

constexpr double kSignSlack = 1e-10;
constexpr double kDedupDistance = 1e-8;
constexpr double kVertexPivotRelTol = 1e-12;

void require_square_pair(const Matrix& a, const Matrix& b, const char* what) {
  if (!a.is_square() || b.rows() != a.rows() || b.cols() != a.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrices must be square of equal order");
  }
}

// Columns of B scaled by the sign pattern: B * D.
Eigen::MatrixXd times_signs(const Eigen::MatrixXd& b, const SignPattern& d) {
  Eigen::MatrixXd out = b;
  for (std::size_t j = 0; j < d.size(); ++j) out.col(static_cast<Eigen::Index>(j)) *= d.diag[j];
  return out;
}

}  // namespace

SignPattern SignPattern::from_bits(std::uint64_t bits, std::size_t n) {
  SignPattern d;
  d.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.diag[i] = ((bits >> i) & 1U) ? -1 : 1;
  return d;
}

SolutionSet enumerate_solutions(const GaveProblem& p, std::size_t cap) {
  const std::size_t n = p.n();
  if (n > cap) throw CapExceededError(n, cap);

  SolutionSet out;
  out.cap_used = cap;
  const Eigen::MatrixXd& a = p.A().eigen();
  const Eigen::MatrixXd& b = p.B().eigen();
  const std::uint64_t patterns = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < patterns; ++bits) {
    const SignPattern d = SignPattern::from_bits(bits, n);
    const Eigen::MatrixXd system = a - times_signs(b, d);
    Eigen::VectorXd x;
    try {
      x = num::LuFactorization(system).solve(p.b().eigen());
    } catch (const SingularError&) {
      ++out.degenerate_orthants;
      continue;
    }
    if (!x.allFinite()) continue;
    const double slack = kSignSlack * (1.0 + x.lpNorm<Eigen::Infinity>());
    bool consistent = true;
    for (std::size_t i = 0; i < n && consistent; ++i) {
      consistent = d.diag[i] * x(static_cast<Eigen::Index>(i)) >= -slack;
    }
    if (!consistent) continue;
    // Components on the wrong side by at most the slack are boundary zeros.
    for (std::size_t i = 0; i < n; ++i) {
      auto& xi = x(static_cast<Eigen::Index>(i));
      if (d.diag[i] * xi < 0) xi = 0.0;
    }
    const bool duplicate = std::any_of(out.solutions.begin(), out.solutions.end(), [&](const Vector& s) {
      return (s.eigen() - x).lpNorm<Eigen::Infinity>() <= kDedupDistance;
    });
    if (duplicate) continue;
    Vector candidate(std::move(x));
    if (is_solution(p, candidate)) out.solutions.push_back(std::move(candidate));
  }
  return out;
}

RegularityResult interval_regularity(const Matrix& C, const Matrix& Delta, std::size_t cap) {
  require_square_pair(C, Delta, "interval_regularity");
  if ((Delta.eigen().array() < -1e-12).any()) {
    throw std::invalid_argument("interval_regularity: radius matrix must be nonnegative");
  }
  const std::size_t n = C.rows();
  if (n > cap) throw CapExceededError(n, cap);

  const Eigen::MatrixXd& c = C.eigen();
  const Eigen::MatrixXd delta = Delta.eigen().cwiseMax(0.0);
  const double scale = C.norm_inf() + Delta.norm_inf();
  RegularityResult result;
  int reference_sign = 0;
  // Fixing d1[0] = +1 removes the (D1, D2) ~ (-D1, -D2) duplicates.
  const std::uint64_t left_patterns = std::uint64_t{1} << (n - 1);
  const std::uint64_t right_patterns = std::uint64_t{1} << n;
  for (std::uint64_t left = 0; left < left_patterns; ++left) {
    const SignPattern d1 = SignPattern::from_bits(left << 1, n);
    for (std::uint64_t right = 0; right < right_patterns; ++right) {
      const SignPattern d2 = SignPattern::from_bits(right, n);
      Eigen::MatrixXd vertex = c;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          vertex(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -=
              d1.diag[i] * delta(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * d2.diag[j];
      ++result.vertices_checked;
      const num::PivotSummary piv = num::pivot_summary(vertex);
      if (scale == 0.0 || piv.min_abs_pivot < kVertexPivotRelTol * scale) {
        result.boundary = true;
        return result;
      }
      const int sign = piv.determinant > 0 ? 1 : -1;
      if (reference_sign == 0) reference_sign = sign;
      if (sign != reference_sign) return result;
    }
  }
  result.regular = true;
  return result;
}

IntervalPdResult symmetric_interval_pd(const Matrix& A, const Matrix& B, std::size_t cap) {
  require_square_pair(A, B, "symmetric_interval_pd");
  const std::size_t n = A.rows();
  if (n > cap) throw CapExceededError(n, cap);
  if (!num::is_symmetric(A) || !num::is_symmetric(B)) {
    throw NotSymmetricError("symmetric_interval_pd: A and B must be symmetric");
  }

  IntervalPdResult result;
  result.positive_definite = true;
  result.min_eigenvalue = std::numeric_limits<double>::infinity();
  const std::uint64_t patterns = std::uint64_t{1} << (n - 1);
  for (std::uint64_t bits = 0; bits < patterns; ++bits) {
    const SignPattern d = SignPattern::from_bits(bits << 1, n);
    Eigen::MatrixXd dbd = B.eigen();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        dbd(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *= d.diag[i] * d.diag[j];
    const num::SymEigen eig = num::sym_eigen(Eigen::MatrixXd(A.eigen() - dbd));
    result.min_eigenvalue = std::min(result.min_eigenvalue, eig.eigenvalues.front());
    if (!num::is_positive_definite(eig)) result.positive_definite = false;
  }
  return result;
}

std::optional<Vector> search_contraction_witness(const Matrix& A, std::size_t budget,
                                                 std::uint64_t seed) {
  if (!A.is_square()) throw std::invalid_argument("search_contraction_witness: A must be square");
  const Eigen::MatrixXd& a = A.eigen();
  const Eigen::Index n = a.rows();
  constexpr double kAccept = 1e-10;

  std::size_t evaluations = 0;
  // Violation of |Ax| <= |x| at the normalized point x / ||x||_inf.
  auto violation = [&](const Eigen::VectorXd& x) {
    ++evaluations;
    const double s = x.lpNorm<Eigen::Infinity>();
    if (s == 0.0) return std::numeric_limits<double>::infinity();
    return ((a * x).cwiseAbs() - x.cwiseAbs()).maxCoeff() / s;
  };
  auto normalized = [](const Eigen::VectorXd& x) {
    return Vector(Eigen::VectorXd(x / x.lpNorm<Eigen::Infinity>()));
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  while (evaluations < budget) {
    Eigen::VectorXd x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = uniform(rng);
    double best = violation(x);
    if (best <= kAccept) return normalized(x);

    for (int sweep = 0; sweep < 50 && evaluations < budget; ++sweep) {
      bool improved = false;
      for (Eigen::Index j = 0; j < n && evaluations < budget; ++j) {
        // The objective is piecewise linear in x_j; its breakpoints are where
        // some (Ax)_i or x_j itself vanishes.
        const Eigen::VectorXd rest = a * x - a.col(j) * x(j);
        std::vector<double> candidates = {-1.0, 0.0, 1.0};
        for (Eigen::Index i = 0; i < n; ++i)
          if (a(i, j) != 0.0) candidates.push_back(-rest(i) / a(i, j));
        Eigen::VectorXd trial = x;
        std::optional<double> best_t;
        for (double t : candidates) {
          trial(j) = t;
          const double v = violation(trial);
          if (v < best - 1e-15) {
            best = v;
            best_t = t;
          }
        }
        if (best_t) {
          x(j) = *best_t;
          x /= x.lpNorm<Eigen::Infinity>();
          improved = true;
        }
        if (best <= kAccept) return normalized(x);
      }
      if (!improved) break;
    }
  }
  return std::nullopt;
}

}  // namespace gavekit::oracle

#include "gavekit/solvers.hpp"

#include <string>

#include "gavekit/errors.hpp"
#include "gavekit/numkernel.hpp"
#include "gavekit/oracle.hpp"

namespace gavekit::solvers {
namespace {

double target(const GaveProblem& p, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  return tol * (1.0 + p.b().norm_inf());
}

double residual_of(const GaveProblem& p, const Eigen::VectorXd& x) {
  return (p.A().eigen() * x - p.B().eigen() * x.cwiseAbs() - p.b().eigen()).lpNorm<Eigen::Infinity>();
}

Eigen::VectorXd signs(const Eigen::VectorXd& x) {
  return x.unaryExpr([](double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); });
}

}  // namespace

SolveResult picard_solve(const GaveProblem& p, double tol, int maxit) {
  const double goal = target(p, tol);
  const num::LuFactorization lu(p.A());
  const Eigen::MatrixXd& b = p.B().eigen();
  Eigen::VectorXd x = lu.solve(p.b().eigen());
  double r = residual_of(p, x);
  for (int k = 0;; ++k) {
    if (r <= goal) return {Vector(x), r, k};
    if (k == maxit || !x.allFinite()) {
      throw NoConvergence("Picard iteration stopped after " + std::to_string(k) + " iterations",
                          x, r, k);
    }
    x = lu.solve(Eigen::VectorXd(b * x.cwiseAbs() + p.b().eigen()));
    r = residual_of(p, x);
  }
}

SolveResult newton_solve(const GaveProblem& p, double tol, int maxit) {
  const double goal = target(p, tol);
  const Eigen::MatrixXd& a = p.A().eigen();
  const Eigen::MatrixXd& b = p.B().eigen();
  Eigen::VectorXd x;
  try {
    x = num::LuFactorization(a).solve(p.b().eigen());
  } catch (const SingularError&) {
    x = p.b().eigen();
  }
  Eigen::VectorXd previous;
  for (int k = 0;; ++k) {
    const double r = residual_of(p, x);
    if (r <= goal) return {Vector(x), r, k};
    if (k == maxit) {
      throw NoConvergence("Newton iteration stopped after " + std::to_string(k) + " iterations", x, r, k);
    }
    const Eigen::MatrixXd system = a - b * signs(x).asDiagonal();
    Eigen::VectorXd next = num::LuFactorization(system).solve(p.b().eigen());
    const double scale = 1e-12 * (1.0 + x.lpNorm<Eigen::Infinity>());
    if ((next - x).lpNorm<Eigen::Infinity>() <= scale) {
      throw NoConvergence("Newton iteration stalled off the solution set", x, r, k);
    }
    if (previous.size() > 0 && (next - previous).lpNorm<Eigen::Infinity>() <= scale) {
      throw NoConvergence("Newton iteration entered a 2-cycle", x, r, k);
    }
    previous = std::move(x);
    x = std::move(next);
  }
}

Matrix gavme_solve(const GavmeProblem& p, GavmeMethod method, double tol, int maxit) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(p.n()), static_cast<Eigen::Index>(p.m()));
  for (std::size_t j = 0; j < p.m(); ++j) {
    const GaveProblem column = p.column(j);
    const std::string where = "column " + std::to_string(j) + ": ";
    try {
      Eigen::VectorXd x;
      switch (method) {
        case GavmeMethod::Picard:
          x = picard_solve(column, tol, maxit > 0 ? maxit : 10000).x.eigen();
          break;
        case GavmeMethod::Newton:
          x = newton_solve(column, tol, maxit > 0 ? maxit : 100).x.eigen();
          break;
        case GavmeMethod::Enumerate: {
          const SolutionSet set = oracle::enumerate_solutions(column);
          if (set.solutions.size() != 1 || set.degenerate_orthants != 0) {
            throw GaveError("expected exactly one solution, found " + std::to_string(set.solutions.size()) +
                            " (" + std::to_string(set.degenerate_orthants) + " degenerate orthants)");
          }
          x = set.solutions.front().eigen();
          break;
        }
      }
      out.col(static_cast<Eigen::Index>(j)) = x;
    } catch (const NoConvergence& e) {
      throw NoConvergence(where + e.what(), e.last_iterate(), e.residual(), e.iterations());
    } catch (const SingularError& e) {
      throw SingularError(where + e.what());
    } catch (const CapExceededError&) {
      throw;
    } catch (const GaveError& e) {
      throw GaveError(where + e.what());
    }
  }
  return Matrix(std::move(out));
}

}  // namespace gavekit::solvers

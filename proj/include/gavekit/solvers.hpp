#pragma once

#include "gavekit/matrix.hpp"
#include "gavekit/model.hpp"

namespace gavekit::solvers {

struct SolveResult {
  Vector x;
  double residual = 0.0;
  int iterations = 0;
};

/// Fixed-point iteration x <- A^-1 (B|x| + b) from x0 = A^-1 b, reusing one
/// LU of A. Stops once residual <= tol (1 + ||b||_inf).
/// Throws SingularError (A) or NoConvergence.
SolveResult picard_solve(const GaveProblem& p, double tol = 1e-10, int maxit = 10000);

/// Generalized Newton: solve (A - B diag(sign x_k)) x_{k+1} = b, sign(0) = 0.
/// Starts from A^-1 b (or b when A is singular). Throws SingularError for a
/// singular orthant matrix, NoConvergence on the cap or a 2-cycle.
SolveResult newton_solve(const GaveProblem& p, double tol = 1e-10, int maxit = 100);

enum class GavmeMethod { Picard, Newton, Enumerate };

/// Solves AX - B|X| = F one column at a time. Column failures are rethrown
/// with the column index in the message.
Matrix gavme_solve(const GavmeProblem& p, GavmeMethod method, double tol = 1e-10, int maxit = 0);

}  // namespace gavekit::solvers

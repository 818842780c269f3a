#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gavekit/matrix.hpp"
#include "gavekit/model.hpp"
#include "gavekit/oracle.hpp"

namespace gavekit::checks {

struct CheckOptions {
  std::size_t cap_pd = oracle::kIntervalPdCap;
  std::size_t cap_reg = oracle::kRegularityCap;
  std::size_t witness_budget = oracle::kWitnessBudget;
  std::uint64_t seed = 42;
};

// Each checker takes the CheckerId of the variant to evaluate and throws
// std::invalid_argument for an id outside its family or mismatched shapes.
// Numerical failures (singular factors, stalled iterations, caps) come back
// as Inconclusive verdicts rather than exceptions.

/// |a_ii| > sum_j |b_ij| + sum_{j != i} |a_ij| for every row.
Verdict check_row_dominance(const Matrix& A, const Matrix& B);

/// NORM_INF_BOUND: the SDD row bound on ||A^-1 B||_inf is < 1.
/// NORM_2: ||A^-1 B||_2 < 1.
Verdict check_norm_bound(const Matrix& A, const Matrix& B, CheckerId variant);

/// SV_ABS, SV_PLAIN, PD_SHIFT, PD_SHIFT_ABS.
Verdict check_singular_values(const Matrix& A, const Matrix& B, CheckerId variant);

/// SIGMA_AINVB: sigma_max(A^-1 B) < 1. RHO_ABS_AINVB: rho(|A^-1 B|) < 1.
Verdict check_spectral(const Matrix& A, const Matrix& B, CheckerId variant);

/// M_MATRIX, H_MATRIX (both need B >= 0).
Verdict check_m_or_h_matrix(const Matrix& A, const Matrix& B, CheckerId variant);

/// SYM_PD: symmetric A positive definite, symmetric B >= 0, and every
/// A - D B D positive definite.
Verdict check_symmetric_pd(const Matrix& A, const Matrix& B, std::size_t cap = oracle::kIntervalPdCap);

/// UNSOLV_DIRECT, UNSOLV_AINVB, UNSOLV_BINVA: no solution for this b.
Verdict check_unsolvable(const GaveProblem& p, CheckerId variant);

/// AVE_SIGMA, AVE_SIGMA_SHIFT, AVE_SIGNATURE on Ax - |x| = b.
/// AVE_SIGNATURE throws NotSymmetricError for nonsymmetric A.
Verdict check_ave(const Matrix& A, CheckerId variant);

/// AVE_RESOLVENT_MINUS, AVE_RESOLVENT_PLUS, AVE_HERMITIAN. Never Proved.
Verdict check_ave_unsound(const Matrix& A, CheckerId variant);

/// NONUNIQ_SIGMA, NONUNIQ_PSD, NONUNIQ_EIG01, NONUNIQ_SINGULAR_INTERVAL.
Verdict check_ave_nonunique(const Matrix& A, CheckerId variant, const CheckOptions& opts = {});

/// Dispatches one checker against a problem.
Verdict run_checker(const GaveProblem& p, CheckerId id, const CheckOptions& opts = {});

/// Whether run_all would evaluate id for this problem: AVE families need
/// B = I, AVE_SIGNATURE needs symmetric A, SYM_PD needs symmetric A and B.
bool applicable(const GaveProblem& p, CheckerId id);

/// Every applicable checker (optionally restricted to `only`) in CheckerId
/// order, plus the summary claim.
ConditionReport run_all(const GaveProblem& p, const CheckOptions& opts = {},
                        const std::optional<std::vector<CheckerId>>& only = std::nullopt);

}  // namespace gavekit::checks

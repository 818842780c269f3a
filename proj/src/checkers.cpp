#include "gavekit/checkers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gavekit/errors.hpp"
#include "gavekit/numkernel.hpp"

namespace gavekit::checks {
namespace {

using num::strictly_less;

constexpr double kNonnegSlack = -1e-12;

void require_pair(const Matrix& A, const Matrix& B) {
  if (!A.is_square() || B.rows() != A.rows() || B.cols() != A.cols()) {
    throw std::invalid_argument("A and B must be square of equal order");
  }
}

void require_variant(CheckerId id, std::initializer_list<CheckerId> family, const char* fn) {
  if (std::find(family.begin(), family.end(), id) == family.end()) {
    throw std::invalid_argument(std::string(fn) + ": unsupported variant " + std::string(to_string(id)));
  }
}

Eigen::MatrixXd identity_like(const Matrix& A) {
  const auto n = static_cast<Eigen::Index>(A.rows());
  return Eigen::MatrixXd::Identity(n, n);
}

double off_diagonal_abs_sum(const Eigen::MatrixXd& a, Eigen::Index i) {
  return a.row(i).cwiseAbs().sum() - std::abs(a(i, i));
}

double sigma_max_ainv_b(const num::LuFactorization& lu, const Eigen::MatrixXd& b) {
  return num::sigma_max_gram(lu.solve(b));
}

}  // namespace

Verdict check_row_dominance(const Matrix& A, const Matrix& B) {
  require_pair(A, B);
  Verdict v(CheckerId::ROW_DOM, Claim::UniqueForAllB);
  const Eigen::MatrixXd& a = A.eigen();
  const Eigen::MatrixXd& b = B.eigen();
  bool holds = true;
  double min_slack = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const double diag = std::abs(a(i, i));
    const double rest = b.row(i).cwiseAbs().sum() + off_diagonal_abs_sum(a, i);
    const double slack = diag - rest;
    v.set("row_slack_" + std::to_string(i), slack);
    min_slack = std::min(min_slack, slack);
    if (!strictly_less(rest, diag)) holds = false;
  }
  v.set("min_row_slack", min_slack);
  if (holds) v.prove();
  else v.not_established("some row has |a_ii| <= sum|b_ij| + sum_{j!=i}|a_ij|");
  return v;
}

Verdict check_norm_bound(const Matrix& A, const Matrix& B, CheckerId variant) {
  require_variant(variant, {CheckerId::NORM_INF_BOUND, CheckerId::NORM_2}, "check_norm_bound");
  require_pair(A, B);
  Verdict v(variant, Claim::UniqueForAllB);
  const Eigen::MatrixXd& a = A.eigen();
  const Eigen::MatrixXd& b = B.eigen();

  if (variant == CheckerId::NORM_INF_BOUND) {
    double bound = 0.0;
    double min_gap = std::numeric_limits<double>::infinity();
    bool sdd = true;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const double diag = std::abs(a(i, i));
      const double off = off_diagonal_abs_sum(a, i);
      min_gap = std::min(min_gap, diag - off);
      if (!strictly_less(off, diag)) {
        sdd = false;
        continue;
      }
      bound = std::max(bound, b.row(i).cwiseAbs().sum() / (diag - off));
    }
    v.set("min_sdd_gap", min_gap);
    if (!sdd) return v.not_established("A is not strictly diagonally dominant");
    v.set("inf_norm_bound", bound);
    if (strictly_less(bound, 1.0)) v.prove();
    else v.not_established("row bound on ||A^-1 B||_inf is not < 1");
    return v;
  }

  try {
    const num::LuFactorization lu(a);
    const double sigma = sigma_max_ainv_b(lu, b);
    v.set("norm2_Ainv_B", sigma);
    if (strictly_less(sigma, 1.0)) v.prove();
    else v.not_established("||A^-1 B||_2 is not < 1");
  } catch (const SingularError& e) {
    v.inconclusive(std::string("A is singular: ") + e.what());
  }
  return v;
}

Verdict check_singular_values(const Matrix& A, const Matrix& B, CheckerId variant) {
  require_variant(variant,
                  {CheckerId::SV_ABS, CheckerId::SV_PLAIN, CheckerId::PD_SHIFT, CheckerId::PD_SHIFT_ABS},
                  "check_singular_values");
  require_pair(A, B);
  Verdict v(variant, Claim::UniqueForAllB);
  const bool use_abs = variant == CheckerId::SV_ABS || variant == CheckerId::PD_SHIFT_ABS;
  const Eigen::MatrixXd b = use_abs ? Eigen::MatrixXd(B.eigen().cwiseAbs()) : B.eigen();
  const double sigma_b = num::sigma_extremes(b).sigma_max;
  const char* b_name = use_abs ? "sigma_max_absB" : "sigma_max_B";
  v.set(b_name, sigma_b);

  if (variant == CheckerId::SV_ABS || variant == CheckerId::SV_PLAIN) {
    const double sigma_a = num::sigma_extremes(A).sigma_min;
    v.set("sigma_min_A", sigma_a);
    if (strictly_less(sigma_b, sigma_a)) v.prove();
    else v.not_established(std::string(b_name) + " is not < sigma_min(A)");
    return v;
  }

  const Eigen::MatrixXd& a = A.eigen();
  const Eigen::MatrixXd shifted = a.transpose() * a - sigma_b * sigma_b * identity_like(A);
  const num::SymEigen eig = num::sym_eigen(shifted);
  v.set("min_eigenvalue", eig.eigenvalues.front());
  v.set("max_eigenvalue", eig.eigenvalues.back());
  if (num::is_positive_definite(eig)) v.prove();
  else v.not_established(std::string("A^T A - ") + b_name + "^2 I is not positive definite");
  return v;
}

Verdict check_spectral(const Matrix& A, const Matrix& B, CheckerId variant) {
  require_variant(variant, {CheckerId::SIGMA_AINVB, CheckerId::RHO_ABS_AINVB}, "check_spectral");
  require_pair(A, B);
  Verdict v(variant, Claim::UniqueForAllB);
  try {
    const num::LuFactorization lu(A);
    double quantity = 0.0;
    if (variant == CheckerId::SIGMA_AINVB) {
      quantity = sigma_max_ainv_b(lu, B.eigen());
      v.set("sigma_max_Ainv_B", quantity);
    } else {
      const Eigen::MatrixXd m = lu.solve(B.eigen()).cwiseAbs();
      quantity = num::nonneg_spectral_radius(m);
      v.set("rho_abs_Ainv_B", quantity);
    }
    if (strictly_less(quantity, 1.0)) v.prove();
    else v.not_established("quantity is not < 1");
  } catch (const SingularError& e) {
    v.inconclusive(std::string("A is singular: ") + e.what());
  } catch (const ConvergenceError& e) {
    v.inconclusive(e.what());
  }
  return v;
}

Verdict check_m_or_h_matrix(const Matrix& A, const Matrix& B, CheckerId variant) {
  require_variant(variant, {CheckerId::M_MATRIX, CheckerId::H_MATRIX}, "check_m_or_h_matrix");
  require_pair(A, B);
  Verdict v(variant, Claim::UniqueForAllB);
  const double min_b = B.eigen().minCoeff();
  v.set("min_B_entry", min_b);
  if (min_b < kNonnegSlack) return v.not_established("B has negative entries");

  const Matrix diff(Eigen::MatrixXd(A.eigen() - B.eigen()));
  try {
    if (variant == CheckerId::H_MATRIX) {
      const double min_diag = diff.eigen().diagonal().minCoeff();
      v.set("min_diag_A_minus_B", min_diag);
      if (!strictly_less(0.0, min_diag)) return v.not_established("A - B has a nonpositive diagonal entry");
    }
    const Matrix target = variant == CheckerId::M_MATRIX ? diff : num::comparison_matrix(diff);
    const num::MMatrixCertificate cert = num::is_nonsingular_m_matrix(target);
    v.set("gamma", cert.gamma);
    v.set("rho_delta", cert.rho);
    v.set("z_matrix", cert.z_matrix ? 1.0 : 0.0);
    if (cert.holds) v.prove();
    else if (!cert.z_matrix) v.not_established("A - B has positive off-diagonal entries");
    else v.not_established("rho(gamma I - M) is not < gamma");
  } catch (const ConvergenceError& e) {
    v.inconclusive(e.what());
  }
  return v;
}

Verdict check_symmetric_pd(const Matrix& A, const Matrix& B, std::size_t cap) {
  require_pair(A, B);
  Verdict v(CheckerId::SYM_PD, Claim::UniqueForAllB);
  if (!num::is_symmetric(A)) return v.inconclusive("A is not symmetric");
  if (!num::is_symmetric(B)) return v.inconclusive("B is not symmetric");
  if (B.eigen().minCoeff() < kNonnegSlack) return v.inconclusive("B has negative entries");
  const num::SymEigen eig_a = num::sym_eigen(A);
  v.set("min_eigenvalue_A", eig_a.eigenvalues.front());
  if (!num::is_positive_definite(eig_a)) return v.inconclusive("A is not positive definite");
  try {
    const oracle::IntervalPdResult pd = oracle::symmetric_interval_pd(A, B, cap);
    v.set("min_vertex_eigenvalue", pd.min_eigenvalue);
    if (pd.positive_definite) v.prove();
    else v.not_established("some A - D B D is not positive definite");
  } catch (const CapExceededError& e) {
    v.inconclusive(e.what());
  }
  return v;
}

Verdict check_unsolvable(const GaveProblem& p, CheckerId variant) {
  require_variant(variant, {CheckerId::UNSOLV_DIRECT, CheckerId::UNSOLV_AINVB, CheckerId::UNSOLV_BINVA},
                  "check_unsolvable");
  Verdict v(variant, Claim::NoSolutionForGivenB);
  try {
    const num::LuFactorization lu_b(p.B());
    const Eigen::VectorXd y = lu_b.solve(p.b().eigen());
    v.set("min_Binv_b", y.minCoeff());
    v.set("max_abs_Binv_b", y.lpNorm<Eigen::Infinity>());
    if (y.minCoeff() < kNonnegSlack) return v.not_established("B^-1 b has negative entries");
    if (!(y.lpNorm<Eigen::Infinity>() > 1e-12)) return v.not_established("B^-1 b is zero");

    bool holds = false;
    switch (variant) {
      case CheckerId::UNSOLV_DIRECT: {
        const double smax_a = num::sigma_extremes(p.A()).sigma_max;
        const double smin_b = num::sigma_extremes(p.B()).sigma_min;
        v.set("sigma_max_A", smax_a);
        v.set("sigma_min_B", smin_b);
        holds = strictly_less(smax_a, smin_b);
        break;
      }
      case CheckerId::UNSOLV_AINVB: {
        const num::LuFactorization lu_a(p.A());
        const double smin = num::sigma_extremes(lu_a.solve(p.B().eigen())).sigma_min;
        v.set("sigma_min_Ainv_B", smin);
        holds = strictly_less(1.0, smin);
        break;
      }
      default: {
        const double smax = num::sigma_extremes(lu_b.solve(p.A().eigen())).sigma_max;
        v.set("sigma_max_Binv_A", smax);
        holds = strictly_less(smax, 1.0);
        break;
      }
    }
    if (holds) v.prove();
    else v.not_established("singular-value inequality does not hold");
  } catch (const SingularError& e) {
    v.inconclusive(std::string("singular factor: ") + e.what());
  }
  return v;
}

Verdict check_ave(const Matrix& A, CheckerId variant) {
  require_variant(variant, {CheckerId::AVE_SIGMA, CheckerId::AVE_SIGMA_SHIFT, CheckerId::AVE_SIGNATURE},
                  "check_ave");
  if (!A.is_square()) throw std::invalid_argument("check_ave: A must be square");
  Verdict v(variant, Claim::UniqueForAllB);
  const Eigen::MatrixXd id = identity_like(A);

  if (variant == CheckerId::AVE_SIGMA) {
    const double s = num::sigma_extremes(A).sigma_min;
    v.set("sigma_min_A", s);
    if (strictly_less(1.0, s)) v.prove();
    else v.not_established("sigma_min(A) is not > 1");
    return v;
  }
  if (variant == CheckerId::AVE_SIGMA_SHIFT) {
    const double s = num::sigma_extremes(Eigen::MatrixXd(A.eigen() + id)).sigma_min;
    v.set("sigma_min_A_plus_I", s);
    if (strictly_less(2.0, s)) v.prove();
    else v.not_established("sigma_min(A + I) is not > 2");
    return v;
  }

  if (!num::is_symmetric(A)) throw NotSymmetricError("AVE_SIGNATURE requires a symmetric A");
  const num::Signature minus = num::sym_eigen(Eigen::MatrixXd(A.eigen() - id)).signature;
  const num::Signature plus = num::sym_eigen(Eigen::MatrixXd(A.eigen() + id)).signature;
  v.set("minus_positive", static_cast<double>(minus.positive));
  v.set("minus_negative", static_cast<double>(minus.negative));
  v.set("minus_zero", static_cast<double>(minus.zero));
  v.set("plus_positive", static_cast<double>(plus.positive));
  v.set("plus_negative", static_cast<double>(plus.negative));
  v.set("plus_zero", static_cast<double>(plus.zero));
  // Two-sided for symmetric A: equal signatures iff unique for every b.
  if (minus == plus) v.prove(Claim::UniqueForAllB);
  else v.prove(Claim::NotUniqueForAllB);
  return v;
}

Verdict check_ave_unsound(const Matrix& A, CheckerId variant) {
  require_variant(variant,
                  {CheckerId::AVE_RESOLVENT_MINUS, CheckerId::AVE_RESOLVENT_PLUS, CheckerId::AVE_HERMITIAN},
                  "check_ave_unsound");
  if (!A.is_square()) throw std::invalid_argument("check_ave_unsound: A must be square");
  Verdict v(variant, Claim::UniqueForAllB);
  const Eigen::MatrixXd id = identity_like(A);
  bool holds = false;

  if (variant == CheckerId::AVE_HERMITIAN) {
    const Eigen::MatrixXd h = 0.5 * (A.eigen() + A.eigen().transpose());
    const num::SymEigen eig = num::sym_eigen(h);
    if (!num::is_positive_definite(eig)) return v.inconclusive("A is not positive definite");
    double gap = std::numeric_limits<double>::infinity();
    double largest = 0.0;
    for (double lambda : eig.eigenvalues) {
      gap = std::min(gap, std::abs(lambda - 1.0));
      largest = std::max(largest, std::abs(lambda - 1.0));
    }
    v.set("min_abs_eig_H_minus_I", gap);
    holds = gap > num::eigen_zero_tolerance(largest);
  } else {
    const double sign = variant == CheckerId::AVE_RESOLVENT_MINUS ? -1.0 : 1.0;
    const Eigen::MatrixXd shifted = A.eigen() + sign * id;
    try {
      const num::LuFactorization lu(shifted);
      const double norm = 1.0 / num::sigma_extremes(shifted).sigma_min;
      v.set("resolvent_norm2", norm);
      holds = strictly_less(norm, 2.0);
    } catch (const SingularError& e) {
      return v.inconclusive(std::string("shifted matrix is singular: ") + e.what());
    }
  }
  v.set("unsound_condition_holds", holds ? 1.0 : 0.0);
  v.not_established(holds ? "condition holds but is known not to imply uniqueness"
                          : "condition does not hold");
  return v;
}

Verdict check_ave_nonunique(const Matrix& A, CheckerId variant, const CheckOptions& opts) {
  require_variant(variant,
                  {CheckerId::NONUNIQ_SIGMA, CheckerId::NONUNIQ_PSD, CheckerId::NONUNIQ_EIG01,
                   CheckerId::NONUNIQ_SINGULAR_INTERVAL},
                  "check_ave_nonunique");
  if (!A.is_square()) throw std::invalid_argument("check_ave_nonunique: A must be square");
  Verdict v(variant, Claim::NotUniqueForAllB);
  const Eigen::MatrixXd id = identity_like(A);

  switch (variant) {
    case CheckerId::NONUNIQ_SIGMA: {
      const double s = num::sigma_extremes(A).sigma_max;
      v.set("sigma_max_A", s);
      if (s <= 1.0 + 1e-12) v.prove();
      else v.not_established("sigma_max(A) > 1");
      break;
    }
    case CheckerId::NONUNIQ_PSD: {
      const num::SymEigen eig = num::sym_eigen(Eigen::MatrixXd(id - A.eigen().transpose() * A.eigen()));
      const double largest = std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
      v.set("min_eigenvalue", eig.eigenvalues.front());
      if (eig.eigenvalues.front() >= -num::eigen_zero_tolerance(largest)) v.prove();
      else v.not_established("I - A^T A is not positive semidefinite");
      break;
    }
    case CheckerId::NONUNIQ_EIG01: {
      const num::PivotSummary a = num::pivot_summary(A.eigen());
      const num::PivotSummary a1 = num::pivot_summary(Eigen::MatrixXd(A.eigen() - id));
      v.set("min_pivot_A", a.min_abs_pivot);
      v.set("min_pivot_A_minus_I", a1.min_abs_pivot);
      if (a.singular() || a1.singular()) v.prove();
      else v.not_established("neither A nor A - I is singular");
      break;
    }
    default: {
      try {
        const oracle::RegularityResult reg = oracle::interval_regularity(A, Matrix::identity(A.rows()), opts.cap_reg);
        v.set("vertices_checked", static_cast<double>(reg.vertices_checked));
        if (!reg.regular) v.prove();
        else v.not_established("[A - I, A + I] is regular");
      } catch (const CapExceededError& e) {
        const auto witness = oracle::search_contraction_witness(A, opts.witness_budget, opts.seed);
        if (!witness) return v.inconclusive(std::string(e.what()) + "; no |Ax| <= |x| witness found");
        for (std::size_t i = 0; i < witness->size(); ++i) v.set("witness_" + std::to_string(i), (*witness)[i]);
        v.prove();
      }
      break;
    }
  }
  return v;
}

Verdict run_checker(const GaveProblem& p, CheckerId id, const CheckOptions& opts) {
  switch (id) {
    case CheckerId::ROW_DOM: return check_row_dominance(p.A(), p.B());
    case CheckerId::NORM_INF_BOUND:
    case CheckerId::NORM_2: return check_norm_bound(p.A(), p.B(), id);
    case CheckerId::SV_ABS:
    case CheckerId::SV_PLAIN:
    case CheckerId::PD_SHIFT:
    case CheckerId::PD_SHIFT_ABS: return check_singular_values(p.A(), p.B(), id);
    case CheckerId::SIGMA_AINVB:
    case CheckerId::RHO_ABS_AINVB: return check_spectral(p.A(), p.B(), id);
    case CheckerId::M_MATRIX:
    case CheckerId::H_MATRIX: return check_m_or_h_matrix(p.A(), p.B(), id);
    case CheckerId::SYM_PD: return check_symmetric_pd(p.A(), p.B(), opts.cap_pd);
    case CheckerId::UNSOLV_DIRECT:
    case CheckerId::UNSOLV_AINVB:
    case CheckerId::UNSOLV_BINVA: return check_unsolvable(p, id);
    case CheckerId::AVE_SIGMA:
    case CheckerId::AVE_SIGMA_SHIFT:
    case CheckerId::AVE_SIGNATURE: return check_ave(p.A(), id);
    case CheckerId::AVE_RESOLVENT_MINUS:
    case CheckerId::AVE_RESOLVENT_PLUS:
    case CheckerId::AVE_HERMITIAN: return check_ave_unsound(p.A(), id);
    case CheckerId::NONUNIQ_SIGMA:
    case CheckerId::NONUNIQ_PSD:
    case CheckerId::NONUNIQ_EIG01:
    case CheckerId::NONUNIQ_SINGULAR_INTERVAL: return check_ave_nonunique(p.A(), id, opts);
  }
  throw std::invalid_argument("unknown checker");
}

bool applicable(const GaveProblem& p, CheckerId id) {
  const auto index = static_cast<int>(id);
  if (index >= static_cast<int>(CheckerId::AVE_SIGMA)) {
    if (!is_identity(p.B())) return false;
    if (id == CheckerId::AVE_SIGNATURE) return num::is_symmetric(p.A());
    return true;
  }
  if (id == CheckerId::SYM_PD) return num::is_symmetric(p.A()) && num::is_symmetric(p.B());
  return true;
}

ConditionReport run_all(const GaveProblem& p, const CheckOptions& opts,
                        const std::optional<std::vector<CheckerId>>& only) {
  ConditionReport report;
  report.problem = digest(p);
  for (CheckerId id : all_checkers()) {
    if (only && std::find(only->begin(), only->end(), id) == only->end()) continue;
    if (!applicable(p, id)) continue;
    report.verdicts.push_back(run_checker(p, id, opts));
  }
  for (Claim claim : {Claim::UniqueForAllB, Claim::NoSolutionForGivenB, Claim::NotUniqueForAllB}) {
    const bool proved = std::any_of(report.verdicts.begin(), report.verdicts.end(), [&](const Verdict& v) {
      return v.soundness() == Soundness::Sound && v.status() == Status::Proved && v.claim() == claim;
    });
    if (proved) {
      report.summary = claim;
      break;
    }
  }
  return report;
}

}  // namespace gavekit::checks

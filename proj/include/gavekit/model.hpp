#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gavekit/matrix.hpp"

namespace gavekit {

/// Ax - B|x| = b with square A, B of equal order.
class GaveProblem {
 public:
  GaveProblem(Matrix A, Matrix B, Vector b);

  const Matrix& A() const { return A_; }
  const Matrix& B() const { return B_; }
  const Vector& b() const { return b_; }
  std::size_t n() const { return A_.rows(); }

  /// Same system with (A, B, b) multiplied by c.
  GaveProblem scaled(double c) const { return {A_.scaled(c), B_.scaled(c), b_.scaled(c)}; }

 private:
  Matrix A_;
  Matrix B_;
  Vector b_;
};

/// AX - B|X| = F with F of shape n x m; decomposes into m GAVE columns.
class GavmeProblem {
 public:
  GavmeProblem(Matrix A, Matrix B, Matrix F);

  const Matrix& A() const { return A_; }
  const Matrix& B() const { return B_; }
  const Matrix& F() const { return F_; }
  std::size_t n() const { return A_.rows(); }
  std::size_t m() const { return F_.cols(); }

  GaveProblem column(std::size_t j) const;

 private:
  Matrix A_;
  Matrix B_;
  Matrix F_;
};

/// Registry of solvability conditions, in report order.
enum class CheckerId {
  ROW_DOM,
  NORM_INF_BOUND,
  NORM_2,
  SV_ABS,
  SV_PLAIN,
  PD_SHIFT,
  PD_SHIFT_ABS,
  SIGMA_AINVB,
  RHO_ABS_AINVB,
  M_MATRIX,
  H_MATRIX,
  SYM_PD,
  UNSOLV_DIRECT,
  UNSOLV_AINVB,
  UNSOLV_BINVA,
  AVE_SIGMA,
  AVE_SIGMA_SHIFT,
  AVE_SIGNATURE,
  AVE_RESOLVENT_MINUS,
  AVE_RESOLVENT_PLUS,
  AVE_HERMITIAN,
  NONUNIQ_SIGMA,
  NONUNIQ_PSD,
  NONUNIQ_EIG01,
  NONUNIQ_SINGULAR_INTERVAL,
};

inline constexpr std::size_t kCheckerCount = 25;

enum class Claim { UniqueForAllB, NoSolutionForGivenB, NotUniqueForAllB };
enum class Status { Proved, NotEstablished, Inconclusive };
enum class Soundness { Sound, KnownUnsound };

std::string_view to_string(CheckerId id);
std::string_view to_string(Claim c);
std::string_view to_string(Status s);
std::string_view to_string(Soundness s);
std::optional<CheckerId> checker_from_string(std::string_view name);
std::vector<CheckerId> all_checkers();

/// The published conditions refuted by counterexamples.
Soundness checker_soundness(CheckerId id);

/// Outcome of one condition check.
///
/// A KnownUnsound verdict can never be Proved; when its condition holds the
/// verdict stays NotEstablished and carries unsound_condition_holds = 1.
class Verdict {
 public:
  Verdict(CheckerId id, Claim claim);

  CheckerId id() const { return id_; }
  Claim claim() const { return claim_; }
  Status status() const { return status_; }
  Soundness soundness() const { return soundness_; }
  const std::string& note() const { return note_; }
  const std::vector<std::pair<std::string, double>>& certificate() const { return certificate_; }

  /// Throws std::logic_error for a KnownUnsound checker.
  Verdict& prove(Claim claim);
  Verdict& prove() { return prove(claim_); }
  Verdict& not_established(std::string note = {});
  Verdict& inconclusive(std::string note);

  /// Adds or replaces a certificate quantity; non-finite values are a logic error.
  Verdict& set(std::string name, double value);
  std::optional<double> get(std::string_view name) const;

 private:
  CheckerId id_;
  Claim claim_;
  Status status_ = Status::NotEstablished;
  Soundness soundness_;
  std::vector<std::pair<std::string, double>> certificate_;
  std::string note_;
};

/// Dimensions and FNV-1a content hash over the canonical little-endian
/// 8-byte encoding of every entry.
struct ProblemDigest {
  std::string kind;  // "gave" or "gavme"
  std::size_t n = 0;
  std::size_t rhs_cols = 1;
  std::string hash;
  friend bool operator==(const ProblemDigest&, const ProblemDigest&) = default;
};

ProblemDigest digest(const GaveProblem& p);
ProblemDigest digest(const GavmeProblem& p);

struct ConditionReport {
  ProblemDigest problem;
  std::vector<Verdict> verdicts;
  /// Strongest claim proved by a Sound checker, if any.
  std::optional<Claim> summary;

  const Verdict* find(CheckerId id) const;
};

/// Every solution an exhaustive orthant enumeration found.
struct SolutionSet {
  std::vector<Vector> solutions;
  std::size_t degenerate_orthants = 0;
  std::size_t cap_used = 0;
};

/// ||A x - B |x| - b||_inf.
double residual(const GaveProblem& p, const Vector& x);

inline constexpr double kDefaultSolutionTol = 1e-9;

/// residual(p, x) <= tol * (1 + ||b||_inf).
bool is_solution(const GaveProblem& p, const Vector& x, double tol = kDefaultSolutionTol);

/// The AVE Ax - |x| = b as a GAVE with B = I.
GaveProblem ave_view(Matrix A, Vector b);

/// True when B equals the identity within 1e-14 per entry.
bool is_identity(const Matrix& B, double tol = 1e-14);

}  // namespace gavekit

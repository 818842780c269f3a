#include "gavekit/model.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gavekit {
namespace {

constexpr std::array<std::string_view, kCheckerCount> kCheckerNames = {
    "ROW_DOM",        "NORM_INF_BOUND",      "NORM_2",             "SV_ABS",
    "SV_PLAIN",       "PD_SHIFT",            "PD_SHIFT_ABS",       "SIGMA_AINVB",
    "RHO_ABS_AINVB",  "M_MATRIX",            "H_MATRIX",           "SYM_PD",
    "UNSOLV_DIRECT",  "UNSOLV_AINVB",        "UNSOLV_BINVA",       "AVE_SIGMA",
    "AVE_SIGMA_SHIFT", "AVE_SIGNATURE",      "AVE_RESOLVENT_MINUS", "AVE_RESOLVENT_PLUS",
    "AVE_HERMITIAN",  "NONUNIQ_SIGMA",       "NONUNIQ_PSD",        "NONUNIQ_EIG01",
    "NONUNIQ_SINGULAR_INTERVAL",
};

std::string dims(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

class Fnv1a {
 public:
  void bytes(std::uint64_t word) {
    for (int k = 0; k < 8; ++k) {
      state_ ^= (word >> (8 * k)) & 0xffU;
      state_ *= 0x100000001b3ULL;
    }
  }
  void real(double v) { bytes(std::bit_cast<std::uint64_t>(v)); }
  void matrix(const Matrix& m) {
    bytes(m.rows());
    bytes(m.cols());
    for (double v : m.row_major()) real(v);
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(state_));
    return buf;
  }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace

GaveProblem::GaveProblem(Matrix A, Matrix B, Vector b)
    : A_(std::move(A)), B_(std::move(B)), b_(std::move(b)) {
  if (!A_.is_square()) throw std::invalid_argument("A must be square, got " + dims(A_));
  if (B_.rows() != A_.rows() || B_.cols() != A_.cols()) {
    throw std::invalid_argument("B is " + dims(B_) + " but A is " + dims(A_));
  }
  if (b_.size() != A_.rows()) {
    throw std::invalid_argument("b has length " + std::to_string(b_.size()) + " but A has " +
                                std::to_string(A_.rows()) + " rows");
  }
}

GavmeProblem::GavmeProblem(Matrix A, Matrix B, Matrix F)
    : A_(std::move(A)), B_(std::move(B)), F_(std::move(F)) {
  if (!A_.is_square()) throw std::invalid_argument("A must be square, got " + dims(A_));
  if (B_.rows() != A_.rows() || B_.cols() != A_.cols()) {
    throw std::invalid_argument("B is " + dims(B_) + " but A is " + dims(A_));
  }
  if (F_.rows() != A_.rows()) {
    throw std::invalid_argument("F is " + dims(F_) + " but A has " + std::to_string(A_.rows()) + " rows");
  }
}

GaveProblem GavmeProblem::column(std::size_t j) const {
  return {A_, B_, Vector(Eigen::VectorXd(F_.eigen().col(static_cast<Eigen::Index>(j))))};
}

std::string_view to_string(CheckerId id) { return kCheckerNames[static_cast<std::size_t>(id)]; }

std::string_view to_string(Claim c) {
  switch (c) {
    case Claim::UniqueForAllB: return "UniqueForAllB";
    case Claim::NoSolutionForGivenB: return "NoSolutionForGivenB";
    case Claim::NotUniqueForAllB: return "NotUniqueForAllB";
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Proved: return "Proved";
    case Status::NotEstablished: return "NotEstablished";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string_view to_string(Soundness s) {
  return s == Soundness::Sound ? "Sound" : "KnownUnsound";
}

std::optional<CheckerId> checker_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kCheckerNames.size(); ++i)
    if (kCheckerNames[i] == name) return static_cast<CheckerId>(i);
  return std::nullopt;
}

std::vector<CheckerId> all_checkers() {
  std::vector<CheckerId> ids;
  for (std::size_t i = 0; i < kCheckerCount; ++i) ids.push_back(static_cast<CheckerId>(i));
  return ids;
}

Soundness checker_soundness(CheckerId id) {
  switch (id) {
    case CheckerId::AVE_RESOLVENT_MINUS:
    case CheckerId::AVE_RESOLVENT_PLUS:
    case CheckerId::AVE_HERMITIAN:
      return Soundness::KnownUnsound;
    default:
      return Soundness::Sound;
  }
}

Verdict::Verdict(CheckerId id, Claim claim) : id_(id), claim_(claim), soundness_(checker_soundness(id)) {}

Verdict& Verdict::prove(Claim claim) {
  if (soundness_ == Soundness::KnownUnsound) {
    throw std::logic_error(std::string(to_string(id_)) + " is known unsound and cannot prove anything");
  }
  claim_ = claim;
  status_ = Status::Proved;
  return *this;
}

Verdict& Verdict::not_established(std::string note) {
  status_ = Status::NotEstablished;
  note_ = std::move(note);
  return *this;
}

Verdict& Verdict::inconclusive(std::string note) {
  status_ = Status::Inconclusive;
  note_ = std::move(note);
  return *this;
}

Verdict& Verdict::set(std::string name, double value) {
  if (!std::isfinite(value)) {
    throw std::logic_error("certificate quantity " + name + " is not finite");
  }
  for (auto& [key, v] : certificate_) {
    if (key == name) {
      v = value;
      return *this;
    }
  }
  certificate_.emplace_back(std::move(name), value);
  return *this;
}

std::optional<double> Verdict::get(std::string_view name) const {
  for (const auto& [key, v] : certificate_)
    if (key == name) return v;
  return std::nullopt;
}

ProblemDigest digest(const GaveProblem& p) {
  Fnv1a h;
  h.matrix(p.A());
  h.matrix(p.B());
  h.bytes(p.b().size());
  for (double v : p.b().values()) h.real(v);
  return {"gave", p.n(), 1, h.hex()};
}

ProblemDigest digest(const GavmeProblem& p) {
  Fnv1a h;
  h.matrix(p.A());
  h.matrix(p.B());
  h.matrix(p.F());
  return {"gavme", p.n(), p.m(), h.hex()};
}

const Verdict* ConditionReport::find(CheckerId id) const {
  for (const auto& v : verdicts)
    if (v.id() == id) return &v;
  return nullptr;
}

double residual(const GaveProblem& p, const Vector& x) {
  if (x.size() != p.n()) throw std::invalid_argument("residual: x has wrong length");
  const Eigen::VectorXd r =
      p.A().eigen() * x.eigen() - p.B().eigen() * x.eigen().cwiseAbs() - p.b().eigen();
  return r.lpNorm<Eigen::Infinity>();
}

bool is_solution(const GaveProblem& p, const Vector& x, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("is_solution: tol must be positive");
  return residual(p, x) <= tol * (1.0 + p.b().norm_inf());
}

GaveProblem ave_view(Matrix A, Vector b) {
  const std::size_t n = A.rows();
  return {std::move(A), Matrix::identity(n), std::move(b)};
}

bool is_identity(const Matrix& B, double tol) {
  if (!B.is_square()) return false;
  const auto n = static_cast<Eigen::Index>(B.rows());
  return (B.eigen() - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace gavekit

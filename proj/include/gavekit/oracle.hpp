#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gavekit/matrix.hpp"
#include "gavekit/model.hpp"

namespace gavekit::oracle {

inline constexpr std::size_t kEnumerateCap = 12;
inline constexpr std::size_t kRegularityCap = 8;
inline constexpr std::size_t kIntervalPdCap = 12;
inline constexpr std::size_t kWitnessBudget = 10000;

/// Diagonal of a +-1 sign matrix. Pattern k sets entry i to -1 iff bit i of k is set.
struct SignPattern {
  std::vector<int> diag;

  static SignPattern from_bits(std::uint64_t bits, std::size_t n);
  std::size_t size() const { return diag.size(); }
};

/// All solutions of Ax - B|x| = b, by solving (A - B D) x = b in each of the
/// 2^n orthants and keeping sign-consistent results.
///
/// Singular orthant systems are counted in degenerate_orthants and skipped;
/// a continuum of solutions there is not enumerated. Throws
/// CapExceededError when n > cap.
SolutionSet enumerate_solutions(const GaveProblem& p, std::size_t cap = kEnumerateCap);

struct RegularityResult {
  bool regular = false;
  /// Some vertex was singular under the pivot threshold.
  bool boundary = false;
  std::size_t vertices_checked = 0;
};

/// Regularity of [C - Delta, C + Delta] via the signs of det(C - D1 Delta D2)
/// over all sign-pattern pairs (2^(2n-1) after fixing a global sign).
RegularityResult interval_regularity(const Matrix& C, const Matrix& Delta,
                                     std::size_t cap = kRegularityCap);

struct IntervalPdResult {
  bool positive_definite = false;
  double min_eigenvalue = 0.0;  // over all vertex matrices
};

/// Positive definiteness of the symmetric interval [A - B, A + B]: every
/// A - D B D, D a sign matrix, must be positive definite.
IntervalPdResult symmetric_interval_pd(const Matrix& A, const Matrix& B,
                                       std::size_t cap = kIntervalPdCap);

/// Best-effort search for x with ||x||_inf = 1 and |Ax| <= |x| + 1e-10.
/// Random restarts plus coordinate descent on max_i(|Ax|_i - |x|_i); budget
/// bounds the number of objective evaluations. nullopt proves nothing.
std::optional<Vector> search_contraction_witness(const Matrix& A,
                                                 std::size_t budget = kWitnessBudget,
                                                 std::uint64_t seed = 42);

}  // namespace gavekit::oracle

// Randomized invariants, fixed seeds, small dimensions.

#include <doctest.h>

#include <cmath>
#include <numeric>

#include "gavekit/checkers.hpp"
#include "gavekit/errors.hpp"
#include "gavekit/json_io.hpp"
#include "gavekit/numkernel.hpp"
#include "gavekit/oracle.hpp"
#include "gavekit/solvers.hpp"
#include "../oracles.hpp"
#include "../test_util.hpp"

using namespace gavekit;

namespace {

constexpr int kTrials = 200;

std::size_t random_size(testutil::Rng& rng) { return static_cast<std::size_t>(rng.integer(1, 6)); }

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("singular values agree with the Jacobi reference and invert") {
    testutil::Rng rng(1);
    for (int t = 0; t < kTrials; ++t) {
      const std::size_t n = random_size(rng);
      ref::Mat m = rng.matrix(n, 3.0);
      for (std::size_t i = 0; i < n; ++i) m[i][i] += rng.coin() ? 2.0 : -2.0;
      const auto s = num::sigma_extremes(testutil::from_ref(m));
      const ref::Vec expected = ref::singular_values(m);
      CHECK(s.sigma_max == doctest::Approx(expected.back()).epsilon(1e-8));
      CHECK(std::abs(s.sigma_min - expected.front()) <= 1e-8 * expected.back());
      CHECK(s.sigma_max >= s.sigma_min);

      const auto inv = ref::inverse(m);
      if (!inv || s.sigma_min < 1e-6 * s.sigma_max) continue;
      const auto si = num::sigma_extremes(testutil::from_ref(*inv));
      CHECK(s.sigma_max * si.sigma_max >= 1.0 - 1e-10);
      CHECK(s.sigma_min == doctest::Approx(1.0 / si.sigma_max).epsilon(1e-6));
    }
  }

  TEST_CASE("symmetric eigenvalues: trace, reference spectrum, scaling") {
    testutil::Rng rng(2);
    for (int t = 0; t < kTrials; ++t) {
      const std::size_t n = random_size(rng);
      const ref::Mat m = rng.symmetric(n, 4.0);
      const auto eig = num::sym_eigen(testutil::from_ref(m));
      double trace = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < n; ++i) trace += m[i][i];
      for (double e : eig.eigenvalues) scale = std::max(scale, std::abs(e));
      const double sum = std::accumulate(eig.eigenvalues.begin(), eig.eigenvalues.end(), 0.0);
      CHECK(std::abs(sum - trace) <= 1e-8 * std::max(1.0, scale * static_cast<double>(n)));
      const ref::Vec expected = ref::jacobi_eigenvalues(m);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(eig.eigenvalues[i] - expected[i]) <= 1e-9 * std::max(1.0, scale));
      const double c = rng.uniform(0.1, 10.0);
      CHECK(num::sym_eigen(testutil::from_ref(m).scaled(c)).signature == eig.signature);
    }
  }

  TEST_CASE("M-matrix test agrees with leading principal minors on Z-matrices") {
    testutil::Rng rng(3);
    int holds = 0, fails = 0;
    for (int t = 0; t < kTrials; ++t) {
      const std::size_t n = random_size(rng);
      ref::Mat m(n, ref::Vec(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j) ? rng.uniform(0.5, 4.0) : -rng.uniform(0.0, 1.0);
      // Stay clear of the singular boundary where both tests are ill-posed.
      bool clear = true;
      for (std::size_t k = 1; k <= n && clear; ++k) {
        ref::Mat lead(k, ref::Vec(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) lead[i][j] = m[i][j];
        clear = std::abs(ref::det_cofactor(lead)) > 1e-6;
      }
      if (!clear) continue;
      const bool expected = ref::leading_minors_positive(m);
      const bool got = num::is_nonsingular_m_matrix(testutil::from_ref(m)).holds;
      CHECK(got == expected);
      (expected ? holds : fails)++;
    }
    CHECK(holds > 10);
    CHECK(fails > 10);
  }

  TEST_CASE("comparison matrix is idempotent") {
    testutil::Rng rng(4);
    for (int t = 0; t < kTrials; ++t) {
      const Matrix m = testutil::from_ref(rng.matrix(random_size(rng), 5.0));
      const Matrix c = num::comparison_matrix(m);
      CHECK(num::comparison_matrix(c) == c);
    }
  }

  TEST_CASE("Picard converges whenever NORM_2 is proved") {
    testutil::Rng rng(5);
    int exercised = 0;
    for (int t = 0; t < kTrials; ++t) {
      const std::size_t n = random_size(rng);
      ref::Mat a = rng.matrix(n, 1.0);
      for (std::size_t i = 0; i < n; ++i) a[i][i] += rng.coin() ? 3.0 : -3.0;
      const GaveProblem p(testutil::from_ref(a), testutil::from_ref(rng.matrix(n, rng.uniform(0.1, 2.0))),
                          Vector(rng.vector(n, 5.0)));
      if (checks::check_norm_bound(p.A(), p.B(), CheckerId::NORM_2).status() != Status::Proved) continue;
      ++exercised;
      const auto r = solvers::picard_solve(p, 1e-10, 1000000);
      CHECK(is_solution(p, r.x));
    }
    CHECK(exercised > 20);
  }

  TEST_CASE("enumerated solutions are solutions; Newton results are enumerated") {
    testutil::Rng rng(6);
    for (int t = 0; t < kTrials; ++t) {
      const std::size_t n = random_size(rng);
      const GaveProblem p(testutil::from_ref(rng.matrix(n, 3.0)), testutil::from_ref(rng.matrix(n, 2.0)),
                          Vector(rng.vector(n, 5.0)));
      const SolutionSet set = oracle::enumerate_solutions(p);
      for (const Vector& x : set.solutions) CHECK(is_solution(p, x));
      try {
        const auto r = solvers::newton_solve(p);
        CHECK(is_solution(p, r.x, 1e-9));
        bool listed = false;
        for (const Vector& x : set.solutions) listed = listed || (x.eigen() - r.x.eigen()).lpNorm<Eigen::Infinity>() <= 1e-6;
        CHECK(listed);
      } catch (const NoConvergence&) {
      } catch (const SingularError&) {
      }
    }
  }

  TEST_CASE("serialization round-trips digests") {
    testutil::Rng rng(7);
    for (int t = 0; t < kTrials; ++t) {
      const std::size_t n = random_size(rng);
      const ref::Mat a = rng.matrix(n, 1e3), b = rng.matrix(n, 1e-3);
      io::Problem p = GaveProblem(testutil::from_ref(a), testutil::from_ref(b), Vector(rng.vector(n, 1e6)));
      if (t % 2 == 1) {
        const std::size_t m = static_cast<std::size_t>(rng.integer(1, 3));
        ref::Mat f(n, ref::Vec(m));
        for (auto& row : f)
          for (double& v : row) v = rng.uniform(-1e8, 1e8);
        p = GavmeProblem(testutil::from_ref(a), testutil::from_ref(b), testutil::from_ref(f));
      }
      const io::Problem back = io::parse_problem(io::problem_to_json(p).dump());
      CHECK(io::problem_digest(back) == io::problem_digest(p));
    }
  }

  TEST_CASE("non-uniqueness proofs imply a singular interval [A - I, A + I]") {
    testutil::Rng rng(8);
    int exercised = 0;
    for (int t = 0; t < kTrials; ++t) {
      const std::size_t n = random_size(rng);
      ref::Mat a = rng.matrix(n, rng.uniform(0.2, 2.0));
      if (t % 5 == 0) {
        // Force an eigenvalue of exactly 1 or 0 through a rank-deficient column.
        for (std::size_t i = 0; i < n; ++i) a[i][0] = (i == 0 && t % 10 == 0) ? 1.0 : 0.0;
      }
      const Matrix A = testutil::from_ref(a);
      bool proved = false;
      for (CheckerId id : {CheckerId::NONUNIQ_SIGMA, CheckerId::NONUNIQ_PSD, CheckerId::NONUNIQ_EIG01})
        proved = proved || checks::check_ave_nonunique(A, id).status() == Status::Proved;
      if (!proved) continue;
      ++exercised;
      CHECK_FALSE(oracle::interval_regularity(A, Matrix::identity(n)).regular);
    }
    CHECK(exercised > 20);
  }
}

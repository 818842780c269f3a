#include "gavekit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <stdexcept>

#include "gavekit/checkers.hpp"

namespace gavekit::bench {

GaveProblem tridiag_problem(std::size_t n) {
  if (n < 3) throw std::invalid_argument("tridiag_problem needs n >= 3");
  const auto k = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
  Eigen::VectorXd x(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    a(i, i) = 8.0;
    if (i > 0) a(i, i - 1) = -1.0;
    if (i + 1 < k) a(i, i + 1) = -1.0;
    x(i) = (i % 2 == 0) ? -1.0 : 1.0;
  }
  Eigen::VectorXd b = a * x - x.cwiseAbs();
  return {Matrix(std::move(a)), Matrix::identity(n), Vector(std::move(b))};
}

std::vector<BenchRow> bench_conditions(std::span<const std::size_t> sizes, int repeats) {
  if (repeats < 1) throw std::invalid_argument("repeats must be positive");
  using clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  if (sizes.empty()) return rows;
  // One untimed pass over the smallest size pages in code and allocator state.
  {
    const GaveProblem warm = tridiag_problem(*std::min_element(sizes.begin(), sizes.end()));
    for (CheckerId id : kBenchConditions) (void)checks::run_checker(warm, id);
  }
  for (std::size_t n : sizes) {
    const GaveProblem p = tridiag_problem(n);
    for (CheckerId id : kBenchConditions) {
      Status status = Status::Inconclusive;
      std::vector<double> times;
      for (int r = 0; r < repeats; ++r) {
        const auto start = clock::now();
        status = checks::run_checker(p, id).status();
        times.push_back(std::chrono::duration<double>(clock::now() - start).count());
      }
      std::nth_element(times.begin(), times.begin() + static_cast<long>(times.size() / 2), times.end());
      const double median = times[times.size() / 2];
      rows.push_back({n, id, std::max(median, 1e-9), status});
    }
  }
  return rows;
}

void write_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << "n,condition,seconds,status\n";
  char buf[32];
  for (const BenchRow& row : rows) {
    std::snprintf(buf, sizeof buf, "%.9g", row.seconds);
    out << row.n << ',' << to_string(row.condition) << ',' << buf << ',' << to_string(row.status) << '\n';
  }
}

bool timing_order_holds(std::span<const BenchRow> rows, std::size_t n) {
  auto time_of = [&](CheckerId id) -> std::optional<double> {
    for (const BenchRow& row : rows)
      if (row.n == n && row.condition == id) return row.seconds;
    return std::nullopt;
  };
  const auto row_dom = time_of(CheckerId::ROW_DOM);
  const auto sigma = time_of(CheckerId::SIGMA_AINVB);
  const auto rho = time_of(CheckerId::RHO_ABS_AINVB);
  return row_dom && sigma && rho && *row_dom < *sigma && *sigma < *rho;
}

}  // namespace gavekit::bench

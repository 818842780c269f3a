#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "gavekit/model.hpp"

namespace gavekit::bench {

/// A = tridiag(-1, 8, -1), B = I, b = A x* - |x*| with x* = (-1, 1, -1, 1, ...).
GaveProblem tridiag_problem(std::size_t n);

/// The three conditions the benchmark compares, in report order.
inline constexpr CheckerId kBenchConditions[] = {CheckerId::RHO_ABS_AINVB, CheckerId::SIGMA_AINVB,
                                                 CheckerId::ROW_DOM};

struct BenchRow {
  std::size_t n = 0;
  CheckerId condition = CheckerId::ROW_DOM;
  double seconds = 0.0;  // median wall-clock of the timed repeats
  Status status = Status::NotEstablished;
};

/// Times each condition on tridiag_problem(n) for every n: one untimed
/// warmup, then the median of `repeats` single-threaded runs.
std::vector<BenchRow> bench_conditions(std::span<const std::size_t> sizes, int repeats = 3);

/// `n,condition,seconds,status` with LF line endings.
void write_csv(std::ostream& out, std::span<const BenchRow> rows);

/// time(ROW_DOM) < time(SIGMA_AINVB) < time(RHO_ABS_AINVB) at size n.
/// False when any of the three rows is missing.
bool timing_order_holds(std::span<const BenchRow> rows, std::size_t n);

}  // namespace gavekit::bench

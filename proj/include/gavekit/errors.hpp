#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace gavekit {

class GaveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix was numerically singular under the pivot threshold.
class SingularError : public GaveError {
 public:
  using GaveError::GaveError;
};

/// An iterative eigenvalue estimate hit its iteration cap.
class ConvergenceError : public GaveError {
 public:
  using GaveError::GaveError;
};

class NotSymmetricError : public GaveError {
 public:
  using GaveError::GaveError;
};

/// An exponential-cost procedure was asked to run above its dimension cap.
class CapExceededError : public GaveError {
 public:
  CapExceededError(std::size_t n, std::size_t cap)
      : GaveError("dimension " + std::to_string(n) + " exceeds cap " + std::to_string(cap)),
        n_(n),
        cap_(cap) {}

  std::size_t dimension() const { return n_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

/// An iterative solver stopped without meeting its residual target.
/// Carries the last iterate so callers can inspect it.
class NoConvergence : public GaveError {
 public:
  NoConvergence(const std::string& what, Eigen::VectorXd last, double residual, int iterations)
      : GaveError(what), last_(std::move(last)), residual_(residual), iterations_(iterations) {}

  const Eigen::VectorXd& last_iterate() const { return last_; }
  double residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  Eigen::VectorXd last_;
  double residual_;
  int iterations_;
};

class ParseError : public GaveError {
 public:
  using GaveError::GaveError;
};

}  // namespace gavekit

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace gavekit {

/// Dense real matrix with positive dimensions and finite entries.
///
/// Immutable once built; all arithmetic goes through the underlying Eigen
/// object returned by eigen().
class Matrix {
 public:
  /// Zero matrix.
  Matrix(std::size_t rows, std::size_t cols);
  /// Row-major entries; throws std::invalid_argument on size mismatch or
  /// non-finite values.
  Matrix(std::size_t rows, std::size_t cols, std::span<const double> row_major);
  explicit Matrix(Eigen::MatrixXd m);

  static Matrix from_rows(const std::vector<std::vector<double>>& rows);
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);

  std::size_t rows() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(m_.cols()); }
  bool is_square() const { return m_.rows() == m_.cols(); }

  double operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  const Eigen::MatrixXd& eigen() const { return m_; }

  Matrix abs() const { return Matrix(Eigen::MatrixXd(m_.cwiseAbs())); }
  Matrix transpose() const { return Matrix(Eigen::MatrixXd(m_.transpose())); }
  Matrix scaled(double c) const { return Matrix(Eigen::MatrixXd(c * m_)); }

  /// Max absolute row sum.
  double norm_inf() const;

  std::vector<double> row_major() const;

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.m_ == b.m_; }

 private:
  Eigen::MatrixXd m_;
};

/// Dense real vector with positive length and finite entries.
class Vector {
 public:
  explicit Vector(std::size_t len);
  Vector(std::initializer_list<double> values);
  explicit Vector(std::span<const double> values);
  explicit Vector(Eigen::VectorXd v);

  std::size_t size() const { return static_cast<std::size_t>(v_.size()); }
  double operator[](std::size_t i) const { return v_(static_cast<Eigen::Index>(i)); }

  const Eigen::VectorXd& eigen() const { return v_; }

  double norm_inf() const { return v_.lpNorm<Eigen::Infinity>(); }
  Vector abs() const { return Vector(Eigen::VectorXd(v_.cwiseAbs())); }
  Vector scaled(double c) const { return Vector(Eigen::VectorXd(c * v_)); }

  std::vector<double> values() const { return {v_.data(), v_.data() + v_.size()}; }

  friend bool operator==(const Vector& a, const Vector& b) { return a.v_ == b.v_; }

 private:
  Eigen::VectorXd v_;
};

}  // namespace gavekit

#include "gavekit/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gavekit {
namespace {

template <typename Derived>
void require_finite(const Eigen::DenseBase<Derived>& m, const char* what) {
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(what) + " has non-finite entries");
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
  m_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::span<const double> row_major)
    : Matrix(rows, cols) {
  if (row_major.size() != rows * cols) {
    throw std::invalid_argument("matrix expects " + std::to_string(rows * cols) + " entries, got " +
                                std::to_string(row_major.size()));
  }
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row_major[i * cols + j];
  require_finite(m_, "matrix");
}

Matrix::Matrix(Eigen::MatrixXd m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.cols() == 0) throw std::invalid_argument("matrix dimensions must be positive");
  require_finite(m_, "matrix");
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("matrix must be nonempty");
  const std::size_t cols = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw std::invalid_argument("ragged matrix: row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(cols));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return Matrix(rows.size(), cols, flat);
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> r;
  for (const auto& row : rows) r.emplace_back(row);
  return from_rows(r);
}

Matrix Matrix::identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return Matrix(Eigen::MatrixXd(Eigen::MatrixXd::Identity(k, k)));
}

Matrix Matrix::diagonal(std::span<const double> d) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d.size()),
                                            static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return Matrix(std::move(m));
}

double Matrix::norm_inf() const { return m_.cwiseAbs().rowwise().sum().maxCoeff(); }

std::vector<double> Matrix::row_major() const {
  std::vector<double> out;
  out.reserve(rows() * cols());
  for (Eigen::Index i = 0; i < m_.rows(); ++i)
    for (Eigen::Index j = 0; j < m_.cols(); ++j) out.push_back(m_(i, j));
  return out;
}

Vector::Vector(std::size_t len) {
  if (len == 0) throw std::invalid_argument("vector length must be positive");
  v_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(len));
}

Vector::Vector(std::initializer_list<double> values)
    : Vector(std::span<const double>(values.begin(), values.size())) {}

Vector::Vector(std::span<const double> values) : Vector(values.size()) {
  for (std::size_t i = 0; i < values.size(); ++i) v_(static_cast<Eigen::Index>(i)) = values[i];
  require_finite(v_, "vector");
}

Vector::Vector(Eigen::VectorXd v) : v_(std::move(v)) {
  if (v_.size() == 0) throw std::invalid_argument("vector length must be positive");
  require_finite(v_, "vector");
}

}  // namespace gavekit

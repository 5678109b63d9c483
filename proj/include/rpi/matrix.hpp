#pragma once

#include "rpi/rational.hpp"

#include <cstddef>
#include <vector>

namespace rpi {

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Lower-triangular matrix stored by rows; row n holds entries 0..n.
class TriangularMatrix {
 public:
  TriangularMatrix() = default;
  explicit TriangularMatrix(std::size_t dimension);

  std::size_t dimension() const noexcept { return rows_.size(); }
  const std::vector<Rational>& row(std::size_t n) const { return rows_.at(n); }

  /// Zero above the diagonal.
  Rational at(std::size_t n, std::size_t k) const;
  void set(std::size_t n, std::size_t k, Rational value);

  Matrix dense() const;

  friend bool operator==(const TriangularMatrix&, const TriangularMatrix&) = default;

 private:
  std::vector<std::vector<Rational>> rows_;
};

}  // namespace rpi

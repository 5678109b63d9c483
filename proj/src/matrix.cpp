#include "rpi/matrix.hpp"

#include "rpi/error.hpp"

namespace rpi {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidArgument, "matrix dimensions do not match");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

TriangularMatrix::TriangularMatrix(std::size_t dimension) : rows_(dimension) {
  for (std::size_t n = 0; n < dimension; ++n) rows_[n].resize(n + 1);
}

Rational TriangularMatrix::at(std::size_t n, std::size_t k) const {
  if (k > n) return 0;
  return rows_.at(n).at(k);
}

void TriangularMatrix::set(std::size_t n, std::size_t k, Rational value) {
  if (k > n) throw Error(ErrorKind::InvalidArgument, "entry above the diagonal of a triangular matrix");
  rows_.at(n).at(k) = std::move(value);
}

Matrix TriangularMatrix::dense() const {
  Matrix m(dimension(), dimension());
  for (std::size_t n = 0; n < dimension(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) m(n, k) = rows_[n][k];
  }
  return m;
}

}  // namespace rpi

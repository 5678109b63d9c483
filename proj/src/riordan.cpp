#include "rpi/riordan.hpp"

#include "rpi/error.hpp"

#include <algorithm>
#include <string>

namespace rpi {

RiordanArray::RiordanArray(Series g, Series f) : g_(std::move(g)), f_(std::move(f)) {
  if (g_.order() == 0 || g_[0] != 1) throw Error(ErrorKind::InvalidArray, "g(0) must be 1");
  if (f_.order() < 2 || f_[0] != 0 || f_[1] == 0) {
    throw Error(ErrorKind::InvalidArray, "f must satisfy f(0) = 0 and f'(0) != 0");
  }
}

RiordanArray RiordanArray::bell(const Series& g) { return RiordanArray(g, g.shifted_up(1)); }

RiordanArray RiordanArray::identity(std::size_t order) {
  return RiordanArray(Series::one(order), Series::x(order));
}

std::size_t RiordanArray::order() const noexcept { return std::min(g_.order(), f_.order()); }

Rational entry(const RiordanArray& r, std::size_t n, std::size_t k) {
  if (n >= r.order()) {
    throw Error(ErrorKind::OutOfOrder, "row " + std::to_string(n) + " is beyond the array order " +
                                           std::to_string(r.order()));
  }
  if (k > n) return 0;
  const Series f = r.f().truncated(n + 1);
  Series p = r.g().truncated(n + 1);
  for (std::size_t i = 0; i < k; ++i) p = p * f;
  return p[n];
}

TriangularMatrix to_matrix(const RiordanArray& r, std::size_t dimension) {
  if (dimension > r.order()) {
    throw Error(ErrorKind::OutOfOrder, "matrix of dimension " + std::to_string(dimension) +
                                           " needs array order at least that large");
  }
  TriangularMatrix m(dimension);
  const Series f = r.f().truncated(dimension);
  Series column = r.g().truncated(dimension);
  for (std::size_t k = 0; k < dimension; ++k) {
    for (std::size_t n = k; n < dimension; ++n) m.set(n, k, column[n]);
    column = column * f;
  }
  return m;
}

RiordanArray multiply(const RiordanArray& r, const RiordanArray& s) {
  return RiordanArray(r.g() * compose(s.g(), r.f()), compose(s.f(), r.f()));
}

RiordanArray inverse(const RiordanArray& r) {
  const Series fbar = revert(r.f());
  return RiordanArray(reciprocal(compose(r.g(), fbar)), fbar);
}

Series ftra_apply(const Series& g, const Series& f, const Series& h) { return g * compose(h, f); }

Series ftra_apply(const RiordanArray& r, const Series& h) { return ftra_apply(r.g(), r.f(), h); }

ProductionData a_and_z(const RiordanArray& r) {
  const Series fbar = revert(r.f());
  const Series a = reciprocal(fbar.shifted_down(1));
  const Series one = Series::one(fbar.order());
  const Series z = (one - reciprocal(compose(r.g(), fbar))) / fbar;
  ProductionData out;
  out.a.assign(a.coeffs().begin(), a.coeffs().end());
  out.z.assign(z.coeffs().begin(), z.coeffs().end());
  return out;
}

Matrix production_matrix(const ProductionData& data, std::size_t size) {
  if (data.z.size() < size || data.a.size() < size) {
    throw Error(ErrorKind::OutOfOrder, "production data too short for a matrix of size " + std::to_string(size));
  }
  Matrix p(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    p(i, 0) = data.z[i];
    for (std::size_t j = 1; j <= std::min(i + 1, size - 1); ++j) p(i, j) = data.a[i + 1 - j];
  }
  return p;
}

Matrix production_matrix_dense(const RiordanArray& r, std::size_t size) {
  const TriangularMatrix m = to_matrix(r, size + 1);
  Matrix p(size, size);
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t i = 0; i < size; ++i) {
      Rational acc = m.at(i + 1, j);
      for (std::size_t k = 0; k < i; ++k) acc -= m.at(i, k) * p(k, j);
      p(i, j) = acc / m.at(i, i);
    }
  }
  return p;
}

Matrix production_matrix(const RiordanArray& r, std::size_t size) {
  Matrix p = production_matrix(a_and_z(r), size);
  if (p != production_matrix_dense(r, size)) {
    throw Error(ErrorKind::Internal, "production matrix from (Z, A) disagrees with M^-1 Mbar");
  }
  return p;
}

ProductionData production_data(const Matrix& p) {
  ProductionData out;
  const std::size_t n = p.rows();
  for (std::size_t i = 0; i < n; ++i) out.z.push_back(p(i, 0));
  if (p.cols() > 1) {
    out.a.push_back(p(0, 1));
    for (std::size_t i = 1; i < n; ++i) out.a.push_back(p(i, 1));
  }
  return out;
}

bool is_bell(const RiordanArray& r) {
  if (!agree(r.f(), r.g().shifted_up(1))) return false;
  const ProductionData pd = a_and_z(r);
  const std::size_t n = std::min(pd.a.size(), pd.z.size() + 1);
  for (std::size_t i = 1; i < n; ++i) {
    if (pd.a[i] != pd.z[i - 1]) throw Error(ErrorKind::Internal, "Bell array violates A = 1 + xZ");
  }
  if (n > 0 && pd.a[0] != 1) throw Error(ErrorKind::Internal, "Bell array has a_0 != 1");
  return true;
}

bool is_pseudo_involution(const Series& g, std::size_t dimension) {
  if (g.order() < dimension) {
    throw Error(ErrorKind::OutOfOrder, "series of order " + std::to_string(g.order()) +
                                           " cannot decide a " + std::to_string(dimension) + "x" +
                                           std::to_string(dimension) + " truncation");
  }
  if (g.order() == 0 || g[0] != 1) throw Error(ErrorKind::InvalidArgument, "involutory candidates need g(0) = 1");
  if (dimension == 0) return true;

  const Series gn = g.truncated(dimension);
  const Series f = -gn.shifted_up(1);

  const Matrix m = to_matrix(RiordanArray(gn, f), dimension).dense();
  const bool by_matrix = (m * m) == Matrix::identity(dimension);

  // f has order dimension + 1, so f(f) = x to that order is equivalent to the
  // matrix identity on the dimension x dimension block.
  const bool by_reversion = revert(f) == f;

  if (by_matrix != by_reversion) {
    throw Error(ErrorKind::Internal, "matrix-square and reversion tests disagree");
  }
  return by_matrix;
}

std::size_t certified_b_length(std::size_t order) { return order == 0 ? 0 : (order - 1) / 2; }

BSequence b_extract(const Series& g) {
  const std::size_t n_order = g.order();
  if (n_order == 0 || g[0] != 1) throw Error(ErrorKind::InvalidArgument, "b_extract needs g(0) = 1");
  if (!is_pseudo_involution(g, n_order)) {
    throw Error(ErrorKind::NoBSequence, "(g, -xg) does not square to the identity");
  }
  const TriangularMatrix t = to_matrix(RiordanArray::bell(g), n_order);
  const std::size_t m_len = certified_b_length(n_order);

  BSequence out;
  out.b.resize(m_len);
  for (std::size_t m = 0; m < m_len; ++m) {
    // Column 0 at row 2m+1; the coefficient of b_m is t(m,m) = 1.
    Rational acc = t.at(2 * m + 1, 0);
    for (std::size_t j = 0; j < m; ++j) acc -= out.b[j] * t.at(2 * m - j, j);
    out.b[m] = acc;
  }

  for (std::size_t n = 0; n + 1 < n_order; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const std::size_t j_max = (n - k) / 2;
      if (j_max >= m_len) continue;
      Rational rhs = k > 0 ? t.at(n, k - 1) : Rational(0);
      for (std::size_t j = 0; j <= j_max; ++j) rhs += out.b[j] * t.at(n - j, k + j);
      if (rhs != t.at(n + 1, k)) {
        throw Error(ErrorKind::NoBSequence,
                    "recurrence fails at (" + std::to_string(n + 1) + ", " + std::to_string(k) + ")");
      }
    }
  }
  return out;
}

Series a_from_b(const Series& b, std::size_t order) {
  Series a = Series::one(order);
  const Series x2 = Series::monomial(1, 2, order);
  for (std::size_t iter = 0; iter <= order; ++iter) {
    Series inner = compose(b, x2 / a).shifted_up(1);
    const std::size_t n = std::min(order, inner.order());
    Series next = Series::one(n) + inner.truncated(n);
    if (next == a) return a;
    a = std::move(next);
  }
  return a;
}

Series a_from_g(const Series& g) { return reciprocal(g.rescaled(-1)); }

}  // namespace rpi

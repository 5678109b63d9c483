#pragma once

#include "rpi/matrix.hpp"
#include "rpi/series.hpp"

#include <cstddef>
#include <vector>

namespace rpi {

/// A Riordan array (g, f): the lower-triangular matrix t(n,k) = [x^n] g f^k.
/// Construction enforces g(0) = 1, f(0) = 0 and f'(0) != 0.
class RiordanArray {
 public:
  RiordanArray(Series g, Series f);

  /// The Bell array (g, x g).
  static RiordanArray bell(const Series& g);
  static RiordanArray identity(std::size_t order);

  const Series& g() const noexcept { return g_; }
  const Series& f() const noexcept { return f_; }
  /// Rows 0 .. order()-1 are exact.
  std::size_t order() const noexcept;

 private:
  Series g_;
  Series f_;
};

/// Z- and A-sequences: the production matrix has first column z and
/// column j >= 1 equal to a shifted down by j-1 rows.
struct ProductionData {
  std::vector<Rational> z;
  std::vector<Rational> a;
};

/// B-sequence (Delta-sequence) of a Bell pseudo-involution.
struct BSequence {
  std::vector<Rational> b;

  Series as_series() const { return Series(b); }
};

Rational entry(const RiordanArray& r, std::size_t n, std::size_t k);

/// The first `dimension` rows of the array.
TriangularMatrix to_matrix(const RiordanArray& r, std::size_t dimension);

/// Group product (g, f)(u, v) = (g u(f), v(f)).
RiordanArray multiply(const RiordanArray& r, const RiordanArray& s);
/// (1/g(fbar), fbar) with fbar the reversion of f.
RiordanArray inverse(const RiordanArray& r);

/// Fundamental theorem action h -> g h(f). Takes the pair directly so f may
/// have valuation above one, as in the x^3-substitutions of the family.
Series ftra_apply(const Series& g, const Series& f, const Series& h);
Series ftra_apply(const RiordanArray& r, const Series& h);

/// A(x) = x/fbar(x), Z(x) = (1 - 1/g(fbar(x)))/fbar(x).
ProductionData a_and_z(const RiordanArray& r);

/// Lower-Hessenberg production matrix assembled from (z, a).
Matrix production_matrix(const ProductionData& data, std::size_t size);
/// Production matrix of r, assembled from a_and_z and cross-checked against
/// the dense P = M^{-1} Mbar. Needs r.order() > size.
Matrix production_matrix(const RiordanArray& r, std::size_t size);
/// P = M^{-1} Mbar by forward substitution on the (size+1)-row truncation.
Matrix production_matrix_dense(const RiordanArray& r, std::size_t size);
/// Reads (z, a) back off a production matrix.
ProductionData production_data(const Matrix& p);

/// f = x g over the common order. When true, A = 1 + x Z is also asserted.
bool is_bell(const RiordanArray& r);

/// Whether (g, -x g) squares to the identity on the dimension x dimension
/// truncation. Corroborated by revert(-x g) = -x g; the two verdicts must
/// agree or an Internal error is raised.
bool is_pseudo_involution(const Series& g, std::size_t dimension);

/// Number of B-sequence entries an order-N series certifies.
std::size_t certified_b_length(std::size_t order);

/// Extracts the B-sequence of the pseudo-involution (g, x g) from column 0 and
/// checks the full recurrence t(n+1,k) = t(n,k-1) + sum_j b_j t(n-j,k+j) on
/// every cell the certified entries reach. Throws NoBSequence on failure.
BSequence b_extract(const Series& g);

/// Solves A = 1 + x B(x^2/A) for A with A(0) = 1.
Series a_from_b(const Series& b, std::size_t order);

/// A(x) = 1/g(-x).
Series a_from_g(const Series& g);

}  // namespace rpi

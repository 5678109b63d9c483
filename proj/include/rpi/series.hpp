#pragma once

#include "rpi/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace rpi {

/// Truncated formal power series over the rationals.
///
/// A series of order N retains the coefficients of x^0 .. x^(N-1); everything
/// beyond is unknown, not zero. Binary operations keep only what both operands
/// determine, so the order of a result never overstates its precision.
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  static Series zero(std::size_t order);
  static Series one(std::size_t order);
  static Series constant(const Rational& value, std::size_t order);
  /// The variable x itself.
  static Series x(std::size_t order);
  static Series monomial(const Rational& value, std::size_t degree, std::size_t order);
  /// An exact polynomial, as much of it as fits below `order`.
  static Series polynomial(std::span<const Rational> coeffs, std::size_t order);
  static Series polynomial(std::initializer_list<Rational> coeffs, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }
  /// Index of the first nonzero retained coefficient, or order() if none.
  std::size_t valuation() const noexcept;

  /// Throws OutOfOrder for n >= order().
  const Rational& operator[](std::size_t n) const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// Keep the first `order` coefficients; `order` may not exceed order().
  Series truncated(std::size_t order) const;
  /// x^k * s. The order grows by k.
  Series shifted_up(std::size_t k) const;
  /// s / x^k. The first k coefficients must be zero; the order drops by k.
  Series shifted_down(std::size_t k) const;
  /// s(c*x).
  Series rescaled(const Rational& c) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Coefficientwise equality over the common retained order.
bool agree(const Series& s, const Series& t);

Series operator-(const Series& s);
Series operator+(const Series& s, const Series& t);
Series operator-(const Series& s, const Series& t);
Series operator*(const Series& s, const Series& t);
Series operator*(const Rational& c, const Series& s);
/// Series quotient. Common powers of x are cancelled first, so the divisor
/// may have positive valuation as long as the dividend's is at least as high.
/// The order of the result drops by valuation(t).
Series operator/(const Series& s, const Series& t);

Series reciprocal(const Series& s);

/// s(t(x)); requires t(0) = 0.
Series compose(const Series& outer, const Series& inner);

/// Compositional inverse: f(revert(f)) = x. Requires f(0) = 0, f'(0) != 0.
Series revert(const Series& f);

/// Principal square root (constant term +1). Requires s(0) = 1.
Series sqrt(const Series& s);

/// Generating function of the Catalan numbers C_0 .. C_{order-1}.
Series catalan(std::size_t order);

/// One level of a continued fraction 1/(alpha - beta/(...)).
struct CfLevel {
  Series alpha;
  Series beta;
};

/// Value of the periodic continued fraction
///   1/(alpha_1 - beta_1/(alpha_2 - beta_2/(... alpha_p - beta_p/(alpha_1 - ...))))
/// to the requested order. Each alpha must have constant term 1 and each
/// beta positive valuation.
Series cf_eval(std::span<const CfLevel> levels, std::size_t order);

}  // namespace rpi

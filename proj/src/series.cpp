#include "rpi/series.hpp"

#include "rpi/error.hpp"

#include <algorithm>
#include <string>

namespace rpi {

Series Series::zero(std::size_t order) { return Series(std::vector<Rational>(order)); }

Series Series::one(std::size_t order) { return constant(1, order); }

Series Series::constant(const Rational& value, std::size_t order) {
  std::vector<Rational> c(order);
  if (order > 0) c[0] = value;
  return Series(std::move(c));
}

Series Series::x(std::size_t order) { return monomial(1, 1, order); }

Series Series::monomial(const Rational& value, std::size_t degree, std::size_t order) {
  std::vector<Rational> c(order);
  if (degree < order) c[degree] = value;
  return Series(std::move(c));
}

Series Series::polynomial(std::span<const Rational> coeffs, std::size_t order) {
  std::vector<Rational> c(order);
  std::copy_n(coeffs.begin(), std::min(order, coeffs.size()), c.begin());
  return Series(std::move(c));
}

Series Series::polynomial(std::initializer_list<Rational> coeffs, std::size_t order) {
  return polynomial(std::span<const Rational>(coeffs.begin(), coeffs.size()), order);
}

std::size_t Series::valuation() const noexcept {
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n] != 0) return n;
  }
  return coeffs_.size();
}

const Rational& Series::operator[](std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw Error(ErrorKind::OutOfOrder,
                "coefficient " + std::to_string(n) + " requested from a series of order " +
                    std::to_string(coeffs_.size()));
  }
  return coeffs_[n];
}

Series Series::truncated(std::size_t order) const {
  if (order > coeffs_.size()) {
    throw Error(ErrorKind::OutOfOrder, "cannot extend a series of order " + std::to_string(coeffs_.size()) +
                                           " to order " + std::to_string(order));
  }
  return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
}

Series Series::shifted_up(std::size_t k) const {
  std::vector<Rational> c(coeffs_.size() + k);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + static_cast<std::ptrdiff_t>(k));
  return Series(std::move(c));
}

Series Series::shifted_down(std::size_t k) const {
  if (valuation() < k) {
    throw Error(ErrorKind::DivisionByHigherValuation,
                "cannot divide a series of valuation " + std::to_string(valuation()) + " by x^" + std::to_string(k));
  }
  if (k >= coeffs_.size()) return Series();
  return Series(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

Series Series::rescaled(const Rational& c) const {
  std::vector<Rational> out(coeffs_.size());
  Rational p = 1;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    out[n] = coeffs_[n] * p;
    p *= c;
  }
  return Series(std::move(out));
}

bool agree(const Series& s, const Series& t) {
  const std::size_t n = std::min(s.order(), t.order());
  return std::equal(s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(n), t.coeffs().begin());
}

Series operator-(const Series& s) {
  std::vector<Rational> c(s.coeffs().begin(), s.coeffs().end());
  for (auto& v : c) v = -v;
  return Series(std::move(c));
}

Series operator+(const Series& s, const Series& t) {
  const std::size_t n = std::min(s.order(), t.order());
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = s.coeffs()[i] + t.coeffs()[i];
  return Series(std::move(c));
}

Series operator-(const Series& s, const Series& t) {
  const std::size_t n = std::min(s.order(), t.order());
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = s.coeffs()[i] - t.coeffs()[i];
  return Series(std::move(c));
}

Series operator*(const Series& s, const Series& t) {
  const std::size_t n = std::min(s.order(), t.order());
  const auto a = s.coeffs();
  const auto b = t.coeffs();
  std::vector<Rational> c(n);
  Rational term;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b[j] == 0) continue;
      term = a[i] * b[j];
      c[i + j] += term;
    }
  }
  return Series(std::move(c));
}

Series operator*(const Rational& c, const Series& s) {
  std::vector<Rational> out(s.coeffs().begin(), s.coeffs().end());
  for (auto& v : out) v *= c;
  return Series(std::move(out));
}

Series operator/(const Series& s, const Series& t) {
  const std::size_t v = t.valuation();
  if (v == t.order()) {
    throw Error(ErrorKind::DivisionByHigherValuation, "divisor has no nonzero retained coefficient");
  }
  if (s.valuation() < v) {
    throw Error(ErrorKind::DivisionByHigherValuation, "dividend valuation " + std::to_string(s.valuation()) +
                                                          " is below divisor valuation " + std::to_string(v));
  }
  const Series num = s.shifted_down(v);
  const Series den = t.shifted_down(v);
  const std::size_t n = std::min(num.order(), den.order());
  const auto d = den.coeffs();
  std::vector<Rational> q(n);
  Rational acc;
  for (std::size_t i = 0; i < n; ++i) {
    acc = num.coeffs()[i];
    for (std::size_t k = 1; k <= i; ++k) {
      if (d[k] != 0) acc -= d[k] * q[i - k];
    }
    q[i] = acc / d[0];
  }
  return Series(std::move(q));
}

Series reciprocal(const Series& s) { return Series::one(s.order()) / s; }

Series compose(const Series& outer, const Series& inner) {
  if (inner.order() == 0 || inner.coeffs()[0] != 0) {
    throw Error(ErrorKind::CompositionConstantTerm, "inner series must have zero constant term");
  }
  // Unknown outer coefficients k >= order(outer) only reach x^(k*v).
  const std::size_t v = inner.valuation();
  const std::size_t result_order = std::min(inner.order(), outer.order() * v);
  if (result_order == 0) return Series();
  const std::size_t terms = std::min(outer.order(), (result_order - 1) / v + 1);
  const Series t = inner.truncated(result_order);
  Series acc = Series::constant(outer.coeffs()[terms - 1], result_order);
  for (std::size_t k = terms - 1; k-- > 0;) {
    acc = acc * t;
    std::vector<Rational> c(acc.coeffs().begin(), acc.coeffs().end());
    c[0] += outer.coeffs()[k];
    acc = Series(std::move(c));
  }
  return acc;
}

Series revert(const Series& f) {
  if (f.order() < 2 || f.coeffs()[0] != 0 || f.coeffs()[1] == 0) {
    throw Error(ErrorKind::NotRevertible, "reversion needs f(0) = 0 and f'(0) != 0");
  }
  // Lagrange inversion: [x^n] revert(f) = (1/n) [x^(n-1)] (x/f)^n.
  const std::size_t n_max = f.order();
  const Series h = reciprocal(f.shifted_down(1));
  std::vector<Rational> out(n_max);
  Series power = h;
  for (std::size_t n = 1; n < n_max; ++n) {
    if (n > 1) power = power * h;
    out[n] = power.coeffs()[n - 1] / Rational(static_cast<long>(n));
  }
  return Series(std::move(out));
}

Series sqrt(const Series& s) {
  if (s.order() == 0 || s.coeffs()[0] != 1) {
    throw Error(ErrorKind::SqrtConstantTerm, "square root needs constant term 1");
  }
  const std::size_t n = s.order();
  std::vector<Rational> r(n);
  r[0] = 1;
  Rational acc;
  for (std::size_t i = 1; i < n; ++i) {
    acc = s.coeffs()[i];
    for (std::size_t k = 1; k < i; ++k) acc -= r[k] * r[i - k];
    r[i] = acc / 2;
  }
  return Series(std::move(r));
}

Series catalan(std::size_t order) {
  std::vector<Rational> c(order);
  Integer value = 1;
  for (std::size_t n = 0; n < order; ++n) {
    c[n] = Rational(value);
    // C_{n+1} = C_n * 2(2n+1)/(n+2)
    value = value * static_cast<unsigned long>(2 * (2 * n + 1)) / static_cast<unsigned long>(n + 2);
  }
  return Series(std::move(c));
}

Series cf_eval(std::span<const CfLevel> levels, std::size_t order) {
  if (levels.empty()) throw Error(ErrorKind::InvalidArgument, "continued fraction needs at least one level");
  std::size_t n = order;
  for (const auto& level : levels) {
    if (level.alpha.order() == 0 || level.alpha.coeffs()[0] != 1) {
      throw Error(ErrorKind::InvalidArgument, "continued fraction level alpha must have constant term 1");
    }
    if (level.beta.order() == 0 || level.beta.coeffs()[0] != 0) {
      throw Error(ErrorKind::NonConvergent, "continued fraction level beta must have positive valuation");
    }
    n = std::min({n, level.alpha.order(), level.beta.order()});
  }
  std::vector<CfLevel> work;
  work.reserve(levels.size());
  for (const auto& level : levels) work.push_back({level.alpha.truncated(n), level.beta.truncated(n)});

  // Every level's beta raises the valuation of the error by at least one,
  // so n + 1 full cycles always reach the fixed point.
  Series g = Series::one(n);
  for (std::size_t cycle = 0; cycle <= n + 1; ++cycle) {
    Series next = g;
    for (std::size_t i = work.size(); i-- > 0;) {
      next = reciprocal(work[i].alpha - work[i].beta * next);
    }
    if (next == g && cycle > 0) return next;
    g = std::move(next);
  }
  throw Error(ErrorKind::NonConvergent, "continued fraction did not stabilise");
}

}  // namespace rpi

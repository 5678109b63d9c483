#pragma once

#include "rpi/rational.hpp"
#include "rpi/series.hpp"

#include <cstddef>
#include <vector>

namespace rpi {

/// Parameters of the pseudo-involution whose B-sequence has generating
/// function (a - c x)/(1 + b x). The B = a + d x case is (a, 0, -d).
struct FamilyParams {
  Rational a;
  Rational b;
  Rational c;

  static FamilyParams from_ad(const Rational& a, const Rational& d) { return {a, 0, -d}; }

  /// ab + c, the quantity that controls degeneracy and the Somos parameters.
  Rational discriminant() const { return a * b + c; }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// g(x) = 1/(1-ax-bx^2) c(-x^2(b+cx)/(1-ax-bx^2)^2), the involutory
/// generating function of the family.
Series g_family(const FamilyParams& p, std::size_t order);

/// A(x) = 1 + ax - x^3(ab+c)/(1+ax+bx^2) c(x^3(ab+c)/(1+ax+bx^2)^2).
Series a_family(const FamilyParams& p, std::size_t order);

/// The periodic continued-fraction levels of g: (1-ax-bx^2, -x^2(b+cx)).
CfLevel g_family_level(const FamilyParams& p, std::size_t order);
Series g_family_cf(const FamilyParams& p, std::size_t order);

/// B = a + dx specialization through its own closed form
/// 1/(1-ax) c(dx^3/(1-ax)^2).
Series g_ad(const Rational& a, const Rational& d, std::size_t order);

/// g_0 = 1, g_1 = a, g_n = a g_{n-1} + b g_{n-2} - b sum_{k<=n-2} g_k g_{n-2-k}.
Series g_recurrence_c0(const Rational& a, const Rational& b, std::size_t order);

// Closed-sum expressions for individual coefficients; used as oracles
// against the series constructions.
Rational sum_ad(std::size_t n, const Rational& a, const Rational& d);
/// j-indexed double sum.
Rational sum_ab(std::size_t n, const Rational& a, const Rational& b);
/// i-indexed double sum; must agree with sum_ab everywhere.
Rational sum_ab_alt(std::size_t n, const Rational& a, const Rational& b);
Rational sum_abc(std::size_t n, const FamilyParams& p);

/// 1/(1+ax+bx^2) c(x^3(ab+c)/(1+ax+bx^2)^2).
Series companion(const FamilyParams& p, std::size_t order);
/// Same series from the continued fraction with level (1+ax+bx^2, (ab+c)x^3).
Series companion_cf(const FamilyParams& p, std::size_t order);

/// t_n = sum_k binom(n,k) s_k, or with sign (-1)^(n-k) when inverse is set.
std::vector<Rational> binomial_transform(std::span<const Rational> s, bool inverse);

/// Narayana triangle N(n,k) = binom(n,k) binom(n-1,n-k)/(n-k+1), N(0,0) = 1.
Rational narayana(std::size_t n, std::size_t k);

/// sum_{k<=n/2} sum_{j<=n-k} binom(n-k, j) N(j, k).
Rational narayana_diagonal_sum(std::size_t n);

}  // namespace rpi

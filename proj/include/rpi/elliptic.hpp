#pragma once

#include "rpi/family.hpp"
#include "rpi/riordan.hpp"
#include "rpi/series.hpp"
#include "rpi/somos.hpp"

#include <cstddef>
#include <vector>

namespace rpi {

// The curve family E_a : y^2 - a x y - y = x^3 - x and the chain of series
// transformations that turns each member into an involutory g(x).

/// Every stage of the curve-to-involution construction, truncated to the
/// requested order.
struct PipelineTrace {
  /// Root y(x) of the quadratic with y(0) = 0, y'(0) = 1.
  Series branch;
  /// (y - x)/x^2.
  Series stripped;
  /// 1/(1 - x - x^2 stripped).
  Series fraction;
  /// revert(x * fraction)/x.
  Series reverted;
  /// 1/(1 - x^2 reverted).
  Series f;
  /// (1/(1+(a-1)x), -x/(1+(a-1)x)) applied to (f(1+(a-1)x) - 1)/(x f (ax+a-1)).
  Series g;
};

/// (1 + a x - sqrt(1 + 2(a-2)x + a^2 x^2 + 4x^3))/2.
Series curve_branch(const Rational& a, std::size_t order);

/// Runs the construction at internal order N + 6 and truncates every stage to
/// N. The fraction and f stages are checked against their closed forms
/// 2/(1 - a x + sqrt(1 + 2(a-2)x + a^2 x^2 + 4x^3)) and
/// 2x/(sqrt(1 + 2ax + a^2x^2 - 4x^3 + 4(1-a)x^4) + (2-a)x - 1).
PipelineTrace pipeline(const Rational& a, std::size_t order);

Series f_from_curve(const Rational& a, std::size_t order);

/// B(x) = (2 - a + (1 - 3a + a^2) x)/(1 + (1 - a) x).
struct CurveBSequence {
  Rational num0;
  Rational num1;
  Rational den1;

  Series expansion(std::size_t order) const;
};

CurveBSequence b_from_curve(const Rational& a);

/// (2 - a, 1 - a, -(a^2 - 3a + 1)).
FamilyParams family_params_from_curve(const Rational& a);

/// The periodic fraction with level (1 + (a-2)x + (a-1)x^2, x^2(a - 1 + (1 - 3a + a^2)x)).
Series curve_cf(const Rational& a, std::size_t order);

/// Hankel transform of f_from_curve(a) checked against (alpha, beta) = (1, 1 - a).
/// Marked degenerate when beta = 0.
SomosReport curve_somos_check(const Rational& a, std::size_t order);

}  // namespace rpi

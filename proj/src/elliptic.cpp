#include "rpi/elliptic.hpp"

#include "rpi/error.hpp"
#include "rpi/hankel.hpp"

namespace rpi {

namespace {

constexpr std::size_t kPipelineSlack = 6;

Series curve_discriminant(const Rational& a, std::size_t order) {
  return Series::polynomial({1, 2 * (a - 2), a * a, 4}, order);
}

}  // namespace

Series curve_branch(const Rational& a, std::size_t order) {
  const Series root = sqrt(curve_discriminant(a, order));
  return Rational(1, 2) * (Series::polynomial({1, a}, order) - root);
}

PipelineTrace pipeline(const Rational& a, std::size_t order) {
  const std::size_t m = order + kPipelineSlack;
  const Series x = Series::x(m);
  const Series one = Series::one(m);

  const Series branch = curve_branch(a, m);
  const Series stripped = (branch - x).shifted_down(2);
  const Series fraction = reciprocal(one - x - stripped.shifted_up(2));

  const Series fraction_closed =
      Rational(2) * reciprocal(Series::polynomial({1, -a}, m) + sqrt(curve_discriminant(a, m)));
  if (!agree(fraction, fraction_closed)) {
    throw Error(ErrorKind::Internal, "fraction stage disagrees with its closed form");
  }

  const Series reverted_full = revert(fraction.shifted_up(1));
  if (reverted_full.valuation() != 1) {
    throw Error(ErrorKind::Internal, "reverted series must have valuation 1");
  }
  const Series reverted = reverted_full.shifted_down(1);
  const Series f = reciprocal(Series::one(m + 2) - reverted.shifted_up(2)).truncated(m);

  const Series quartic = Series::polynomial({1, 2 * a, a * a, -4, 4 * (1 - a)}, m + 1);
  const Series f_closed =
      Rational(2) * Series::x(m + 1) / (sqrt(quartic) + Series::polynomial({-1, 2 - a}, m + 1));
  if (!agree(f, f_closed)) {
    throw Error(ErrorKind::Internal, "f stage disagrees with its closed form");
  }

  const Series shift = Series::polynomial({1, a - 1}, m);
  const Series h = (f * shift - one) / (x * f * Series::polynomial({a - 1, a}, m));
  const Series outer_g = reciprocal(shift);
  const Series outer_f = -(x * outer_g);
  const Series g = ftra_apply(outer_g, outer_f, h);

  PipelineTrace trace;
  trace.branch = branch.truncated(order);
  trace.stripped = stripped.truncated(order);
  trace.fraction = fraction.truncated(order);
  trace.reverted = reverted.truncated(order);
  trace.f = f.truncated(order);
  trace.g = g.truncated(order);
  return trace;
}

Series f_from_curve(const Rational& a, std::size_t order) { return pipeline(a, order).f; }

Series CurveBSequence::expansion(std::size_t order) const {
  return Series::polynomial({num0, num1}, order) / Series::polynomial({1, den1}, order);
}

CurveBSequence b_from_curve(const Rational& a) { return {2 - a, 1 - 3 * a + a * a, 1 - a}; }

FamilyParams family_params_from_curve(const Rational& a) { return {2 - a, 1 - a, -(a * a - 3 * a + 1)}; }

Series curve_cf(const Rational& a, std::size_t order) {
  const CfLevel level{Series::polynomial({1, a - 2, a - 1}, order),
                      Series::polynomial({0, 0, a - 1, 1 - 3 * a + a * a}, order)};
  return cf_eval(std::span<const CfLevel>(&level, 1), order);
}

SomosReport curve_somos_check(const Rational& a, std::size_t order) {
  const Series f = f_from_curve(a, order);
  const HankelTransform h = hankel_transform(f.coeffs());
  const SomosParams p{1, 1 - a};
  SomosReport report = somos4_check(h.values, p);
  report.label = "hankel(f_from_curve) from index 0";
  report.offset = 0;
  report.degenerate = p.beta == 0;
  return report;
}

}  // namespace rpi

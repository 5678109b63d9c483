#include "rpi/somos.hpp"

#include "rpi/error.hpp"
#include "rpi/hankel.hpp"

#include <string>

namespace rpi {

namespace {

struct Equation {
  Rational lhs;   // t_n t_{n-4}
  Rational c_alpha;  // t_{n-1} t_{n-3}
  Rational c_beta;   // t_{n-2}^2
};

Equation equation_at(std::span<const Rational> t, std::size_t n) {
  return {t[n] * t[n - 4], t[n - 1] * t[n - 3], t[n - 2] * t[n - 2]};
}

}  // namespace

SomosReport somos4_check(std::span<const Rational> t, const SomosParams& p) {
  if (t.size() < 5) {
    throw Error(ErrorKind::InsufficientTerms, "a Somos-4 check needs at least 5 terms");
  }
  SomosReport report;
  report.params = p;
  report.length = t.size();
  report.degenerate = p.alpha == 0 && p.beta == 0;
  for (std::size_t n = 4; n < t.size(); ++n) {
    const Equation e = equation_at(t, n);
    if (e.lhs == p.alpha * e.c_alpha + p.beta * e.c_beta) {
      report.passed.push_back(n);
    } else {
      report.failures.push_back(n);
    }
  }
  return report;
}

SomosParams somos4_fit(std::span<const Rational> t) {
  if (t.size() < 6) throw Error(ErrorKind::InsufficientTerms, "fitting Somos-4 parameters needs at least 6 terms");
  std::vector<Equation> eqs;
  for (std::size_t n = 4; n < t.size(); ++n) eqs.push_back(equation_at(t, n));

  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (std::size_t j = i + 1; j < eqs.size(); ++j) {
      const Rational det = eqs[i].c_alpha * eqs[j].c_beta - eqs[j].c_alpha * eqs[i].c_beta;
      if (det == 0) continue;
      SomosParams p;
      p.alpha = (eqs[i].lhs * eqs[j].c_beta - eqs[j].lhs * eqs[i].c_beta) / det;
      p.beta = (eqs[i].c_alpha * eqs[j].lhs - eqs[j].c_alpha * eqs[i].lhs) / det;
      const SomosReport r = somos4_check(t, p);
      if (!r.ok()) {
        throw Error(ErrorKind::NoSomosFit, "fitted (" + format_rational(p.alpha) + ", " + format_rational(p.beta) +
                                               ") fails at index " + std::to_string(r.failures.front()));
      }
      return p;
    }
  }
  throw Error(ErrorKind::Underdetermined, "every 2x2 system from the sequence is singular");
}

SomosParams family_somos_params(const FamilyParams& p) {
  const Rational d2 = p.discriminant() * p.discriminant();
  return {d2, p.b * d2};
}

ConjectureReport conjecture_family(const FamilyParams& p, std::size_t order) {
  ConjectureReport out;
  out.family = p;
  out.params = family_somos_params(p);
  out.degenerate = p.discriminant() == 0;

  const Series g = g_family(p, order);
  const HankelTransform hg = hankel_transform(g.coeffs());
  const std::span<const Rational> tail = std::span<const Rational>(hg.values).subspan(std::min<std::size_t>(2, hg.values.size()));
  if (tail.size() >= 5) {
    out.family_check = somos4_check(tail, out.params);
  }
  out.family_check.label = "hankel(g_family) from index 2";
  out.family_check.offset = 2;
  out.family_check.degenerate = out.degenerate;

  const Series comp = companion(p, order);
  const HankelTransform hc = hankel_transform(comp.coeffs());
  if (hc.values.size() >= 5) {
    out.companion_check = somos4_check(hc.values, out.params);
  }
  out.companion_check.label = "hankel(companion) from index 0";
  out.companion_check.offset = 0;
  out.companion_check.degenerate = out.degenerate;
  return out;
}

}  // namespace rpi

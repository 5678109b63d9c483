#include "rpi/family.hpp"

#include "rpi/error.hpp"

#include <cstdint>

namespace rpi {

namespace {

using i64 = std::int64_t;

Rational binom_q(i64 n, i64 k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return Rational(binomial(n, k));
}

// 1/alpha * c(beta/alpha^2), the value of the continued fraction with
// constant level (alpha, beta).
Series catalan_substitution(const Series& alpha, const Series& beta, std::size_t order) {
  const Series inner = beta / (alpha * alpha);
  return compose(catalan(order), inner) / alpha;
}

}  // namespace

Series g_family(const FamilyParams& p, std::size_t order) {
  const Series alpha = Series::polynomial({1, -p.a, -p.b}, order);
  const Series beta = Series::polynomial({0, 0, -p.b, -p.c}, order);
  return catalan_substitution(alpha, beta, order);
}

Series a_family(const FamilyParams& p, std::size_t order) {
  const Rational d = p.discriminant();
  const Series lead = Series::polynomial({1, p.a}, order);
  const Series tail = companion(p, order);
  return lead - (d * tail.shifted_up(3)).truncated(order);
}

CfLevel g_family_level(const FamilyParams& p, std::size_t order) {
  return {Series::polynomial({1, -p.a, -p.b}, order), Series::polynomial({0, 0, -p.b, -p.c}, order)};
}

Series g_family_cf(const FamilyParams& p, std::size_t order) {
  const CfLevel level = g_family_level(p, order);
  return cf_eval(std::span<const CfLevel>(&level, 1), order);
}

Series g_ad(const Rational& a, const Rational& d, std::size_t order) {
  const Series alpha = Series::polynomial({1, -a}, order);
  const Series beta = Series::monomial(d, 3, order);
  return catalan_substitution(alpha, beta, order);
}

Series g_recurrence_c0(const Rational& a, const Rational& b, std::size_t order) {
  std::vector<Rational> g(order);
  if (order > 0) g[0] = 1;
  if (order > 1) g[1] = a;
  for (std::size_t n = 2; n < order; ++n) {
    Rational conv = 0;
    for (std::size_t k = 0; k <= n - 2; ++k) conv += g[k] * g[n - 2 - k];
    g[n] = a * g[n - 1] + b * g[n - 2] - b * conv;
  }
  return Series(std::move(g));
}

Rational sum_ad(std::size_t n, const Rational& a, const Rational& d) {
  const i64 nn = static_cast<i64>(n);
  Rational total = 0;
  for (i64 k = 0; 3 * k <= nn; ++k) {
    total += binom_q(nn - k, nn - 3 * k) * power(d, k) * power(a, nn - 3 * k) *
             Rational(catalan_number(static_cast<std::uint64_t>(k)));
  }
  return total;
}

Rational sum_ab(std::size_t n, const Rational& a, const Rational& b) {
  const i64 nn = static_cast<i64>(n);
  Rational total = 0;
  for (i64 k = 0; 2 * k <= nn; ++k) {
    Rational inner = 0;
    for (i64 j = 0; j <= nn - 2 * k; ++j) {
      const Rational coeff = binom_q(2 * k + j, j) * binom_q(j, nn - 2 * k - j);
      if (coeff == 0) continue;
      inner += coeff * power(b, nn - 2 * k - j) * power(a, 2 * j + 2 * k - nn);
    }
    total += inner * power(-b, k) * Rational(catalan_number(static_cast<std::uint64_t>(k)));
  }
  return total;
}

Rational sum_ab_alt(std::size_t n, const Rational& a, const Rational& b) {
  const i64 nn = static_cast<i64>(n);
  Rational total = 0;
  for (i64 k = 0; 2 * k <= nn; ++k) {
    Rational inner = 0;
    for (i64 i = 0; i <= nn - 2 * k; ++i) {
      const Rational coeff = binom_q(nn - i, 2 * k) * binom_q(nn - 2 * k - i, i);
      if (coeff == 0) continue;
      inner += coeff * power(b, i) * power(a, nn - 2 * k - 2 * i);
    }
    total += inner * power(-b, k) * Rational(catalan_number(static_cast<std::uint64_t>(k)));
  }
  return total;
}

Rational sum_abc(std::size_t n, const FamilyParams& p) {
  const i64 nn = static_cast<i64>(n);
  Rational total = 0;
  for (i64 k = 0; 2 * k <= nn; ++k) {
    Rational outer = 0;
    for (i64 i = 0; i <= std::min(k, nn - 2 * k); ++i) {
      Rational inner = 0;
      for (i64 m = 0; m <= nn - 2 * k - i; ++m) {
        const i64 j = nn - 2 * k - i - m;
        const Rational coeff = binom_q(nn - i - m, j) * binom_q(j, m);
        if (coeff == 0) continue;
        inner += coeff * power(p.b, m) * power(p.a, nn - 2 * k - 2 * m - i);
      }
      outer += binom_q(k, i) * power(p.c, i) * power(p.b, k - i) * inner;
    }
    const Rational sign = (k % 2 == 0) ? 1 : -1;
    total += outer * sign * Rational(catalan_number(static_cast<std::uint64_t>(k)));
  }
  return total;
}

Series companion(const FamilyParams& p, std::size_t order) {
  const Series alpha = Series::polynomial({1, p.a, p.b}, order);
  const Series beta = Series::monomial(p.discriminant(), 3, order);
  return catalan_substitution(alpha, beta, order);
}

Series companion_cf(const FamilyParams& p, std::size_t order) {
  const CfLevel level{Series::polynomial({1, p.a, p.b}, order), Series::monomial(p.discriminant(), 3, order)};
  return cf_eval(std::span<const CfLevel>(&level, 1), order);
}

std::vector<Rational> binomial_transform(std::span<const Rational> s, bool inverse) {
  std::vector<Rational> out(s.size());
  for (std::size_t n = 0; n < s.size(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      Rational term = binom_q(static_cast<i64>(n), static_cast<i64>(k)) * s[k];
      if (inverse && (n - k) % 2 == 1) term = -term;
      acc += term;
    }
    out[n] = acc;
  }
  return out;
}

Rational narayana(std::size_t n, std::size_t k) {
  if (k > n) throw Error(ErrorKind::InvalidArgument, "narayana needs k <= n");
  if (n == 0) return 1;
  const i64 nn = static_cast<i64>(n);
  const i64 kk = static_cast<i64>(k);
  return binom_q(nn, kk) * binom_q(nn - 1, nn - kk) / Rational(nn - kk + 1);
}

Rational narayana_diagonal_sum(std::size_t n) {
  Rational total = 0;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    for (std::size_t j = k; j <= n - k; ++j) {
      total += binom_q(static_cast<i64>(n - k), static_cast<i64>(j)) * narayana(j, k);
    }
  }
  return total;
}

}  // namespace rpi

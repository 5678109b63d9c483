#include "rpi/hankel.hpp"

#include "rpi/error.hpp"

#include <string>
#include <utility>

namespace rpi {

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign < 0 ? Integer(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

Rational hankel_det(std::span<const Rational> s, std::size_t n) {
  if (s.size() < 2 * n + 1) {
    throw Error(ErrorKind::InsufficientTerms, "h_" + std::to_string(n) + " needs " + std::to_string(2 * n + 1) +
                                                  " terms, got " + std::to_string(s.size()));
  }
  Integer denom = 1;
  for (std::size_t i = 0; i <= 2 * n; ++i) {
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), s[i].get_den_mpz_t());
  }
  std::vector<Integer> scaled(2 * n + 1);
  for (std::size_t i = 0; i <= 2 * n; ++i) {
    scaled[i] = s[i].get_num() * (denom / s[i].get_den());
  }
  std::vector<std::vector<Integer>> m(n + 1, std::vector<Integer>(n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) m[i][j] = scaled[i + j];
  }
  const Integer det = bareiss_determinant(std::move(m));
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), denom.get_mpz_t(), static_cast<unsigned long>(n + 1));
  Rational out(det, scale);
  out.canonicalize();
  return out;
}

HankelTransform hankel_transform(std::span<const Rational> s) {
  HankelTransform out;
  out.source_length = s.size();
  if (s.empty()) return out;
  const std::size_t m = (s.size() - 1) / 2;
  out.values.reserve(m + 1);
  for (std::size_t n = 0; n <= m; ++n) out.values.push_back(hankel_det(s, n));
  return out;
}

}  // namespace rpi

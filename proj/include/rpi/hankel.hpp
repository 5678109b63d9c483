#pragma once

#include "rpi/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace rpi {

struct HankelTransform {
  /// h_0 .. h_M with h_n = det(s_{i+j})_{0<=i,j<=n}.
  std::vector<Rational> values;
  std::size_t source_length = 0;
};

/// Determinant of the (n+1)x(n+1) Hankel matrix of s. Rational input is
/// scaled to integers and reduced by fraction-free elimination with row pivoting.
Rational hankel_det(std::span<const Rational> s, std::size_t n);

/// Every h_n the given terms determine, each as an independent determinant.
HankelTransform hankel_transform(std::span<const Rational> s);

/// Exact determinant of an integer matrix (Bareiss). The argument is consumed.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

}  // namespace rpi

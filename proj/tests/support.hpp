#pragma once

#include "rpi/error.hpp"
#include "rpi/series.hpp"

#include <optional>
#include <vector>

namespace support {

// Kind of the rpi::Error thrown by f, or nullopt when it returns normally.
template <class F>
std::optional<rpi::ErrorKind> error_of(F&& f) {
  try {
    f();
  } catch (const rpi::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline std::vector<rpi::Rational> coeffs(const rpi::Series& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

inline std::vector<rpi::Rational> ints(std::initializer_list<long> v) {
  std::vector<rpi::Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace support

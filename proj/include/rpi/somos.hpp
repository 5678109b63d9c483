#pragma once

#include "rpi/family.hpp"
#include "rpi/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rpi {

/// Somos-4 hypothesis t_n t_{n-4} = alpha t_{n-1} t_{n-3} + beta t_{n-2}^2.
struct SomosParams {
  Rational alpha;
  Rational beta;

  friend bool operator==(const SomosParams&, const SomosParams&) = default;
};

/// Outcome of checking the product form on the indices 4 .. length-1 of a
/// sequence. `passed` and `failures` partition those indices.
struct SomosReport {
  std::string label;
  std::optional<SomosParams> params;
  /// Index into the source sequence where the checked sequence starts.
  std::size_t offset = 0;
  std::size_t length = 0;
  std::vector<std::size_t> passed;
  std::vector<std::size_t> failures;
  bool degenerate = false;

  bool ok() const noexcept { return failures.empty(); }
  /// Number of product-form identities evaluated.
  std::size_t checked() const noexcept { return passed.size() + failures.size(); }
};

SomosReport somos4_check(std::span<const Rational> t, const SomosParams& p);

/// Fits (alpha, beta) from the first index pair giving a nonsingular 2x2
/// system, then requires the whole sequence to satisfy the fitted recurrence.
/// Throws Underdetermined or NoSomosFit.
SomosParams somos4_fit(std::span<const Rational> t);

/// (alpha, beta) = ((ab+c)^2, b(ab+c)^2).
SomosParams family_somos_params(const FamilyParams& p);

struct ConjectureReport {
  FamilyParams family;
  SomosParams params;
  /// Hankel transform of g_family checked from index 2.
  SomosReport family_check;
  /// Hankel transform of the companion series checked from index 0.
  SomosReport companion_check;
  bool degenerate = false;

  bool ok() const noexcept { return family_check.ok() && companion_check.ok(); }
};

/// Empirical test of the family Somos-4 relation at order N. Failures are
/// report content, never exceptions.
ConjectureReport conjecture_family(const FamilyParams& p, std::size_t order);

}  // namespace rpi

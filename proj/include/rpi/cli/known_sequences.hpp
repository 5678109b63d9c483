#pragma once

#include "rpi/rational.hpp"
#include "rpi/somos.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace rpi::cli {

/// A reference prefix and the computation that must reproduce it exactly.
/// Matrices are stored row-major (ragged rows for triangles).
struct KnownSequence {
  std::string label;
  std::vector<std::int64_t> prefix;
  std::string source;
  /// Produces exactly `terms` values.
  std::function<std::vector<Rational>(std::size_t terms)> compute;
};

/// A reference Somos-4 claim: the terms to fit and the parameters expected.
struct KnownSomos {
  std::string label;
  std::string source;
  std::function<std::vector<Rational>()> terms;
  SomosParams expected;
};

const std::vector<KnownSequence>& known_sequences();
const std::vector<KnownSomos>& known_somos_fits();

const KnownSequence* find_known(std::string_view label);

struct CheckOutcome {
  std::string label;
  bool pass = false;
  std::string detail;
};

std::vector<CheckOutcome> run_corpus_suite(std::span<const KnownSequence> sequences,
                                          std::span<const KnownSomos> fits);

/// Seeded random family triples (small integers, ab + c != 0) through
/// conjecture_family, and random integer curve parameters through
/// curve_somos_check; `trials` of each.
std::vector<CheckOutcome> run_conjecture_suite(std::uint64_t seed, std::size_t trials, std::size_t order);

}  // namespace rpi::cli

#pragma once

#include "rpi/rational.hpp"
#include "rpi/series.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rpi::cli {

enum class OutputFormat { Plain, Json, Csv };

struct RunConfig {
  std::size_t order = 32;
  OutputFormat format = OutputFormat::Plain;
  std::optional<std::size_t> offset;
  std::uint64_t seed = 1;
  std::size_t trials = 30;
};

/// What a command operates on: a named construction with its parameters, or
/// an explicit term list.
///   family a b c | ad a d | companion a b c | curve a | curve-f a | terms
struct Subject {
  std::string kind;
  std::vector<Rational> params;
  std::vector<Rational> terms;
};

/// Throws rpi::Error(InvalidArgument) on an unknown kind or wrong arity.
Subject parse_subject(const std::vector<std::string>& words, const std::vector<Rational>& terms);

/// Comma-separated rationals.
std::vector<Rational> parse_terms(const std::string& list);

/// Series of the subject to the given order. An explicit term list is read as
/// a polynomial, zero beyond its last term.
Series subject_series(const Subject& subject, std::size_t order);

namespace exit_code {
inline constexpr int kSuccess = 0;
inline constexpr int kUsage = 1;
inline constexpr int kComputation = 2;
inline constexpr int kVerification = 3;
}  // namespace exit_code

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rpi::cli

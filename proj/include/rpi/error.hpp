#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rpi {

enum class ErrorKind {
  InvalidArgument,
  OutOfOrder,
  DivisionByHigherValuation,
  CompositionConstantTerm,
  NotRevertible,
  SqrtConstantTerm,
  NonConvergent,
  InvalidArray,
  NoBSequence,
  InsufficientTerms,
  Underdetermined,
  NoSomosFit,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this one exception type; the
/// kind is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rpi

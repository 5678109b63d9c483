#include "rpi/rational.hpp"

#include "rpi/error.hpp"

#include <cctype>

namespace rpi {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::OutOfOrder: return "OutOfOrder";
    case ErrorKind::DivisionByHigherValuation: return "DivisionByHigherValuation";
    case ErrorKind::CompositionConstantTerm: return "CompositionConstantTerm";
    case ErrorKind::NotRevertible: return "NotRevertible";
    case ErrorKind::SqrtConstantTerm: return "SqrtConstantTerm";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::InvalidArray: return "InvalidArray";
    case ErrorKind::NoBSequence: return "NoBSequence";
    case ErrorKind::InsufficientTerms: return "InsufficientTerms";
    case ErrorKind::Underdetermined: return "Underdetermined";
    case ErrorKind::NoSomosFit: return "NoSomosFit";
    case ErrorKind::Internal: return "InternalError";
  }
  return "UnknownError";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  if (!text.empty() && text.front() == '-') n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) { return value.get_str(10); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "binomial with negative upper index");
  if (k < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Integer catalan_number(std::uint64_t n) {
  Integer b = binomial(static_cast<std::int64_t>(2 * n), static_cast<std::int64_t>(n));
  return b / Integer(static_cast<unsigned long>(n + 1));
}

Rational power(const Rational& value, std::int64_t exponent) {
  if (exponent < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::vector<Rational> to_rationals(std::span<const std::int64_t> values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (auto v : values) out.emplace_back(static_cast<long>(v));
  return out;
}

}  // namespace rpi

#include <contextlab/error.hpp>
#include <contextlab/rational.hpp>

#include <algorithm>
#include <cctype>

namespace contextlab {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

[[noreturn]] void reject(std::string_view text) {
  throw Error(ErrorKind::ParseError, "not an exact rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) reject(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) reject(text);
    value = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (!(whole.empty() || all_digits(whole)) || !all_digits(frac)) reject(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    value = Rational(digits, scale);
  } else {
    if (!all_digits(body)) reject(text);
    value = Rational(mpz_class(std::string(body), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& value) {
  // mpq_get_str omits a unit denominator only for canonical values.
  Rational reduced = value;
  reduced.canonicalize();
  return reduced.get_str(10);
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedDistribution: return "MalformedDistribution";
    case ErrorKind::UnknownContent: return "UnknownContent";
    case ErrorKind::UnknownContext: return "UnknownContext";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::DuplicateBunch: return "DuplicateBunch";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MixedOutcomeSpace: return "MixedOutcomeSpace";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownScenario: return "UnknownScenario";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace contextlab

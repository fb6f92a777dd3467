#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace contextlab {

/// Exact probability / LP coefficient. Always kept canonical (lowest terms,
/// positive denominator).
using Rational = mpq_class;

/// Parses "3/4", "-2", "0" or a finite decimal such as "0.25".
/// Throws Error{ErrorKind::ParseError} on anything else.
Rational parse_rational(std::string_view text);

/// "num/den" in lowest terms, "num" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace contextlab

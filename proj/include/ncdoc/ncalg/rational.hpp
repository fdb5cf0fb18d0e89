#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ncdoc {

/// Exact arbitrary-precision rational; the only coefficient type used by the
/// symbolic modules.
using Rational = mpq_class;

/// Parses "3", "-7", "1/2" or "-22/7". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& value);

}  // namespace ncdoc

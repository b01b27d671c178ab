#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eqwb {

/// Exact rational scalar used throughout.
using Rational = mpq_class;

/// "3", "-1/2"; always in lowest terms.
std::string to_string(const Rational& q);

/// Accepts "n" or "n/d" with optional sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace eqwb

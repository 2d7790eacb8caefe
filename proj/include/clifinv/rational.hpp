#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace clifinv {

// All correctness paths use exact arbitrary-precision rationals.
using Rational = mpq_class;

// "p" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Rational& value);

// Accepts "p", "p/q" and finite decimals such as "-1.25". Decimals are
// converted exactly. Throws std::invalid_argument on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace clifinv

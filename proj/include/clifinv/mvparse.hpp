#pragma once

#include <string>
#include <string_view>

#include "clifinv/multivector.hpp"

namespace clifinv {

// Parses sums of terms such as "3+e2+e5-e12-e15+3 e125". A term is an
// optional coefficient (integer, p/q or finite decimal) followed by an
// optional blade "e<digits>", separated by optional whitespace or '*'.
// Permuted blade indices are reordered with the matching sign. Throws
// ParseError with kind syntax, unknown_index or duplicate_index.
Multivector parse_multivector(const Signature& sig, std::string_view text);

enum class MvFormat { plain, json };

// plain: nonzero terms in canonical order, e.g. "3576 + 96 e1 - 53832 e23";
// the zero multivector prints as "0".
// json: {"signature":[p,q],"coeffs":["r0",...]} with 2^n exact strings.
std::string format_multivector(const Multivector& a, MvFormat style = MvFormat::plain);

// Inverse of the json style. Throws ParseError(syntax) on malformed input.
Multivector parse_multivector_json(std::string_view text);

}  // namespace clifinv

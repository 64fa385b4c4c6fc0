#pragma once

#include <gmpxx.h>

#include <string>

namespace grlie {

/// Exact rational scalar over Q. Backed by GMP and always kept canonical
/// (lowest terms, positive denominator), so operator== is structural
/// equality of field elements. No rounding anywhere.
using Rational = mpq_class;

/// Builds a canonical rational from an integer pair. Throws
/// std::invalid_argument when den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p" or "p/q" with optional leading '-' on either part.
/// Rejects empty parts, stray characters and zero denominators.
Rational rational_from_string(const std::string& text);

/// Renders "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string rational_to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace grlie

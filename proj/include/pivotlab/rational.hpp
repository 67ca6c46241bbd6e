#pragma once

// Exact rationals backed by GMP.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace pivotlab {

using Rational = mpq_class;

/// Parses "3", "-0.01", "2.5e-3" or "7/9" exactly. Throws FormatError.
Rational parse_rational(std::string_view text);

/// Exact value of a finite double.
Rational to_rational(double value);

double to_double(const Rational& q);

/// max(bits(numerator), bits(denominator)).
std::size_t bit_size(const Rational& q);

/// Canonical "p/q" (or "p" for integers).
std::string to_string(const Rational& q);

}  // namespace pivotlab

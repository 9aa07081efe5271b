#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace griess {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator; values built from a raw numerator/denominator
/// pair must go through make_rational().
using Rational = mpq_class;

using QVector = std::vector<Rational>;

Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const Integer& numerator, const Integer& denominator);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Inverse of to_string(const Rational&). Accepts "p", "-p", "p/q"; the
/// result is canonicalized. Throws InvalidArgument on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

bool is_zero(const QVector& v);

/// Least common multiple of the denominators of v (1 for an empty vector).
Integer common_denominator(const QVector& v);

}  // namespace griess

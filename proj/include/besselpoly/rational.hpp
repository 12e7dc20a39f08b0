#ifndef BESSELPOLY_RATIONAL_HPP
#define BESSELPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace besselpoly {

/// Exact arbitrary-precision rational. gmpxx keeps every result canonical
/// (reduced, positive denominator) once constructed through make_rational or
/// parse_rational.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Accepts "p/q" or "p" (optional leading '-'); rejects decimals, exponents,
/// whitespace and zero denominators with std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// value^k for any integer k (k < 0 requires value != 0).
Rational pow(const Rational& value, int k);

/// Rising factorial [x]_m = x(x+1)...(x+m-1), m >= 0.
Rational rising(const Rational& x, int m);

/// Falling factorial (x)_m = x(x-1)...(x-m+1), m >= 0.
Rational falling(const Rational& x, int m);

bool is_integer(const Rational& value);

} // namespace besselpoly

#endif

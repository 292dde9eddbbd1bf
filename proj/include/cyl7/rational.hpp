#pragma once

#include <gmpxx.h>
#include <string>

namespace cyl7 {

using Rational = mpq_class;

// Parse a plain decimal string ("-4.124414157636", "2", "1/3") into an exact rational.
Rational rational_from_decimal(const std::string& s);

// Fixed-point decimal rendering with `digits` places after the point,
// rounded toward zero. Exact for terminating expansions of length <= digits.
std::string decimal_from_rational(const Rational& q, int digits);

// Truncate a decimal string toward zero at `digits` places after the point.
std::string truncate_decimal(const std::string& s, int digits);

// Directed rational square-root bounds: sqrt_lower(q) <= sqrt(q) <= sqrt_upper(q),
// tight to about `guard_digits` decimal digits. Requires q >= 0.
Rational sqrt_upper(const Rational& q, unsigned guard_digits = 30);
Rational sqrt_lower(const Rational& q, unsigned guard_digits = 30);

Rational pow_rational(const Rational& base, unsigned exp);

double to_double(const Rational& q);

} // namespace cyl7

#pragma once

// Thin helpers over GMP's exact integer/rational types. Everything the
// library decides on is decided in exact arithmetic; doubles appear only in
// report columns (logarithms of exact quantities).

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace reccf {

using Int = mpz_class;
using Rat = mpq_class;

// num/den in lowest terms with positive denominator; throws
// division_by_zero_error when den == 0.
Rat rat_from_parts(const Int& num, const Int& den);

// Exact base^exp (exp >= 0). A canonical base yields a canonical power.
Rat rat_pow(const Rat& base, unsigned long exp);

Int int_pow(const Int& base, unsigned long exp);

// Largest integer <= x.
Int floor_of(const Rat& x);

bool is_integer(const Rat& x);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

// Number of decimal digits of |x| (1 for x == 0).
std::size_t decimal_digits(const Int& x);

// Natural log of x > 0, accurate for arbitrarily large x.
double log_of(const Int& x);

// Natural log of |x|, x != 0.
double log_abs(const Rat& x);

// Fixed 12-significant-digit rendering used by all report writers.
std::string format_double(double x);

}  // namespace reccf

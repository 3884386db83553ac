#pragma once

#include <gmpxx.h>

#include <string>

namespace tgeo {

// Arbitrary-precision rational. GMP keeps values canonical (coprime,
// positive denominator), which string round-trips rely on.
using Rational = mpq_class;

// Accepts "n", "-n", "n/d". Throws ParseError on anything else or d == 0.
Rational parse_rational(const std::string& s);

// "n" when d == 1, else "n/d".
std::string rational_str(const Rational& q);

double rational_double(const Rational& q);

} // namespace tgeo

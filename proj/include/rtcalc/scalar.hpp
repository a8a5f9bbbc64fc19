#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rtcalc {

// Exact rationals. mpq_class keeps values canonical as long as every
// construction from a numerator/denominator pair goes through make_scalar.
using Scalar = mpq_class;

Scalar make_scalar(long num, long den = 1);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else
// (including a zero denominator).
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& s);

Scalar factorial(unsigned n);
Scalar binomial(unsigned n, unsigned k);

} // namespace rtcalc

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace superhom {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q", "-p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace superhom

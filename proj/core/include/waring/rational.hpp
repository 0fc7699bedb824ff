#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace waring {

using Integer = mpz_class;
/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator by GMP's canonicalizing operators.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Throws ValidationError on malformed text or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Overflow-checked product for rank values; throws ResourceError on overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

}  // namespace waring

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace barth {

using Integer = mpz_class;
using Rational = mpq_class;

/// Serializes as "p/q", or "k" when the value is integral.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "k" or "p/q" (canonicalizes). Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// Returns (-1)^e as an int.
constexpr int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

/// Integer power of a (possibly negative) machine integer base.
Integer int_pow(long base, unsigned long exponent);

} // namespace barth

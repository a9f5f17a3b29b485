#pragma once

// Exact integer and rational arithmetic.
//
// Integer and Rational are GMP's mpz_class / mpq_class. Every Rational produced
// by this library is canonical (lowest terms, positive denominator); the helpers
// below preserve that.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mixzeta {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. Throws std::domain_error when den == 0.
Rational make_rational(long num, long den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Inverse of to_string; also accepts surrounding whitespace and a leading '+'.
Rational parse_rational(std::string_view text);

/// q^e for any integer e; throws std::domain_error on 0^e with e < 0.
Rational pow(const Rational& q, long e);

/// Nearest double (GMP truncates; this is good to about one ulp).
double to_double(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace mixzeta

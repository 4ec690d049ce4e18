#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qcalc {

using Integer = mpz_class;
/// Exact rational; GMP keeps it canonical (gcd 1, positive denominator).
using Rational = mpq_class;

/// num/den in canonical form (mpq_class's two-argument constructor is not).
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p/q" or "p" (optional sign). Throws ParseError or DivisionByZero.
Rational parse_rational(std::string_view text);

/// Always "p/q", e.g. "1/1", "-3/4", "0/1" (serialization format).
std::string to_fraction_string(const Rational& r);

/// "p" for integers, "p/q" otherwise (human-facing rendering).
std::string to_display_string(const Rational& r);

/// Ordinary binomial coefficient with the generalized upper-index rule:
/// b < 0 gives 0; a < 0 gives (-1)^b C(b-a-1, b).
Integer binomial(long a, long b);

Integer factorial(long n);

/// Exponent of p in a nonzero integer.
int valuation(const Integer& x, unsigned long p);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace qcalc

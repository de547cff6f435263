#ifndef MULTIJOINT_RATIONAL_H_
#define MULTIJOINT_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace multijoint {

using Integer = mpz_class;

// Always canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1. GMP keeps
// results of arithmetic canonical; ParseRational canonicalizes input.
using Rational = mpq_class;

// Accepts "num/den", "num" and an optional leading sign. Throws
// ValidationError on malformed text or a zero denominator.
Rational ParseRational(std::string_view text);

// "num/den", denominator always present ("0/1", "3/1").
std::string ToString(const Rational& value);

// num / den in canonical form. mpq_class(num, den) does not canonicalize,
// so every two-argument construction goes through here. den != 0.
inline Rational Frac(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int Sign(const Rational& value) { return sgn(value); }
inline int Sign(const Integer& value) { return sgn(value); }

// Nearest multiple of 2^-bits to `value`, ties rounded away from zero.
Rational DyadicRound(double value, int bits);

Integer Gcd(const Integer& a, const Integer& b);
Integer Lcm(const Integer& a, const Integer& b);

// The rational with the smallest denominator in the closed interval [lo, hi].
Rational SimplestRationalBetween(const Rational& lo, const Rational& hi);

}  // namespace multijoint

#endif  // MULTIJOINT_RATIONAL_H_

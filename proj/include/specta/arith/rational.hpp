#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace specta {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; `canonicalize()` is only needed after raw
// construction from numerator/denominator pairs.
using Integer = mpz_class;
using Rational = mpq_class;

Rational makeRational(const Integer& num, const Integer& den);
Rational makeRational(long num, long den = 1);

/// Parses "p", "-p/q" or a decimal literal such as "0.25".
Rational parseRational(std::string_view text);

std::string toString(const Rational& q);
std::string toString(const Integer& z);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

Integer floorOf(const Rational& q);
Integer ceilOf(const Rational& q);

/// Simplest rational (least denominator, then least |numerator|) in the
/// closed interval [lo, hi]; lo <= hi required.
Rational simplestBetween(const Rational& lo, const Rational& hi);

/// Exact square root when q is the square of a rational.
bool rationalSqrt(const Rational& q, Rational& root);

Integer factorial(unsigned long n);

Rational power(const Rational& base, unsigned long exp);

}  // namespace specta

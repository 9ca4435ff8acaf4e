#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace diagonalis {

/// Arbitrary-precision rational. GMP keeps every mpq_class result in lowest
/// terms with a positive denominator; values built from raw numerator and
/// denominator pairs go through make_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// "num/den" (or "num" when the denominator is 1).
std::string to_string(const Rational& q);

/// Accepts "3", "-16/27" and plain decimals such as "0.125" (no exponent
/// notation). Throws std::invalid_argument on malformed input or a zero
/// denominator.
Rational parse_rational(std::string_view text);

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
Rational binomial(long n, long k);
Integer binomial_int(long n, long k);
Integer factorial(long n);

/// q^e for any integer exponent (q != 0 when e < 0).
Rational pow(const Rational& q, long e);

int sign(const Rational& q);
bool is_integer(const Rational& q);

/// Exact square root if q is the square of a rational.
bool rational_sqrt(const Rational& q, Rational& root);

}  // namespace diagonalis

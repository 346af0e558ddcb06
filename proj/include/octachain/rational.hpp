#pragma once

// Exact arithmetic primitives. All quantities in this library are exact:
// rationals are always in lowest terms with positive denominator (GMP keeps
// them canonical as long as construction goes through make_rational), and
// integers are arbitrary precision.

#include <gmpxx.h>

#include <string>

namespace octachain {

using BigInt = mpz_class;
using Rational = mpq_class;

// Canonical rational num/den: reduced, denominator > 0, zero is 0/1.
// Throws std::invalid_argument on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// GMP's C++ classes take at most `long`; route 64-bit counters through here.
inline BigInt to_bigint(long long v) {
    static_assert(sizeof(long) == sizeof(long long), "LP64 assumed");
    return BigInt(static_cast<long>(v));
}
inline Rational to_rational(long long v) { return Rational(to_bigint(v)); }

// Exact integer value of q; throws std::domain_error if q is not an integer.
BigInt to_integer(const Rational& q);

// "18" when the denominator is 1, otherwise "238/3".
std::string rational_to_string(const Rational& q);

// Fixed-point rendering with round-half-up (ties go toward +infinity),
// e.g. 238/3 -> "79.33" at two digits. Matches the table formatting used
// throughout the CLI.
std::string to_decimal_string(const Rational& q, int digits = 2);

}  // namespace octachain

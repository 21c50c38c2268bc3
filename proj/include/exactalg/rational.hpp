#pragma once

#include <gmpxx.h>

#include <string>

namespace exactalg {

// Arbitrary-precision rational scalar, always in canonical reduced form
// (gcd(num, den) = 1, den > 0). GMP maintains canonicity under arithmetic;
// construction from a raw pair goes through make_rational.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = e > 0 ? base : Rational(1) / base;
    long n = e > 0 ? e : -e;
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace exactalg

// Exact arbitrary-precision rational scalars used throughout the toolkit.
//
// All numeric values in the library are exact rationals (GMP mpq); there is
// no floating-point mode anywhere. Serialization is always "num/den" (or
// just "num" when the denominator is 1), never a float.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace minmod {

using Rational = mpq_class;
using Integer = mpz_class;

// Builds a canonical rational from a (possibly unreduced) fraction.
inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Canonical string form: "-15/32", "7", "0".
inline std::string rat_str(const Rational& r) { return r.get_str(); }

// Parses "num/den" or "num"; throws std::invalid_argument on malformed input.
inline Rational rat_parse(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) {
        throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    }
    if (r.get_den() == 0) {
        throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    }
    r.canonicalize();
    return r;
}

// Integer power with negative exponents allowed (base must be nonzero then).
inline Rational rat_pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0 to a negative power");
        return rat_pow(Rational(1) / base, -e);
    }
    Rational acc = 1, b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// n! as a rational (small n).
inline Rational rat_factorial(long n) {
    Rational acc = 1;
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

}  // namespace minmod

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace adeq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat &q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat &q) { return boost::multiprecision::denominator(q); }

inline Int ipow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline int sign(const Int &x) { return x.sign(); }
inline int sign(const Rat &x) { return x.sign(); }

/// Largest integer n with n <= q.
inline Int rat_floor(const Rat &q) {
    Int n = num(q), d = den(q);  // d > 0 by cpp_rational invariant
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

inline Int rat_ceil(const Rat &q) { return -rat_floor(-q); }

inline bool fits_long(const Int &x) {
    return x >= std::numeric_limits<long>::min() && x <= std::numeric_limits<long>::max();
}

inline long to_long(const Int &x) {
    if (!fits_long(x)) throw std::overflow_error("integer too large: " + x.str());
    return static_cast<long>(x);
}

}  // namespace adeq

#pragma once

// Exact scalar arithmetic: arbitrary-precision integers and canonical
// rationals (gcd-reduced, denominator > 0). Backed by Boost.Multiprecision.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace npaths {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numer(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denom(const Rat& q) { return boost::multiprecision::denominator(q); }

// canonical rational from any sign pattern; denominator must be nonzero
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

inline bool is_integer(const Rat& q) { return denom(q) == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw std::domain_error("to_int: not an integer: " + q.str());
    return numer(q);
}

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact at every step
    }
    return r;
}

inline Int catalan(unsigned n) { return binomial(2 * n, n) / Int(n + 1); }

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
    return Rat(int_pow(numer(base), e), int_pow(denom(base), e));
}

}  // namespace npaths

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <numeric>
#include <string>

namespace xmodcat {

using BigInt = boost::multiprecision::mpz_int;
// Kept canonical by the backend: gcd-reduced, positive denominator.
using Rational = boost::multiprecision::mpq_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }

// Total order used wherever reproducible sorting of exact values is needed:
// smaller absolute value first, non-negative before negative on ties.
// Chosen so that the trivial character sorts ahead of sign characters.
inline bool value_order_less(const Rational& a, const Rational& b) {
    Rational aa = a < 0 ? Rational(-a) : a;
    Rational bb = b < 0 ? Rational(-b) : b;
    if (aa != bb) return aa < bb;
    if (a == b) return false;
    return a >= 0;  // a = -b, nonzero: the positive one first
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    return std::lcm(a, b);
}

}  // namespace xmodcat

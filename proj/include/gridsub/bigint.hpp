#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gridsub {

using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigCount& v) { return v.str(); }

inline BigCount pow2(unsigned k) {
    BigCount r = 1;
    r <<= k;
    return r;
}

inline BigCount factorial(unsigned n) {
    BigCount r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigCount binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigCount r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// "p/q" for non-integers, plain integer otherwise.
std::string to_fraction_string(const Rational& r);

/// Decimal rendering with `digits` significant digits, computed exactly.
std::string to_decimal_string(const Rational& r, int digits = 12);

}  // namespace gridsub

#pragma once

// Closed forms for the two-row counts:
//   B(m,n) = 2^(m-2) / (n-1)! * P_n(m),   A(m,n) = 2^(m-2) / (n-1)! * Q_n(m),
// with P_n and Q_n monic of degree n-1.

#include "gridsub/bigint.hpp"
#include "gridsub/polynomial.hpp"

#include <string>

namespace gridsub {

/// P_n from the summation recurrence P_n(m) = (n-1) * (P_{n-1}(m) + sum_{i=n}^{m} P_{n-1}(i)).
RationalPoly derive_p(int n);

/// P_n fitted through the recursion values at m = n..2n-1 (cross-check route).
RationalPoly derive_p_by_interpolation(int n);

/// Q_n fitted through the recursion values at m = n..2n-1, then checked at
/// m = 2n..3n-1 and for being monic of degree n-1. Throws ValidationError
/// if either check fails.
RationalPoly derive_q(int n);

/// 2^(m-2) * poly(m) / (n-1)!, exact. m >= 1.
Rational closed_form_value(const RationalPoly& poly, int m, int n);

struct AsymptoticReport {
    int n = 0;
    int m = 0;
    int degree_p = 0;
    int degree_q = 0;
    Rational leading_p;
    Rational leading_q;
    Rational ratio;  ///< B(m,n) / A(m,n) = P_n(m) / Q_n(m)
    bool equal_degree_and_leading = false;

    std::string ratio_decimal() const { return to_decimal_string(ratio, 12); }
};

AsymptoticReport asymptotic_check(int n, int m_max);

}  // namespace gridsub

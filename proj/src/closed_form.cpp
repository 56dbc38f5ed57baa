#include "gridsub/closed_form.hpp"

#include "gridsub/errors.hpp"
#include "gridsub/two_row.hpp"

#include <stdexcept>
#include <vector>

namespace gridsub {

namespace {

Rational pow2_rational(int e) {
    return e >= 0 ? Rational(pow2(static_cast<unsigned>(e))) : Rational(1, pow2(static_cast<unsigned>(-e)));
}

// count * (n-1)! / 2^(m-2): the polynomial's value at m.
Rational normalized(const HalfInt& count, int m, int n) {
    return count.as_rational() * Rational(factorial(static_cast<unsigned>(n - 1))) / pow2_rational(m - 2);
}

RationalPoly fit(int n, bool bimonotone) {
    std::vector<Rational> xs, ys;
    for (int m = n; m <= 2 * n - 1; ++m) {
        xs.emplace_back(m);
        ys.push_back(normalized(count_two_row(m, n, bimonotone), m, n));
    }
    return interpolate(xs, ys);
}

}  // namespace

RationalPoly derive_p(int n) {
    if (n < 1) throw std::invalid_argument("derive_p needs n >= 1");
    RationalPoly p = RationalPoly::constant(1);
    for (int k = 2; k <= n; ++k) {
        // sum_{i=k}^{m} P(i) = F(m) - F(k-1)
        const RationalPoly prefix = prefix_sum_poly(p);
        const RationalPoly tail = prefix - RationalPoly::constant(prefix(Rational(k - 1)));
        p = Rational(k - 1) * (p + tail);
    }
    return p;
}

RationalPoly derive_p_by_interpolation(int n) {
    if (n < 1) throw std::invalid_argument("derive_p_by_interpolation needs n >= 1");
    return fit(n, true);
}

RationalPoly derive_q(int n) {
    if (n < 1) throw std::invalid_argument("derive_q needs n >= 1");
    RationalPoly q = fit(n, false);
    if (q.degree() != n - 1 || !q.is_monic()) {
        throw ValidationError("fitted Q_" + std::to_string(n) + " = " + q.to_string() + " is not monic of degree " +
                              std::to_string(n - 1));
    }
    for (int m = 2 * n; m <= 3 * n - 1; ++m) {
        if (q(Rational(m)) != normalized(count_two_row_all(m, n), m, n)) {
            throw ValidationError("fitted Q_" + std::to_string(n) + " disagrees with the recursion at m = " +
                                  std::to_string(m));
        }
    }
    return q;
}

Rational closed_form_value(const RationalPoly& poly, int m, int n) {
    return pow2_rational(m - 2) * poly(Rational(m)) / Rational(factorial(static_cast<unsigned>(n - 1)));
}

AsymptoticReport asymptotic_check(int n, int m_max) {
    if (n < 1 || m_max < n) throw std::invalid_argument("asymptotic_check needs n >= 1 and m_max >= n");
    const auto p = derive_p(n);
    const auto q = derive_q(n);
    AsymptoticReport r;
    r.n = n;
    r.m = m_max;
    r.degree_p = p.degree();
    r.degree_q = q.degree();
    r.leading_p = p.leading();
    r.leading_q = q.leading();
    r.ratio = p(Rational(m_max)) / q(Rational(m_max));
    r.equal_degree_and_leading =
        r.degree_p == n - 1 && r.degree_q == n - 1 && r.leading_p == 1 && r.leading_q == 1;
    return r;
}

}  // namespace gridsub

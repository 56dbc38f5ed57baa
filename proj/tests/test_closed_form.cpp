#include "gridsub/closed_form.hpp"
#include "gridsub/polynomial.hpp"
#include "gridsub/two_row.hpp"

#include <doctest.h>

using namespace gridsub;

namespace {

RationalPoly ints(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return RationalPoly(std::move(c));
}

BigCount as_integer(const Rational& r) {
    REQUIRE(boost::multiprecision::denominator(r) == 1);
    return boost::multiprecision::numerator(r);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    const auto p = ints({-60, -4, 9, 1});
    CHECK(p.degree() == 3);
    CHECK(p.is_monic());
    CHECK(p.to_string() == "m^3 + 9m^2 - 4m - 60");
    CHECK(p(Rational(2)) == -24);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(ints({1, 1}) * ints({-1, 1}) == ints({-1, 0, 1}));
    CHECK(RationalPoly::monomial(2, Rational(1, 2)).to_string() == "(1/2)m^2");
}

TEST_CASE("power sums") {
    CHECK(power_sum_poly(0) == ints({0, 1}));
    CHECK(power_sum_poly(1) == RationalPoly({0, Rational(1, 2), Rational(1, 2)}));
    CHECK(power_sum_poly(2) == RationalPoly({0, Rational(1, 6), Rational(1, 2), Rational(1, 3)}));
    for (unsigned p = 0; p <= 10; ++p) {
        const auto s = power_sum_poly(p);
        BigCount direct = 0;
        for (int m = 1; m <= 50; ++m) {
            direct += boost::multiprecision::pow(BigCount(m), p);
            REQUIRE(s(Rational(m)) == Rational(direct));
        }
    }
}

TEST_CASE("prefix sums") {
    const auto f = ints({3, 0, 2});
    const auto F = prefix_sum_poly(f);
    Rational direct = 0;
    for (int m = 1; m <= 20; ++m) {
        direct += f(Rational(m));
        CHECK(F(Rational(m)) == direct);
    }
}

TEST_CASE("published P and Q rows") {
    CHECK(derive_p(1) == ints({1}));
    CHECK(derive_p(2) == ints({0, 1}));
    CHECK(derive_p(3) == ints({-6, 3, 1}));
    CHECK(derive_p(4) == ints({-60, -4, 9, 1}));
    CHECK(derive_p(5) == ints({-600, -258, 47, 18, 1}));
    CHECK(derive_q(1) == ints({1}));
    CHECK(derive_q(2) == ints({1, 1}));
    CHECK(derive_q(3) == ints({2, 5, 1}));
    CHECK(derive_q(4) == ints({6, 29, 12, 1}));
    CHECK(derive_q(5) == ints({24, 206, 131, 22, 1}));
}

TEST_CASE("closed forms reproduce the recursions") {
    for (int n = 1; n <= 8; ++n) {
        const auto p = derive_p(n);
        const auto q = derive_q(n);
        CHECK(p.is_monic());
        CHECK(q.is_monic());
        CHECK(p.degree() == n - 1);
        CHECK(q.degree() == n - 1);
        CHECK(derive_p_by_interpolation(n) == p);
        for (int m = std::max(n, 2); m <= 16; ++m) {
            CHECK(as_integer(closed_form_value(p, m, n)) == count_two_row_bimonotone(m, n).value());
            CHECK(as_integer(closed_form_value(q, m, n)) == count_two_row_all(m, n).value());
        }
    }
}

TEST_CASE("interpolation round trip") {
    for (int n = 1; n <= 7; ++n) {
        const auto p = derive_p(n);
        std::vector<Rational> xs, ys;
        for (int k = 0; k < n; ++k) {
            xs.emplace_back(3 * k - 5);
            ys.push_back(p(xs.back()));
        }
        CHECK(interpolate(xs, ys) == p);
    }
    const std::vector<Rational> dup{1, 1};
    CHECK_THROWS(interpolate(dup, dup));
}

TEST_CASE("asymptotic check") {
    const auto r3 = asymptotic_check(3, 10);
    CHECK(r3.degree_p == 2);
    CHECK(r3.degree_q == 2);
    CHECK(r3.leading_p == 1);
    CHECK(r3.leading_q == 1);
    CHECK(r3.equal_degree_and_leading);

    const auto r5 = asymptotic_check(5, 200);
    CHECK(r5.ratio > Rational(9, 10));
    CHECK(r5.ratio <= 1);
    CHECK(r5.ratio == derive_p(5)(Rational(200)) / derive_q(5)(Rational(200)));
    CHECK(r5.ratio_decimal() == "0.980096672259");

    const auto r1 = asymptotic_check(1, 10);
    CHECK(r1.ratio == 1);
}

#pragma once

#include "gridsub/bigint.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gridsub {

/// Dense univariate polynomial over exact rationals, ascending degree,
/// trailing zeros trimmed. The zero polynomial has no coefficients.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> ascending);
    RationalPoly(std::initializer_list<Rational> ascending) : RationalPoly(std::vector<Rational>(ascending)) {}

    static RationalPoly constant(const Rational& c) { return RationalPoly({c}); }
    static RationalPoly monomial(unsigned degree, const Rational& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
    /// Coefficient of m^k, zero beyond the degree.
    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    std::span<const Rational> coefficients() const { return coeffs_; }

    Rational operator()(const Rational& x) const;

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const Rational& k);
    friend RationalPoly operator+(RationalPoly l, const RationalPoly& r) { return l += r; }
    friend RationalPoly operator-(RationalPoly l, const RationalPoly& r) { return l -= r; }
    friend RationalPoly operator*(RationalPoly p, const Rational& k) { return p *= k; }
    friend RationalPoly operator*(const Rational& k, RationalPoly p) { return p *= k; }
    friend RationalPoly operator*(const RationalPoly& l, const RationalPoly& r);
    friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

    /// e.g. "m^3 + 9m^2 - 4m - 60".
    std::string to_string(char var = 'm') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Bernoulli numbers B_0..B_{count-1} with the B_1 = +1/2 convention.
class BernoulliCache {
public:
    const Rational& operator[](std::size_t k);

private:
    std::vector<Rational> values_;
};

/// Polynomial S_p(m) with S_p(m) = 1^p + 2^p + ... + m^p for all m >= 1.
RationalPoly power_sum_poly(unsigned p);

/// Polynomial F with F(m) = f(1) + ... + f(m).
RationalPoly prefix_sum_poly(const RationalPoly& f);

/// Unique polynomial of degree < n through n points with distinct abscissae.
RationalPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

}  // namespace gridsub

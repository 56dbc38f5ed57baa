#include "gridsub/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace gridsub {

RationalPoly::RationalPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

RationalPoly RationalPoly::monomial(unsigned degree, const Rational& c) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& k) {
    for (auto& c : coeffs_) c *= k;
    trim();
    return *this;
}

RationalPoly operator*(const RationalPoly& l, const RationalPoly& r) {
    if (l.is_zero() || r.is_zero()) return {};
    std::vector<Rational> out(l.coeffs_.size() + r.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < l.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < r.coeffs_.size(); ++j) out[i + j] += l.coeffs_[i] * r.coeffs_[j];
    return RationalPoly(std::move(out));
}

std::string RationalPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (!unit || k == 0) {
            const auto s = to_fraction_string(mag);
            const bool wrap = k > 0 && s.find('/') != std::string::npos;
            os << (wrap ? "(" + s + ")" : s);
        }
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

const Rational& BernoulliCache::operator[](std::size_t k) {
    // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1 gives B_1 = -1/2; flip it afterwards.
    while (values_.size() <= k) {
        const std::size_t n = values_.size();
        if (n == 0) {
            values_.emplace_back(1);
            continue;
        }
        Rational acc = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational bj = j == 1 ? Rational(-1, 2) : values_[j];
            acc += Rational(binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(j))) * bj;
        }
        Rational bn = -acc / Rational(static_cast<long>(n + 1));
        if (n == 1) bn = -bn;
        values_.push_back(bn);
    }
    return values_[k];
}

RationalPoly power_sum_poly(unsigned p) {
    // Faulhaber: S_p(m) = 1/(p+1) * sum_{j=0}^{p} C(p+1, j) B_j m^{p+1-j}, with B_1 = +1/2.
    static std::mutex mutex;
    static BernoulliCache bernoulli;
    std::lock_guard lock(mutex);
    std::vector<Rational> c(p + 2, Rational(0));
    for (unsigned j = 0; j <= p; ++j) c[p + 1 - j] = Rational(binomial(p + 1, j)) * bernoulli[j] / Rational(p + 1);
    return RationalPoly(std::move(c));
}

RationalPoly prefix_sum_poly(const RationalPoly& f) {
    RationalPoly out;
    const auto coeffs = f.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) out += coeffs[k] * power_sum_poly(static_cast<unsigned>(k));
    return out;
}

RationalPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: abscissae and values differ in length");
    const std::size_t n = xs.size();
    // Newton divided differences, then expand the Newton form.
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const Rational span = xs[i] - xs[i - level];
            if (span == 0) throw std::invalid_argument("interpolate: repeated abscissa");
            dd[i] = (dd[i] - dd[i - 1]) / span;
        }
    }
    RationalPoly result;
    for (std::size_t i = n; i-- > 0;) {
        // result = result * (x - xs[i]) + dd[i]
        result = result * RationalPoly({-xs[i], Rational(1)}) + RationalPoly::constant(dd[i]);
    }
    return result;
}

}  // namespace gridsub

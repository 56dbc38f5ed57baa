#include "gridsub/bigint.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace gridsub {

std::string to_fraction_string(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& r, int digits) {
    BigCount num = boost::multiprecision::numerator(r);
    const BigCount den = boost::multiprecision::denominator(r);
    if (num == 0) return "0";
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    // Scale so the integer quotient carries exactly `digits` significant digits.
    int exponent = 0;  // value = q * 10^-exponent
    BigCount scaled_num = num;
    BigCount scaled_den = den;
    const BigCount lower = pow(BigCount(10), static_cast<unsigned>(digits - 1));
    const BigCount upper = lower * 10;
    while (scaled_num / scaled_den >= upper) {
        scaled_den *= 10;
        --exponent;
    }
    while (scaled_num / scaled_den < lower) {
        scaled_num *= 10;
        ++exponent;
    }
    // Round half up.
    BigCount q = (2 * scaled_num + scaled_den) / (2 * scaled_den);
    if (q >= upper) {
        q /= 10;
        --exponent;
    }
    std::string s = q.str();
    if (exponent <= 0) return sign + s + std::string(static_cast<std::size_t>(-exponent), '0');
    if (static_cast<std::size_t>(exponent) < s.size()) {
        s.insert(s.size() - static_cast<std::size_t>(exponent), ".");
    } else {
        s = "0." + std::string(static_cast<std::size_t>(exponent) - s.size(), '0') + s;
    }
    // Trim trailing zeros after the point.
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return sign + s;
}

}  // namespace gridsub

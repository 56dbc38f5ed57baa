#pragma once

// Recursions for the bimonotone (B) and total (A) subdivision counts of the
// two-row configuration with m top points and n bottom points.

#include "gridsub/bigint.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace gridsub {

/// Exact half-integer, stored as twice its value.
class HalfInt {
public:
    HalfInt() = default;
    static HalfInt from_twice(BigCount twice) {
        HalfInt h;
        h.twice_ = std::move(twice);
        return h;
    }
    static HalfInt from_integer(const BigCount& v) { return from_twice(2 * v); }

    const BigCount& twice() const { return twice_; }
    bool is_integer() const { return (twice_ & 1) == 0; }
    /// Integer value; throws ValidationError if the value is a genuine half.
    BigCount value() const;
    Rational as_rational() const { return Rational(twice_, 2); }

    friend HalfInt operator+(const HalfInt& l, const HalfInt& r) { return from_twice(l.twice_ + r.twice_); }
    friend HalfInt operator-(const HalfInt& l, const HalfInt& r) { return from_twice(l.twice_ - r.twice_); }
    friend HalfInt operator*(long k, const HalfInt& h) { return from_twice(k * h.twice_); }
    friend bool operator==(const HalfInt&, const HalfInt&) = default;

private:
    BigCount twice_ = 0;
};

enum class TwoRowMode { bimonotone, all };

/// Memoized B/A table. Thread-safe; concurrent fills compute identical values.
class RecursionTable {
public:
    explicit RecursionTable(TwoRowMode mode) : mode_(mode) {}

    HalfInt at(int m, int n);
    TwoRowMode mode() const { return mode_; }

private:
    HalfInt compute(int m, int n);

    TwoRowMode mode_;
    std::map<std::pair<int, int>, HalfInt> memo_;
    std::recursive_mutex mutex_;
};

/// B(m,n) with B(1,1) = 1/2 and B(m,1) = 2^(m-2).
HalfInt count_two_row_bimonotone(int m, int n);

/// A(m,n) with A(1,1) = 1/2 and A(m,1) = A(1,m) = 2^(m-2).
HalfInt count_two_row_all(int m, int n);

inline HalfInt count_two_row(int m, int n, bool bimonotone) {
    return bimonotone ? count_two_row_bimonotone(m, n) : count_two_row_all(m, n);
}

}  // namespace gridsub

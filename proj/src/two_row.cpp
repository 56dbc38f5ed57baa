#include "gridsub/two_row.hpp"

#include "gridsub/errors.hpp"

#include <stdexcept>
#include <string>

namespace gridsub {

BigCount HalfInt::value() const {
    if (!is_integer()) throw ValidationError("half-integer " + twice_.str() + "/2 where an integer count was required");
    return twice_ / 2;
}

HalfInt RecursionTable::at(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("two-row counts need m >= 1 and n >= 1");
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find({m, n}); it != memo_.end()) return it->second;
    // Fill bottom-up so the recursion never nests deeply.
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            if (!memo_.count({i, j})) memo_[{i, j}] = compute(i, j);
    return memo_.at({m, n});
}

HalfInt RecursionTable::compute(int m, int n) {
    const auto get = [this](int i, int j) { return memo_.at({i, j}); };
    // 2^(k-2) as a half-integer: 1/2 at k = 1.
    const auto base = [](int k) { return HalfInt::from_twice(pow2(static_cast<unsigned>(k - 1))); };

    if (mode_ == TwoRowMode::bimonotone) {
        if (m < n) return {};
        if (n == 1) return base(m);
        if (m == n) return 2 * get(m, n - 1);
        return 2 * get(m, n - 1) + 2 * get(m - 1, n) - 2 * get(m - 1, n - 1);
    }
    if (n == 1) return base(m);
    if (m == 1) return base(n);
    return 2 * get(m, n - 1) + 2 * get(m - 1, n) - 2 * get(m - 1, n - 1);
}

namespace {

RecursionTable& table(TwoRowMode mode) {
    static RecursionTable bimonotone(TwoRowMode::bimonotone);
    static RecursionTable all(TwoRowMode::all);
    return mode == TwoRowMode::bimonotone ? bimonotone : all;
}

}  // namespace

HalfInt count_two_row_bimonotone(int m, int n) { return table(TwoRowMode::bimonotone).at(m, n); }

HalfInt count_two_row_all(int m, int n) { return table(TwoRowMode::all).at(m, n); }

}  // namespace gridsub

#include "gridsub/sequences.hpp"

#include "gridsub/errors.hpp"
#include "gridsub/two_row.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridsub {

BigCount SequenceCache::at(std::size_t n) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= n) values_.push_back(next_(values_));
    return values_[n];
}

namespace {

BigCount next_schroeder(const std::vector<BigCount>& s) {
    const std::size_t n = s.size();
    if (n == 0) return 1;
    BigCount v = s[n - 1];
    for (std::size_t k = 0; k < n; ++k) v += s[k] * s[n - 1 - k];
    return v;
}

}  // namespace

BigCount schroeder(unsigned n) {
    static SequenceCache cache(&next_schroeder);
    return cache.at(n);
}

BigCount schroeder_path_oracle(unsigned n) {
    // paths[x][y], x = east steps, y = north steps, only y <= x reachable.
    std::vector<std::vector<BigCount>> paths(n + 1, std::vector<BigCount>(n + 1, 0));
    paths[0][0] = 1;
    for (unsigned x = 0; x <= n; ++x) {
        for (unsigned y = 0; y <= x; ++y) {
            if (x == 0 && y == 0) continue;
            BigCount v = 0;
            if (x > 0 && y <= x - 1) v += paths[x - 1][y];
            if (y > 0) v += paths[x][y - 1];
            if (x > 0 && y > 0) v += paths[x - 1][y - 1];
            paths[x][y] = v;
        }
    }
    return paths[n][n];
}

BigCount delannoy_central(unsigned n) {
    std::vector<BigCount> row(n + 1, 1);  // D(0, j) = 1
    for (unsigned i = 1; i <= n; ++i) {
        BigCount diag = row[0];  // D(i-1, j-1)
        for (unsigned j = 1; j <= n; ++j) {
            const BigCount up = row[j];  // D(i-1, j)
            row[j] = up + row[j - 1] + diag;
            diag = up;
        }
    }
    return row[n];
}

bool IdentityReport::all_hold() const {
    return std::all_of(rows.begin(), rows.end(), [](const IdentityRow& r) { return r.holds; });
}

IdentityReport verify_schroeder_identity(int n_max) {
    if (n_max < 2) throw std::invalid_argument("verify_schroeder_identity needs n_max >= 2");
    IdentityReport report{"schroeder", false, {}};
    for (int n = 2; n <= n_max; ++n) {
        IdentityRow row;
        row.n = n;
        row.lhs = count_two_row_bimonotone(n, n).value();
        row.rhs = pow2(static_cast<unsigned>(n - 2)) * schroeder(static_cast<unsigned>(n - 1));
        row.holds = row.lhs == row.rhs;
        report.rows.push_back(row);
        if (!row.holds) {
            throw ValidationError("Schröder identity fails at n = " + std::to_string(n) + ": " + row.lhs.str() +
                                  " != " + row.rhs.str());
        }
    }
    return report;
}

IdentityReport check_delannoy_conjecture(int n_max) {
    if (n_max < 2) throw std::invalid_argument("check_delannoy_conjecture needs n_max >= 2");
    IdentityReport report{"delannoy-conjecture", true, {}};
    for (int n = 2; n <= n_max; ++n) {
        IdentityRow row;
        row.n = n;
        row.lhs = count_two_row_all(n, n).value();
        row.rhs = pow2(static_cast<unsigned>(n - 2)) * delannoy_central(static_cast<unsigned>(n - 1));
        row.holds = row.lhs == row.rhs;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace gridsub

#pragma once

#include "gridsub/bigint.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace gridsub {

/// Grow-only prefix cache of an integer sequence.
class SequenceCache {
public:
    using Next = BigCount (*)(const std::vector<BigCount>& prefix);

    explicit SequenceCache(Next next) : next_(next) {}
    BigCount at(std::size_t n);

private:
    Next next_;
    std::vector<BigCount> values_;
    std::mutex mutex_;
};

/// Large Schröder number from S_n = S_{n-1} + sum_{k<n} S_k S_{n-1-k}, S_0 = 1.
BigCount schroeder(unsigned n);

/// E/N/NE lattice paths from (0,0) to (n,n) staying in y <= x, counted by DP.
BigCount schroeder_path_oracle(unsigned n);

/// D(n,n) for D(i,j) = D(i-1,j) + D(i,j-1) + D(i-1,j-1), D(0,.) = D(.,0) = 1.
BigCount delannoy_central(unsigned n);

struct IdentityRow {
    int n = 0;
    BigCount lhs;  ///< count from the two-row recursion
    BigCount rhs;  ///< 2^(n-2) times the sequence term
    bool holds = false;
};

struct IdentityReport {
    std::string name;
    bool conjecture = false;
    std::vector<IdentityRow> rows;
    bool all_hold() const;
};

/// B(n,n) = 2^(n-2) S_{n-1} for 2 <= n <= n_max. Throws ValidationError
/// naming the first failing n.
IdentityReport verify_schroeder_identity(int n_max);

/// A(n,n) against 2^(n-2) D_{n-1}. Mismatches are recorded, never thrown.
IdentityReport check_delannoy_conjecture(int n_max);

}  // namespace gridsub

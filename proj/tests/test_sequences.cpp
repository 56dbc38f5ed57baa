#include "gridsub/sequences.hpp"
#include "gridsub/two_row.hpp"

#include <doctest.h>

using namespace gridsub;

namespace {

// Counts E/N/NE paths to (n,n) by explicit recursion over steps.
BigCount delannoy_by_paths(int x, int y) {
    if (x == 0 || y == 0) return 1;
    return delannoy_by_paths(x - 1, y) + delannoy_by_paths(x, y - 1) + delannoy_by_paths(x - 1, y - 1);
}

}  // namespace

TEST_CASE("sequence examples") {
    CHECK(schroeder(0) == 1);
    CHECK(schroeder(2) == 6);
    CHECK(schroeder(5) == 394);
    CHECK(schroeder_path_oracle(0) == 1);
    CHECK(schroeder_path_oracle(1) == 2);
    CHECK(schroeder_path_oracle(3) == 22);
    CHECK(delannoy_central(0) == 1);
    CHECK(delannoy_central(2) == 13);
    CHECK(delannoy_central(4) == 321);
    CHECK(delannoy_central(5) == 1683);
}

TEST_CASE("recurrence against path counts") {
    for (unsigned n = 0; n <= 15; ++n) {
        CHECK(schroeder(n) == schroeder_path_oracle(n));
        CHECK(delannoy_central(n) >= schroeder(n));
    }
    for (int n = 0; n <= 7; ++n) CHECK(delannoy_central(static_cast<unsigned>(n)) == delannoy_by_paths(n, n));
}

TEST_CASE("Schroeder identity") {
    const auto r6 = verify_schroeder_identity(6);
    CHECK(r6.all_hold());
    REQUIRE(r6.rows.size() == 5);
    const std::vector<int> expected{2, 12, 88, 720, 6304};
    for (std::size_t i = 0; i < 5; ++i) CHECK(r6.rows[i].lhs == expected[i]);
    CHECK(verify_schroeder_identity(2).rows.at(0).rhs == 2);
    CHECK(verify_schroeder_identity(20).all_hold());
}

TEST_CASE("Delannoy conjecture rows") {
    const auto r = check_delannoy_conjecture(20);
    CHECK(r.conjecture);
    CHECK(r.rows.front().lhs == 3);
    CHECK(r.rows.at(1).lhs == 26);
    CHECK(r.rows.at(4).rhs == 16 * 1683);
    CHECK(r.all_hold());
}

#include "gridsub/enumeration.hpp"
#include "gridsub/errors.hpp"
#include "gridsub/flips.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gridsub;

namespace {

Edge E(int ax, int ay, int bx, int by) { return Edge({ax, ay}, {bx, by}); }

// Flippable edges found by scanning every interior edge for two triangles
// forming a strictly convex quadrilateral.
std::size_t brute_force_flip_count(const Triangulation& t) {
    std::size_t n = 0;
    for (const auto& e : t.internal_edges()) {
        std::vector<LatticePoint> apexes;
        for (const auto& tri : t.triangles()) {
            if (std::count(tri.begin(), tri.end(), e.a()) && std::count(tri.begin(), tri.end(), e.b())) {
                for (const auto& v : tri)
                    if (v != e.a() && v != e.b()) apexes.push_back(v);
            }
        }
        REQUIRE(apexes.size() == 2);
        const auto c = apexes[0], d = apexes[1];
        const bool convex = orient(c, d, e.a()) * orient(c, d, e.b()) < 0 &&
                            orient(e.a(), e.b(), c) * orient(e.a(), e.b(), d) < 0;
        if (convex) ++n;
    }
    return n;
}

std::vector<std::int64_t> length_profile(const Triangulation& t) {
    std::vector<std::int64_t> v;
    for (const auto& e : t.edges()) v.push_back(e.squared_length());
    std::sort(v.rbegin(), v.rend());
    return v;
}

}  // namespace

TEST_CASE("canonical triangulations") {
    const auto t22 = canonical_triangulation(2, 2);
    CHECK(t22.edges().size() == 5);
    CHECK(t22.triangles().size() == 2);
    CHECK(t22.contains(E(0, 0, 1, 1)));
    CHECK(canonical_triangulation(3, 3).edges().size() == 16);
    CHECK(canonical_triangulation(3, 3).triangles().size() == 8);
    CHECK(canonical_triangulation(3, 2).edges().size() == 9);
    CHECK(canonical_triangulation(3, 2).triangles().size() == 4);
    CHECK(expected_edge_count(4, 3) == 3 * 12 - 8 - 6 + 1);
    CHECK(expected_triangle_count(4, 3) == 12);
    CHECK_NOTHROW(canonical_triangulation(4, 4).check_invariants());
}

TEST_CASE("flip examples") {
    const auto t22 = canonical_triangulation(2, 2);
    CHECK(available_flips(t22, true).empty());
    const auto flips = available_flips(t22, false);
    REQUIRE(flips.size() == 1);
    const auto flipped = apply_flip(t22, flips[0]);
    CHECK(flipped.contains(E(0, 1, 1, 0)));
    CHECK_FALSE(flipped.contains(E(0, 0, 1, 1)));
    CHECK(apply_flip(flipped, flips[0].inverse()) == t22);
    CHECK(flips[0].inverse().inverse() == flips[0]);
    CHECK(available_flips(flipped, false).at(0) == flips[0].inverse());
    CHECK_THROWS_AS(apply_flip(t22, flips[0].inverse()), InvalidFlip);

    const auto t33 = canonical_triangulation(3, 3);
    const auto f33 = available_flips(t33, false);
    // Four unit diagonals plus four interior unit edges whose quads are parallelograms.
    CHECK(f33.size() == 8);
    CHECK(available_flips(t33, true).size() == 4);
    CHECK(f33.size() == brute_force_flip_count(t33));
    for (const auto& f : f33) CHECK(apply_flip(t33, f).triangles().size() == 8);
}

TEST_CASE("flip involution and unimodularity over the 3x3 flip graph") {
    for (bool bim : {true, false}) {
        for (const auto& t : bfs_visit(3, 3, bim)) {
            REQUIRE_NOTHROW(t.check_invariants());
            const auto fl = available_flips(t, bim);
            if (!bim) REQUIRE(fl.size() == brute_force_flip_count(t));
            for (const auto& f : fl) {
                const auto u = apply_flip(t, f);
                REQUIRE(apply_flip(u, f.inverse()) == t);
                if (bim) REQUIRE(is_bimonotone(f.inserted));
            }
        }
    }
}

TEST_CASE("flip graph counts match the enumeration oracle") {
    CHECK(bfs_count(2, 2, true) == 1);
    CHECK(bfs_count(2, 2, false) == 2);
    for (auto [c, r] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
        const auto cfg = PointConfiguration::grid(c, r);
        std::vector<std::vector<Edge>> from_enum;
        for (const auto& s : list_full_triangulations(cfg, true)) from_enum.push_back(s.edges);
        std::vector<std::vector<Edge>> from_bfs;
        for (const auto& t : bfs_visit(c, r, true)) from_bfs.push_back(t.internal_edges());
        std::sort(from_enum.begin(), from_enum.end());
        std::sort(from_bfs.begin(), from_bfs.end());
        CHECK(from_enum == from_bfs);
        CHECK(bfs_count(c, r, false) == count_full_triangulations(cfg, false));
    }
}

TEST_CASE("parallel BFS matches serial") {
    BfsOptions four;
    four.threads = 4;
    CHECK(bfs_count(4, 3, true) == bfs_count(4, 3, true, four));
    CHECK(bfs_count(4, 3, false) == bfs_count(4, 3, false, four));
    CHECK(bfs_visit(3, 3, false) == bfs_visit(3, 3, false, four));
}

TEST_CASE("BFS budget") {
    BfsOptions tiny;
    tiny.node_budget = 3;
    CHECK_THROWS_AS(bfs_count(3, 3, false, tiny), BudgetExceeded);
}

TEST_CASE("longest-diagonal descent") {
    CHECK(canonicalize_by_longest_diagonal(canonical_triangulation(3, 3)).empty());
    for (auto [c, r] : {std::pair{3, 2}, {3, 3}, {4, 3}}) {
        for (const auto& t : bfs_visit(c, r, true)) {
            auto cur = t;
            for (const auto& f : canonicalize_by_longest_diagonal(t)) {
                REQUIRE(f.inserted.squared_length() < f.removed.squared_length());
                const auto next = apply_flip(cur, f);
                REQUIRE(length_profile(next) < length_profile(cur));
                cur = next;
            }
            REQUIRE(cur == canonical_triangulation(c, r));
        }
    }
}

#include "gridsub/enumeration.hpp"
#include "gridsub/errors.hpp"
#include "gridsub/faces.hpp"
#include "gridsub/two_row.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace gridsub;

namespace {

Edge E(int ax, int ay, int bx, int by) { return Edge({ax, ay}, {bx, by}); }

// Face-based validity: every face convex, every internal edge borders two
// faces, and the faces tile the hull.
bool faces_form_subdivision(const PointConfiguration& cfg, const std::vector<Edge>& internal) {
    const auto faces = bounded_faces(cfg, internal);
    std::int64_t area = 0;
    std::map<std::pair<LatticePoint, LatticePoint>, int> sides;
    for (const auto& f : faces) {
        if (!is_convex_polygon(f, true)) return false;
        area += twice_signed_area(f);
        for (std::size_t i = 0; i < f.size(); ++i) ++sides[{f[i], f[(i + 1) % f.size()]}];
    }
    std::vector<LatticePoint> hull(cfg.hull_corners().begin(), cfg.hull_corners().end());
    if (area != twice_signed_area(hull)) return false;
    for (const auto& e : internal) {
        if (sides[{e.a(), e.b()}] != 1 || sides[{e.b(), e.a()}] != 1) return false;
    }
    return true;
}

// Counts edge subsets by brute force: pairwise compatibility, then faces.
std::uint64_t face_oracle_count(const PointConfiguration& cfg, bool bim) {
    const auto cand = candidate_edges(cfg, bim, CandidateRule::primitive_only);
    std::vector<Edge> chosen;
    std::uint64_t total = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cand.size()) {
            if (faces_form_subdivision(cfg, chosen)) ++total;
            return;
        }
        rec(i + 1);
        for (const auto& c : chosen)
            if (interact(c, cand[i]) == Interaction::conflict) return;
        chosen.push_back(cand[i]);
        rec(i + 1);
        chosen.pop_back();
    };
    rec(0);
    return total;
}

PointConfiguration reflect_config(const PointConfiguration& cfg) {
    return PointConfiguration::grid(cfg.rows(), cfg.cols());
}

}  // namespace

TEST_CASE("published grid counts") {
    const auto count = [](int c, int r, bool bim) { return count_subdivisions(PointConfiguration::grid(c, r), bim); };
    CHECK(count(2, 2, true) == 2);
    CHECK(count(2, 2, false) == 3);
    CHECK(count(3, 3, true) == 528);
    CHECK(count(3, 3, false) == 2224);
    CHECK(count(6, 2, true) == 6304);
    CHECK(count(6, 2, false) == 26928);
}

TEST_CASE("listing small configurations") {
    const auto g = PointConfiguration::grid(2, 2);
    const auto all = list_subdivisions(g, false);
    REQUIRE(all.size() == 3);
    CHECK(all[0].edges.empty());
    CHECK(all[1].edges == std::vector<Edge>{E(0, 0, 1, 1)});
    CHECK(all[2].edges == std::vector<Edge>{E(0, 1, 1, 0)});
    const auto bim = list_subdivisions(g, true);
    REQUIRE(bim.size() == 2);
    CHECK(bim[1].edges == std::vector<Edge>{E(0, 0, 1, 1)});

    const auto tri = PointConfiguration::two_row(2, 1);
    CHECK(list_subdivisions(tri, false).size() == 1);
    CHECK(count_subdivisions(tri, true) == 1);

    CHECK(list_subdivisions(PointConfiguration::grid(3, 3), true, 5).size() == 5);
}

TEST_CASE("face oracle agrees with the search") {
    for (auto [c, r] : {std::pair{2, 2}, {3, 2}, {2, 3}, {4, 2}, {3, 3}}) {
        const auto cfg = PointConfiguration::grid(c, r);
        for (bool bim : {true, false}) {
            CAPTURE(cfg.descriptor());
            CAPTURE(bim);
            CHECK(count_subdivisions(cfg, bim) == face_oracle_count(cfg, bim));
        }
    }
    for (auto [m, n] : {std::pair{4, 2}, {3, 3}, {5, 3}, {4, 4}}) {
        const auto cfg = PointConfiguration::two_row(m, n);
        for (bool bim : {true, false}) CHECK(count_subdivisions(cfg, bim) == face_oracle_count(cfg, bim));
    }
}

TEST_CASE("every listed subdivision of the 3x3 grid re-validates and has convex faces") {
    const auto cfg = PointConfiguration::grid(3, 3);
    for (bool bim : {true, false}) {
        const auto list = list_subdivisions(cfg, bim);
        CHECK(BigCount(list.size()) == count_subdivisions(cfg, bim));
        CHECK(std::is_sorted(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.edges < b.edges; }));
        for (const auto& s : list) {
            REQUIRE(is_valid_subdivision(cfg, s.edges, bim));
            REQUIRE(faces_form_subdivision(cfg, s.edges));
        }
    }
}

TEST_CASE("re-validation rejects bad edge sets") {
    const auto cfg = PointConfiguration::grid(3, 3);
    CHECK_FALSE(is_valid_subdivision(cfg, std::vector<Edge>{E(0, 0, 1, 1)}, false));
    CHECK_FALSE(is_valid_subdivision(cfg, std::vector<Edge>{E(0, 0, 2, 1), E(0, 1, 2, 0)}, false));
    CHECK_FALSE(is_valid_subdivision(cfg, std::vector<Edge>{E(0, 2, 2, 0)}, true));
    CHECK(is_valid_subdivision(cfg, std::vector<Edge>{E(1, 0, 1, 2)}, false) == false);
    CHECK(is_valid_subdivision(cfg, std::vector<Edge>{E(1, 0, 1, 1), E(1, 1, 1, 2)}, true));
}

TEST_CASE("transpose invariance and mode monotonicity") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            const auto cfg = PointConfiguration::grid(a, b);
            const auto bim = count_subdivisions(cfg, true);
            const auto all = count_subdivisions(cfg, false);
            CHECK(bim == count_subdivisions(reflect_config(cfg), true));
            CHECK(all == count_subdivisions(reflect_config(cfg), false));
            CHECK(bim <= all);
        }
}

TEST_CASE("two-row enumeration matches the recursions") {
    for (int n = 2; n <= 6; ++n)
        for (int m = n; m <= 6; ++m) {
            const auto cfg = PointConfiguration::two_row(m, n);
            CAPTURE(cfg.descriptor());
            CHECK(count_subdivisions(cfg, true) == count_two_row_bimonotone(m, n).value());
            CHECK(count_subdivisions(cfg, false) == count_two_row_all(m, n).value());
        }
    CHECK(count_subdivisions(PointConfiguration::two_row(2, 4), true) == 0);
    CHECK(hull_blocks_bimonotone(PointConfiguration::two_row(2, 4)));
    CHECK_FALSE(hull_blocks_bimonotone(PointConfiguration::two_row(4, 2)));
}

TEST_CASE("conflict table is symmetric and irreflexive") {
    const auto cand = candidate_edges(PointConfiguration::grid(4, 3), false);
    for (auto rule : {EdgeInteractionRule::strict, EdgeInteractionRule::paper_literal}) {
        const ConflictTable t(cand, rule);
        for (std::size_t i = 0; i < t.size(); ++i) {
            CHECK_FALSE(t.conflicts(i).test(i));
            for (std::size_t j = 0; j < t.size(); ++j) REQUIRE(t.conflicts(i).test(j) == t.conflicts(j).test(i));
        }
    }
}

TEST_CASE("convention variants") {
    const auto cfg = PointConfiguration::grid(3, 3);
    EnumerationOptions o;
    o.conventions.candidates = CandidateRule::all_pairs;
    CHECK(count_subdivisions(cfg, true, o) == 596);
    CHECK(count_subdivisions(cfg, false, o) == 2424);
    EnumerationOptions lit;
    lit.conventions.interaction = EdgeInteractionRule::paper_literal;
    CHECK(count_subdivisions(cfg, true, lit) == 528);
    CHECK(count_subdivisions(cfg, false, lit) == 2224);
}

TEST_CASE("budget exhaustion throws instead of returning a partial count") {
    EnumerationOptions o;
    o.node_budget = 50;
    CHECK_THROWS_AS(count_subdivisions(PointConfiguration::grid(3, 3), false, o), BudgetExceeded);
    o.threads = 4;
    CHECK_THROWS_AS(count_subdivisions(PointConfiguration::grid(3, 3), false, o), BudgetExceeded);
}

TEST_CASE("thread count does not change results") {
    EnumerationOptions one, four;
    four.threads = 4;
    for (auto [c, r] : {std::pair{3, 3}, {4, 2}, {3, 4}}) {
        const auto cfg = PointConfiguration::grid(c, r);
        CHECK(count_subdivisions(cfg, true, one) == count_subdivisions(cfg, true, four));
    }
    const auto cfg = PointConfiguration::grid(3, 3);
    const auto a = list_subdivisions(cfg, false, 100000, one);
    const auto b = list_subdivisions(cfg, false, 100000, four);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(a[i].edges == b[i].edges);
}

TEST_CASE("full-point triangulations") {
    CHECK(count_full_triangulations(PointConfiguration::grid(2, 2), false) == 2);
    CHECK(count_full_triangulations(PointConfiguration::grid(2, 2), true) == 1);
    CHECK(count_full_triangulations(PointConfiguration::grid(3, 2), true) == 2);
    CHECK(count_full_triangulations(PointConfiguration::grid(3, 3), false) == 64);
    for (const auto& s : list_full_triangulations(PointConfiguration::grid(3, 3), false)) {
        for (const auto& f : bounded_faces(s.cfg, s.edges)) {
            REQUIRE(f.size() == 3);
            REQUIRE(twice_signed_area(f) == 1);
        }
    }
}

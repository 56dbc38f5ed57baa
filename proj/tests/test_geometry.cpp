#include "gridsub/faces.hpp"
#include "gridsub/geometry.hpp"

#include <doctest.h>

#include <numeric>

using namespace gridsub;

namespace {

Edge E(int ax, int ay, int bx, int by) { return Edge({ax, ay}, {bx, by}); }

// Independent hull test for grids: a pair lies in the boundary iff both points
// share an outer row or an outer column.
bool on_grid_boundary(LatticePoint p, LatticePoint q, int cols, int rows) {
    if (p.x == q.x && (p.x == 0 || p.x == cols - 1)) return true;
    if (p.y == q.y && (p.y == 0 || p.y == rows - 1)) return true;
    return false;
}

}  // namespace

TEST_CASE("edges are normalized") {
    const Edge e({2, 1}, {0, 0});
    CHECK(e.a() == LatticePoint{0, 0});
    CHECK(e.b() == LatticePoint{2, 1});
    CHECK(e == E(0, 0, 2, 1));
    CHECK(e.squared_length() == 5);
    CHECK(E(0, 0, 2, 2).contains_in_interior({1, 1}));
    CHECK_FALSE(E(0, 0, 2, 2).contains_in_interior({0, 0}));
    CHECK_FALSE(E(0, 0, 2, 2).is_primitive());
    CHECK(E(0, 0, 2, 1).is_primitive());
    CHECK_THROWS(Edge({1, 1}, {1, 1}));
}

TEST_CASE("slope classes") {
    CHECK(slope_class(E(0, 0, 0, 1)) == SlopeClass::vertical);
    CHECK(slope_class(E(0, 0, 1, 1)) == SlopeClass::nonnegative);
    CHECK(slope_class(E(0, 1, 1, 0)) == SlopeClass::negative);
    CHECK(slope_class(E(0, 0, 2, 1)) == SlopeClass::nonnegative);
    CHECK(slope_class(E(0, 3, 5, 3)) == SlopeClass::nonnegative);
}

TEST_CASE("interaction examples") {
    CHECK(interact(E(0, 0, 2, 2), E(0, 2, 2, 0)) == Interaction::conflict);
    CHECK(interact(E(0, 0, 1, 1), E(1, 1, 2, 2)) == Interaction::shared_endpoint);
    CHECK(interact(E(0, 0, 2, 2), E(1, 1, 1, 2)) == Interaction::conflict);
    CHECK(interact(E(0, 0, 1, 0), E(0, 1, 1, 1)) == Interaction::disjoint);
    CHECK(interact(E(0, 0, 2, 0), E(1, 0, 3, 0)) == Interaction::conflict);
    CHECK(interact(E(0, 0, 1, 0), E(0, 0, 2, 0)) == Interaction::conflict);
}

TEST_CASE("contact classification and rules") {
    CHECK(contact(E(0, 0, 2, 2), E(0, 2, 2, 0)) == Contact::lattice_point);
    CHECK(contact(E(0, 0, 1, 1), E(0, 1, 1, 0)) == Contact::off_lattice);
    CHECK(contact(E(0, 0, 2, 2), E(1, 1, 1, 2)) == Contact::lattice_point);
    CHECK(contact(E(0, 0, 2, 0), E(1, 0, 3, 0)) == Contact::overlap);
    CHECK(contact(E(0, 0, 1, 0), E(1, 0, 2, 0)) == Contact::common_endpoint);

    CHECK(compatible(E(0, 0, 2, 2), E(0, 2, 2, 0), EdgeInteractionRule::paper_literal));
    CHECK_FALSE(compatible(E(0, 0, 2, 2), E(0, 2, 2, 0), EdgeInteractionRule::strict));
    CHECK_FALSE(compatible(E(0, 0, 1, 1), E(0, 1, 1, 0), EdgeInteractionRule::paper_literal));

    CHECK(parse_interaction_rule("paper-literal") == EdgeInteractionRule::paper_literal);
    CHECK(parse_candidate_rule("all-pairs") == CandidateRule::all_pairs);
    CHECK_FALSE(parse_candidate_rule("some").has_value());
    CHECK(to_string(CandidateRule::primitive_only) == "primitive-only");
}

TEST_CASE("interact is symmetric on every candidate pair up to 4x4") {
    for (int c = 1; c <= 4; ++c) {
        for (int r = 1; r <= 4; ++r) {
            const auto cfg = PointConfiguration::grid(c, r);
            const auto cand = candidate_edges(cfg, false, CandidateRule::all_pairs);
            for (const auto& e1 : cand)
                for (const auto& e2 : cand) {
                    REQUIRE(interact(e1, e2) == interact(e2, e1));
                    REQUIRE(contact(e1, e2) == contact(e2, e1));
                }
        }
    }
}

TEST_CASE("candidate edges") {
    const auto g22 = PointConfiguration::grid(2, 2);
    CHECK(candidate_edges(g22, false) == std::vector<Edge>{E(0, 0, 1, 1), E(0, 1, 1, 0)});
    CHECK(candidate_edges(g22, true) == std::vector<Edge>{E(0, 0, 1, 1)});
    CHECK(candidate_edges(PointConfiguration::grid(3, 3), false).size() == 24);

    SUBCASE("brute-force pair scan") {
        for (int c = 1; c <= 4; ++c) {
            for (int r = 1; r <= 4; ++r) {
                const auto cfg = PointConfiguration::grid(c, r);
                const auto pts = cfg.points();
                std::size_t all = 0, bim = 0, prim = 0;
                for (std::size_t i = 0; i < pts.size(); ++i)
                    for (std::size_t j = i + 1; j < pts.size(); ++j) {
                        if (on_grid_boundary(pts[i], pts[j], c, r)) continue;
                        ++all;
                        const auto d = pts[j] - pts[i];
                        if (d.x * d.y >= 0) ++bim;
                        if (std::gcd(d.x, d.y) == 1) ++prim;
                    }
                CAPTURE(c);
                CAPTURE(r);
                CHECK(candidate_edges(cfg, false).size() == all);
                CHECK(candidate_edges(cfg, true).size() == bim);
                CHECK(candidate_edges(cfg, false, CandidateRule::primitive_only).size() == prim);
            }
        }
    }
}

TEST_CASE("configurations") {
    const auto g = PointConfiguration::grid(3, 2);
    CHECK(g.size() == 6);
    CHECK(g.descriptor() == "grid(3,2)");
    CHECK(g.hull_corners().size() == 4);
    CHECK(g.points()[1] == LatticePoint{1, 0});
    CHECK(g.on_hull_boundary({1, 0}));
    CHECK_FALSE(g.is_hull_corner({1, 0}));
    CHECK(g.hull_unit_edges().size() == 6);

    const auto t = PointConfiguration::two_row(4, 2);
    CHECK(t.descriptor() == "two-row(4,2)");
    CHECK(t.size() == 6);
    CHECK(t.index_of({3, 1}).has_value());
    CHECK_FALSE(t.index_of({3, 0}).has_value());

    const auto line = PointConfiguration::grid(3, 1);
    CHECK(line.hull_corners().size() == 2);
    CHECK(candidate_edges(line, false).empty());
    CHECK_THROWS(PointConfiguration::grid(0, 3));
}

TEST_CASE("local convexity examples") {
    const auto g = PointConfiguration::grid(3, 3);
    const std::vector<Edge> through{E(0, 0, 1, 1), E(1, 1, 2, 2)};
    CHECK(local_convexity_ok(g, through, {1, 1}));
    const std::vector<Edge> dangling{E(0, 0, 1, 1)};
    CHECK_FALSE(local_convexity_ok(g, dangling, {1, 1}));
    CHECK(local_convexity_ok(g, std::vector<Edge>{}, {1, 1}) == true);

    const auto g32 = PointConfiguration::grid(3, 2);
    const std::vector<Edge> spoke{E(1, 0, 1, 1)};
    CHECK(local_convexity_ok(g32, spoke, {1, 0}));
    CHECK(local_convexity_ok(g32, std::vector<Edge>{}, {1, 0}));
}

TEST_CASE("faces and polygon helpers") {
    const std::vector<LatticePoint> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(twice_signed_area(square) == 2);
    CHECK(is_convex_polygon(square));
    const std::vector<LatticePoint> dart{{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}};
    CHECK_FALSE(is_convex_polygon(dart));
    const std::vector<LatticePoint> straight{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {0, 1}};
    CHECK(is_convex_polygon(straight, true));
    CHECK_FALSE(is_convex_polygon(straight, false));

    const auto g = PointConfiguration::grid(2, 2);
    CHECK(bounded_faces(g, std::vector<Edge>{}).size() == 1);
    CHECK(bounded_faces(g, std::vector<Edge>{E(0, 0, 1, 1)}).size() == 2);
}

#include "gridsub/faces.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gridsub {

namespace {

bool upper_half(LatticePoint d) { return d.y > 0 || (d.y == 0 && d.x > 0); }

bool angle_less(LatticePoint u, LatticePoint v) {
    const bool hu = upper_half(u), hv = upper_half(v);
    if (hu != hv) return hu;
    return cross(u, v) > 0;
}

}  // namespace

std::vector<std::vector<LatticePoint>> bounded_faces(const PointConfiguration& cfg, std::span<const Edge> internal) {
    std::set<LatticePoint> vertices(cfg.hull_corners().begin(), cfg.hull_corners().end());
    for (const auto& e : internal) {
        vertices.insert(e.a());
        vertices.insert(e.b());
    }

    std::vector<Edge> all(internal.begin(), internal.end());
    const auto hull = cfg.hull_corners();
    if (hull.size() >= 3) {
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const Edge side(hull[i], hull[(i + 1) % hull.size()]);
            std::vector<LatticePoint> on;
            for (const auto& v : vertices)
                if (side.contains(v)) on.push_back(v);
            std::sort(on.begin(), on.end());
            for (std::size_t k = 0; k + 1 < on.size(); ++k) all.emplace_back(on[k], on[k + 1]);
        }
    }

    std::map<LatticePoint, std::vector<LatticePoint>> around;
    for (const auto& e : all) {
        around[e.a()].push_back(e.b());
        around[e.b()].push_back(e.a());
    }
    for (auto& [v, nbrs] : around) {
        std::sort(nbrs.begin(), nbrs.end(),
                  [&v = v](LatticePoint l, LatticePoint r) { return angle_less(l - v, r - v); });
    }

    std::set<std::pair<LatticePoint, LatticePoint>> used;
    std::vector<std::vector<LatticePoint>> faces;
    for (const auto& e : all) {
        for (const auto& [from0, to0] : {std::pair{e.a(), e.b()}, std::pair{e.b(), e.a()}}) {
            if (used.count({from0, to0})) continue;
            std::vector<LatticePoint> cycle;
            LatticePoint from = from0, to = to0;
            while (used.insert({from, to}).second) {
                cycle.push_back(from);
                // Next edge: the neighbour of `to` just clockwise of `from`,
                // which keeps the traced face on the left.
                const auto& nbrs = around[to];
                const auto it = std::find(nbrs.begin(), nbrs.end(), from);
                const auto pos = static_cast<std::size_t>(it - nbrs.begin());
                const auto next = nbrs[(pos + nbrs.size() - 1) % nbrs.size()];
                from = to;
                to = next;
            }
            if (twice_signed_area(cycle) > 0) faces.push_back(std::move(cycle));
        }
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

bool is_convex_polygon(std::span<const LatticePoint> polygon, bool allow_straight) {
    const std::size_t n = polygon.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = polygon[i];
        const auto& q = polygon[(i + 1) % n];
        const auto& r = polygon[(i + 2) % n];
        const auto turn = orient(p, q, r);
        if (turn < 0) return false;
        // A zero turn is either a straight angle or a spike doubling back.
        if (turn == 0 && (!allow_straight || dot(q - p, r - q) <= 0)) return false;
    }
    return twice_signed_area(polygon) > 0;
}

}  // namespace gridsub

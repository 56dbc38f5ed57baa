#include "gridsub/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gridsub {

Edge::Edge(LatticePoint p, LatticePoint q) : a_(std::min(p, q)), b_(std::max(p, q)) {
    if (p == q) throw std::invalid_argument("degenerate edge at " + to_string(p));
}

bool Edge::contains(LatticePoint p) const {
    if (orient(a_, b_, p) != 0) return false;
    return std::min(a_.x, b_.x) <= p.x && p.x <= std::max(a_.x, b_.x) &&
           std::min(a_.y, b_.y) <= p.y && p.y <= std::max(a_.y, b_.y);
}

bool Edge::contains_in_interior(LatticePoint p) const { return contains(p) && !has_endpoint(p); }

bool Edge::is_primitive() const {
    const auto d = direction();
    return std::gcd(d.x, d.y) == 1;
}

std::string to_string(LatticePoint p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

std::string to_string(const Edge& e) { return to_string(e.a()) + "-" + to_string(e.b()); }

SlopeClass slope_class(const Edge& e) {
    const auto d = e.direction();
    if (d.x == 0) return SlopeClass::vertical;
    return d.x * d.y >= 0 ? SlopeClass::nonnegative : SlopeClass::negative;
}

namespace {

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace

Contact contact(const Edge& e1, const Edge& e2) {
    if (e1 == e2) return Contact::overlap;
    const auto a1 = e1.a(), b1 = e1.b(), a2 = e2.a(), b2 = e2.b();
    const int o1 = sign(orient(a1, b1, a2));
    const int o2 = sign(orient(a1, b1, b2));
    const int o3 = sign(orient(a2, b2, a1));
    const int o4 = sign(orient(a2, b2, b1));

    if (o1 == 0 && o2 == 0) {
        // Same supporting line; lexicographic order is the order along it.
        const auto lo = std::max(a1, a2);
        const auto hi = std::min(b1, b2);
        if (lo < hi) return Contact::overlap;
        if (lo == hi) return Contact::common_endpoint;
        return Contact::none;
    }

    const bool shares = e1.has_endpoint(a2) || e1.has_endpoint(b2);
    if (shares) return Contact::common_endpoint;

    if (o1 * o2 < 0 && o3 * o4 < 0) {
        const auto d1 = e1.direction();
        const auto d2 = e2.direction();
        std::int64_t den = cross(d1, d2);
        std::int64_t num = cross(a2 - a1, d2);
        if (den < 0) {
            den = -den;
            num = -num;
        }
        const bool on_lattice = (d1.x * num) % den == 0 && (d1.y * num) % den == 0;
        return on_lattice ? Contact::lattice_point : Contact::off_lattice;
    }

    if ((o1 == 0 && e1.contains(a2)) || (o2 == 0 && e1.contains(b2)) || (o3 == 0 && e2.contains(a1)) ||
        (o4 == 0 && e2.contains(b1))) {
        return Contact::lattice_point;
    }
    return Contact::none;
}

Interaction interact(const Edge& e1, const Edge& e2) {
    switch (contact(e1, e2)) {
        case Contact::none: return Interaction::disjoint;
        case Contact::common_endpoint: return Interaction::shared_endpoint;
        default: return Interaction::conflict;
    }
}

bool compatible(const Edge& e1, const Edge& e2, EdgeInteractionRule rule) {
    const auto c = contact(e1, e2);
    if (c == Contact::none || c == Contact::common_endpoint) return true;
    return rule == EdgeInteractionRule::paper_literal && c == Contact::lattice_point;
}

std::string to_string(EdgeInteractionRule r) { return r == EdgeInteractionRule::strict ? "strict" : "paper-literal"; }

std::string to_string(CandidateRule r) { return r == CandidateRule::all_pairs ? "all-pairs" : "primitive-only"; }

std::optional<EdgeInteractionRule> parse_interaction_rule(std::string_view s) {
    if (s == "strict") return EdgeInteractionRule::strict;
    if (s == "paper-literal") return EdgeInteractionRule::paper_literal;
    return std::nullopt;
}

std::optional<CandidateRule> parse_candidate_rule(std::string_view s) {
    if (s == "all-pairs") return CandidateRule::all_pairs;
    if (s == "primitive-only") return CandidateRule::primitive_only;
    return std::nullopt;
}

namespace {

// Andrew's monotone chain, collinear points dropped, counter-clockwise.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<LatticePoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace

PointConfiguration::PointConfiguration(Kind kind, int p, int q, std::vector<LatticePoint> points)
    : kind_(kind), p_(p), q_(q), points_(std::move(points)), hull_(convex_hull(points_)) {}

PointConfiguration PointConfiguration::grid(int cols, int rows) {
    if (cols < 1 || rows < 1) throw std::invalid_argument("grid needs cols >= 1 and rows >= 1");
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(cols) * rows);
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < cols; ++i) pts.push_back({i, j});
    return {Kind::grid, cols, rows, std::move(pts)};
}

PointConfiguration PointConfiguration::two_row(int top, int bottom) {
    if (top < 1 || bottom < 1) throw std::invalid_argument("two-row needs top >= 1 and bottom >= 1");
    std::vector<LatticePoint> pts;
    for (int i = 0; i < bottom; ++i) pts.push_back({i, 0});
    for (int i = 0; i < top; ++i) pts.push_back({i, 1});
    return {Kind::two_row, top, bottom, std::move(pts)};
}

std::optional<std::size_t> PointConfiguration::index_of(LatticePoint p) const {
    // Row-major order is (y, x) lexicographic.
    auto it = std::lower_bound(points_.begin(), points_.end(), p, [](LatticePoint l, LatticePoint r) {
        return std::pair(l.y, l.x) < std::pair(r.y, r.x);
    });
    if (it == points_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
}

bool PointConfiguration::is_hull_corner(LatticePoint p) const {
    return std::find(hull_.begin(), hull_.end(), p) != hull_.end();
}

bool PointConfiguration::on_hull_boundary(LatticePoint p) const {
    if (hull_.size() == 1) return p == hull_[0];
    for (std::size_t i = 0; i < hull_.size(); ++i) {
        if (Edge(hull_[i], hull_[(i + 1) % hull_.size()]).contains(p)) return true;
    }
    return false;
}

bool PointConfiguration::on_hull_boundary(LatticePoint p, LatticePoint q) const {
    if (hull_.size() < 2) return true;
    for (std::size_t i = 0; i < hull_.size(); ++i) {
        const Edge side(hull_[i], hull_[(i + 1) % hull_.size()]);
        if (side.contains(p) && side.contains(q)) return true;
    }
    return false;
}

std::vector<Edge> PointConfiguration::hull_unit_edges() const {
    std::vector<Edge> out;
    if (hull_.size() < 2) return out;
    const std::size_t sides = hull_.size() == 2 ? 1 : hull_.size();
    for (std::size_t i = 0; i < sides; ++i) {
        const Edge side(hull_[i], hull_[(i + 1) % hull_.size()]);
        std::vector<LatticePoint> on;
        for (const auto& p : points_)
            if (side.contains(p)) on.push_back(p);
        std::sort(on.begin(), on.end());
        for (std::size_t k = 0; k + 1 < on.size(); ++k) out.emplace_back(on[k], on[k + 1]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LatticePoint> PointConfiguration::boundary_directions(LatticePoint p) const {
    std::vector<LatticePoint> dirs;
    if (hull_.size() < 2) return dirs;
    const std::size_t n = hull_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (hull_[i] != p) continue;
        dirs.push_back(hull_[(i + 1) % n] - p);
        if (n > 2) dirs.push_back(hull_[(i + n - 1) % n] - p);
        return dirs;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Edge side(hull_[i], hull_[(i + 1) % n]);
        if (side.contains(p)) {
            dirs.push_back(hull_[i] - p);
            dirs.push_back(hull_[(i + 1) % n] - p);
            return dirs;
        }
    }
    return dirs;
}

std::string PointConfiguration::descriptor() const {
    const char* name = kind_ == Kind::grid ? "grid(" : "two-row(";
    return name + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

std::vector<Edge> candidate_edges(const PointConfiguration& cfg, bool bimonotone_only, CandidateRule rule) {
    std::vector<Edge> out;
    const auto pts = cfg.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (cfg.on_hull_boundary(pts[i], pts[j])) continue;
            Edge e(pts[i], pts[j]);
            if (bimonotone_only && !is_bimonotone(e)) continue;
            if (rule == CandidateRule::primitive_only && !e.is_primitive()) continue;
            out.push_back(e);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool upper_half(LatticePoint d) { return d.y > 0 || (d.y == 0 && d.x > 0); }

bool angle_less(LatticePoint u, LatticePoint v) {
    const bool hu = upper_half(u), hv = upper_half(v);
    if (hu != hv) return hu;
    return cross(u, v) > 0;
}

// Counter-clockwise sweep from u to v is at most a half-turn (and not zero).
bool gap_at_most_pi(LatticePoint u, LatticePoint v) {
    const auto c = cross(u, v);
    return c > 0 || (c == 0 && dot(u, v) < 0);
}

}  // namespace

bool directions_convex(std::span<const LatticePoint> internal_dirs, std::span<const LatticePoint> boundary_dirs) {
    if (internal_dirs.empty()) return true;
    struct Dir {
        LatticePoint d;
        bool boundary;
    };
    std::vector<Dir> all;
    all.reserve(internal_dirs.size() + boundary_dirs.size());
    for (const auto& d : internal_dirs) all.push_back({d, false});
    for (const auto& d : boundary_dirs) all.push_back({d, true});
    std::sort(all.begin(), all.end(), [](const Dir& l, const Dir& r) { return angle_less(l.d, r.d); });
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& u = all[i];
        const auto& v = all[(i + 1) % all.size()];
        if (u.boundary && v.boundary) continue;  // the sector outside the hull
        if (!gap_at_most_pi(u.d, v.d)) return false;
    }
    return true;
}

bool local_convexity_ok(const PointConfiguration& cfg, std::span<const Edge> edges, LatticePoint p) {
    std::vector<LatticePoint> dirs;
    for (const auto& e : edges)
        if (e.has_endpoint(p)) dirs.push_back(e.other(p) - p);
    if (dirs.empty()) return true;
    const auto boundary = cfg.boundary_directions(p);
    return directions_convex(dirs, boundary);
}

std::int64_t twice_signed_area(std::span<const LatticePoint> polygon) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < polygon.size(); ++i) s += cross(polygon[i], polygon[(i + 1) % polygon.size()]);
    return s;
}

}  // namespace gridsub

#pragma once

// Exact integer plane geometry for lattice point configurations.
//
// Everything here works on int64 coordinates with cross/dot products only;
// slopes are never formed as quotients.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gridsub {

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }
constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }

constexpr std::int64_t cross(LatticePoint u, LatticePoint v) { return u.x * v.y - u.y * v.x; }
constexpr std::int64_t dot(LatticePoint u, LatticePoint v) { return u.x * v.x + u.y * v.y; }

/// Sign of the turn o -> a -> b: positive for counter-clockwise.
constexpr std::int64_t orient(LatticePoint o, LatticePoint a, LatticePoint b) { return cross(a - o, b - o); }

/// Segment between two distinct lattice points, stored with a < b.
class Edge {
public:
    Edge(LatticePoint p, LatticePoint q);

    const LatticePoint& a() const { return a_; }
    const LatticePoint& b() const { return b_; }
    LatticePoint direction() const { return b_ - a_; }
    std::int64_t squared_length() const { return dot(direction(), direction()); }

    bool has_endpoint(LatticePoint p) const { return p == a_ || p == b_; }
    /// The other endpoint; `p` must be an endpoint.
    LatticePoint other(LatticePoint p) const { return p == a_ ? b_ : a_; }

    /// True if p lies on the closed segment.
    bool contains(LatticePoint p) const;
    /// True if p lies on the segment but is not an endpoint.
    bool contains_in_interior(LatticePoint p) const;
    /// No lattice points strictly between the endpoints.
    bool is_primitive() const;

    friend auto operator<=>(const Edge&, const Edge&) = default;

private:
    LatticePoint a_;
    LatticePoint b_;
};

std::string to_string(LatticePoint p);
std::string to_string(const Edge& e);

enum class SlopeClass { vertical, nonnegative, negative };

SlopeClass slope_class(const Edge& e);
inline bool is_bimonotone(const Edge& e) { return slope_class(e) != SlopeClass::negative; }

enum class Interaction { disjoint, shared_endpoint, conflict };

/// How two segments touch, before any convention is applied.
enum class Contact {
    none,             ///< no common point
    common_endpoint,  ///< exactly one common point, an endpoint of both
    lattice_point,    ///< single common point on the lattice that is interior to at least one segment
    off_lattice,      ///< proper crossing at a non-lattice point
    overlap,          ///< collinear overlap of positive length (or identical)
};

Contact contact(const Edge& e1, const Edge& e2);

/// Strict interaction: edges may only meet at a common endpoint.
Interaction interact(const Edge& e1, const Edge& e2);

/// Which contacts between two internal edges are tolerated.
enum class EdgeInteractionRule {
    strict,         ///< only a common endpoint
    paper_literal,  ///< anything except an intersection point off the lattice
};

enum class CandidateRule { all_pairs, primitive_only };

struct Conventions {
    EdgeInteractionRule interaction = EdgeInteractionRule::strict;
    CandidateRule candidates = CandidateRule::primitive_only;

    friend bool operator==(const Conventions&, const Conventions&) = default;
};

std::string to_string(EdgeInteractionRule r);
std::string to_string(CandidateRule r);
std::optional<EdgeInteractionRule> parse_interaction_rule(std::string_view s);
std::optional<CandidateRule> parse_candidate_rule(std::string_view s);

bool compatible(const Edge& e1, const Edge& e2, EdgeInteractionRule rule);

/// Either an m x n grid or a two-row configuration P(top, bottom).
class PointConfiguration {
public:
    enum class Kind { grid, two_row };

    static PointConfiguration grid(int cols, int rows);
    static PointConfiguration two_row(int top, int bottom);

    Kind kind() const { return kind_; }
    int cols() const { return p_; }
    int rows() const { return q_; }
    int top() const { return p_; }
    int bottom() const { return q_; }

    /// Row-major: increasing y, then increasing x.
    std::span<const LatticePoint> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    std::optional<std::size_t> index_of(LatticePoint p) const;

    /// Hull vertices in counter-clockwise order, starting at the lowest-leftmost.
    /// Collinear configurations yield the two extreme points.
    std::span<const LatticePoint> hull_corners() const { return hull_; }
    bool is_hull_corner(LatticePoint p) const;
    bool on_hull_boundary(LatticePoint p) const;
    /// True if the closed segment pq lies inside the hull boundary.
    bool on_hull_boundary(LatticePoint p, LatticePoint q) const;

    /// Hull boundary cut at every configuration point it contains.
    std::vector<Edge> hull_unit_edges() const;

    /// Directions along the hull boundary leaving p, one or two of them.
    std::vector<LatticePoint> boundary_directions(LatticePoint p) const;

    /// "grid(3,3)" / "two-row(4,2)".
    std::string descriptor() const;

    friend bool operator==(const PointConfiguration& l, const PointConfiguration& r) {
        return l.kind_ == r.kind_ && l.p_ == r.p_ && l.q_ == r.q_;
    }

private:
    PointConfiguration(Kind kind, int p, int q, std::vector<LatticePoint> points);

    Kind kind_;
    int p_;
    int q_;
    std::vector<LatticePoint> points_;
    std::vector<LatticePoint> hull_;
};

/// Internal candidate edges: all point pairs not lying in the hull boundary,
/// optionally restricted to vertical/nonnegative slope. Sorted.
std::vector<Edge> candidate_edges(const PointConfiguration& cfg, bool bimonotone_only,
                                  CandidateRule rule = CandidateRule::all_pairs);

/// Angular-gap test at p over the internal edges having p as an endpoint.
/// Boundary points also see the hull boundary directions; the gap that lies
/// outside the hull is not tested.
bool local_convexity_ok(const PointConfiguration& cfg, std::span<const Edge> edges, LatticePoint p);

/// Same test given the incident directions directly.
bool directions_convex(std::span<const LatticePoint> internal_dirs, std::span<const LatticePoint> boundary_dirs);

/// Twice the signed area of a lattice polygon (shoelace).
std::int64_t twice_signed_area(std::span<const LatticePoint> polygon);

}  // namespace gridsub

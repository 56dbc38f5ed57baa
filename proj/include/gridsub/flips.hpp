#pragma once

// Full-point triangulations of lattice grids and diagonal flips between them.

#include "gridsub/bigint.hpp"
#include "gridsub/enumeration.hpp"
#include "gridsub/geometry.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace gridsub {

/// A triangulation of a grid using every grid point, as its full sorted edge
/// set (hull unit edges included).
class Triangulation {
public:
    Triangulation(PointConfiguration cfg, std::vector<Edge> edges);

    /// Adds the hull unit edges to an internal edge set.
    static Triangulation from_internal(const PointConfiguration& cfg, std::span<const Edge> internal);

    const PointConfiguration& cfg() const { return cfg_; }
    std::span<const Edge> edges() const { return edges_; }
    std::vector<Edge> internal_edges() const;
    bool contains(const Edge& e) const;

    /// Triangles as counter-clockwise vertex triples, sorted.
    std::vector<std::array<LatticePoint, 3>> triangles() const;

    /// Throws ValidationError unless every point has degree >= 2, the edge and
    /// triangle counts match a full-point lattice triangulation, and every
    /// triangle has area 1/2.
    void check_invariants() const;

    friend bool operator==(const Triangulation& l, const Triangulation& r) {
        return l.cfg_ == r.cfg_ && l.edges_ == r.edges_;
    }

private:
    PointConfiguration cfg_;
    std::vector<Edge> edges_;
};

std::size_t expected_edge_count(int cols, int rows);
std::size_t expected_triangle_count(int cols, int rows);

struct Flip {
    Edge removed;
    Edge inserted;
    /// Counter-clockwise: removed.a, one apex, removed.b, the other apex.
    std::array<LatticePoint, 4> quad;

    Flip inverse() const {
        const std::size_t k = quad[1] == inserted.a() ? 1 : 3;
        return {inserted, removed, {quad[k], quad[(k + 1) % 4], quad[(k + 2) % 4], quad[(k + 3) % 4]}};
    }
    friend bool operator==(const Flip&, const Flip&) = default;
};

/// Unit horizontals, unit verticals and every (i,j)-(i+1,j+1).
Triangulation canonical_triangulation(int cols, int rows);

/// Flippable interior edges in sorted order. A flip is available when the two
/// triangles on the edge form a strictly convex quadrilateral; in bimonotone
/// mode the inserted diagonal must also be vertical or nonnegative.
std::vector<Flip> available_flips(const Triangulation& t, bool bimonotone_only);

/// Throws InvalidFlip if `f` is not currently available.
Triangulation apply_flip(const Triangulation& t, const Flip& f);

struct BfsOptions {
    int threads = 1;
    /// Maximum number of visited triangulations.
    std::uint64_t node_budget = default_node_budget();
};

/// Every triangulation reachable from the canonical one, sorted by edge set.
std::vector<Triangulation> bfs_visit(int cols, int rows, bool bimonotone_only, const BfsOptions& options = {});

BigCount bfs_count(int cols, int rows, bool bimonotone_only, const BfsOptions& options = {});

/// Flips a longest non-unit diagonal (ties: smallest edge) until the
/// canonical triangulation is reached, asserting at every step that the quad
/// is a parallelogram and the replacement is shorter and bimonotone. Throws
/// DescentViolation otherwise.
std::vector<Flip> canonicalize_by_longest_diagonal(const Triangulation& t);

}  // namespace gridsub

#pragma once

#include "gridsub/geometry.hpp"

#include <span>
#include <vector>

namespace gridsub {

/// Bounded faces of the plane graph formed by the hull boundary and the given
/// internal edges, each as a counter-clockwise vertex cycle. Vertices are the
/// hull corners and the endpoints of the internal edges; the edges must be
/// pairwise non-crossing (strict interaction).
std::vector<std::vector<LatticePoint>> bounded_faces(const PointConfiguration& cfg, std::span<const Edge> internal);

/// Strictly convex polygon, or convex with straight angles allowed.
bool is_convex_polygon(std::span<const LatticePoint> polygon, bool allow_straight = true);

}  // namespace gridsub

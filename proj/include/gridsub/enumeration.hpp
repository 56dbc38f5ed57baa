#pragma once

// Subdivision counting by pruned backtracking over candidate internal edges.
//
// The search walks the sorted candidate list, deciding membership of one
// edge per level. A per-edge conflict bitmask forbids incompatible edges as
// soon as an edge is taken, and the angular-gap test runs at a point as soon
// as its last incident candidate has been decided.

#include "gridsub/bigint.hpp"
#include "gridsub/geometry.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace gridsub {

struct Subdivision {
    PointConfiguration cfg;
    std::vector<Edge> edges;  ///< internal edges, sorted
};

/// Fixed-capacity bitset over candidate indices.
class EdgeMask {
public:
    static constexpr std::size_t kWords = 4;
    static constexpr std::size_t kCapacity = kWords * 64;

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    EdgeMask& operator|=(const EdgeMask& o) {
        for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    std::size_t count() const;

    friend bool operator==(const EdgeMask&, const EdgeMask&) = default;

private:
    std::array<std::uint64_t, kWords> words_{};
};

/// conflicts(i) holds every candidate j incompatible with candidate i.
class ConflictTable {
public:
    ConflictTable(std::span<const Edge> candidates, EdgeInteractionRule rule);

    const EdgeMask& conflicts(std::size_t i) const { return masks_[i]; }
    std::size_t size() const { return masks_.size(); }

private:
    std::vector<EdgeMask> masks_;
};

/// Node budget from GRIDSUB_BUDGET_NODES, else 10^10.
std::uint64_t default_node_budget();

struct EnumerationOptions {
    Conventions conventions{};
    std::uint64_t node_budget = default_node_budget();
    int threads = 1;
    /// Number of leading candidates fixed per parallel task; 0 picks one.
    int split_depth = 0;
};

struct EnumerationStats {
    std::uint64_t nodes = 0;
    std::size_t candidates = 0;
};

BigCount count_subdivisions(const PointConfiguration& cfg, bool bimonotone_only,
                            const EnumerationOptions& options = {}, EnumerationStats* stats = nullptr);

/// All valid subdivisions ordered lexicographically by sorted edge list,
/// truncated to `limit` after ordering.
std::vector<Subdivision> list_subdivisions(const PointConfiguration& cfg, bool bimonotone_only,
                                           std::size_t limit = std::numeric_limits<std::size_t>::max(),
                                           const EnumerationOptions& options = {});

/// Subdivisions that use every point and whose faces are all triangles.
/// Each accepted one is checked to consist of area-1/2 triangles.
BigCount count_full_triangulations(const PointConfiguration& cfg, bool bimonotone_only,
                                   const EnumerationOptions& options = {});

std::vector<Subdivision> list_full_triangulations(const PointConfiguration& cfg, bool bimonotone_only,
                                                  const EnumerationOptions& options = {});

/// From-scratch check of an internal edge set: every edge is a legal
/// candidate, pairs are compatible, and every point passes the gap test.
bool is_valid_subdivision(const PointConfiguration& cfg, std::span<const Edge> edges, bool bimonotone_only,
                          const Conventions& conventions = {});

/// True if the hull itself has a negative-slope side, which rules out every
/// bimonotone subdivision.
bool hull_blocks_bimonotone(const PointConfiguration& cfg);

}  // namespace gridsub

#include "gridsub/flips.hpp"

#include "gridsub/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

namespace gridsub {

namespace {

class Adjacency {
public:
    Adjacency(const PointConfiguration& cfg, std::span<const Edge> edges) : cfg_(cfg), n_(cfg.size()), m_(n_ * n_, 0) {
        for (const auto& e : edges) {
            const auto a = idx(e.a()), b = idx(e.b());
            m_[a * n_ + b] = m_[b * n_ + a] = 1;
        }
    }

    bool has(LatticePoint p, LatticePoint q) const { return m_[idx(p) * n_ + idx(q)] != 0; }

    std::size_t degree(LatticePoint p) const {
        const auto i = idx(p);
        return static_cast<std::size_t>(std::count(m_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                                                   m_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_), 1));
    }

    /// Apex c with ac, bc present and orient(a, b, c) == side (+1 / -1).
    std::optional<LatticePoint> apex(const Edge& e, int side) const {
        for (const auto& c : cfg_.points()) {
            if (orient(e.a(), e.b(), c) != side) continue;
            if (has(e.a(), c) && has(e.b(), c)) return c;
        }
        return std::nullopt;
    }

private:
    std::size_t idx(LatticePoint p) const { return *cfg_.index_of(p); }

    const PointConfiguration& cfg_;
    std::size_t n_;
    std::vector<char> m_;
};

std::vector<Edge> sorted_unique(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

bool is_axis(const Edge& e) { return e.a().x == e.b().x || e.a().y == e.b().y; }

}  // namespace

Triangulation::Triangulation(PointConfiguration cfg, std::vector<Edge> edges)
    : cfg_(std::move(cfg)), edges_(sorted_unique(std::move(edges))) {}

Triangulation Triangulation::from_internal(const PointConfiguration& cfg, std::span<const Edge> internal) {
    auto edges = cfg.hull_unit_edges();
    edges.insert(edges.end(), internal.begin(), internal.end());
    return {cfg, std::move(edges)};
}

std::vector<Edge> Triangulation::internal_edges() const {
    std::vector<Edge> out;
    for (const auto& e : edges_)
        if (!cfg_.on_hull_boundary(e.a(), e.b())) out.push_back(e);
    return out;
}

bool Triangulation::contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

std::vector<std::array<LatticePoint, 3>> Triangulation::triangles() const {
    // An empty lattice triangle whose three sides are present is a face:
    // no other edge can enter it without crossing a side.
    const Adjacency adj(cfg_, edges_);
    std::vector<std::array<LatticePoint, 3>> out;
    for (const auto& e : edges_) {
        for (const auto& c : cfg_.points()) {
            if (c <= e.b()) continue;  // report each triangle once, from its two smallest vertices
            const auto o = orient(e.a(), e.b(), c);
            if (o != 1 && o != -1) continue;
            if (!adj.has(e.a(), c) || !adj.has(e.b(), c)) continue;
            out.push_back(o > 0 ? std::array{e.a(), e.b(), c} : std::array{e.a(), c, e.b()});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t expected_edge_count(int cols, int rows) {
    return static_cast<std::size_t>(3 * cols * rows - 2 * cols - 2 * rows + 1);
}

std::size_t expected_triangle_count(int cols, int rows) { return static_cast<std::size_t>(2 * (cols - 1) * (rows - 1)); }

void Triangulation::check_invariants() const {
    const auto fail = [&](const std::string& why) {
        throw ValidationError("triangulation of " + cfg_.descriptor() + ": " + why);
    };
    const Adjacency adj(cfg_, edges_);
    for (const auto& p : cfg_.points())
        if (adj.degree(p) < 2) fail("point " + to_string(p) + " is not used");
    std::size_t h = 0;
    for (const auto& p : cfg_.points())
        if (cfg_.on_hull_boundary(p)) ++h;
    const std::size_t n = cfg_.size();
    if (edges_.size() != 3 * n - h - 3) fail("has " + std::to_string(edges_.size()) + " edges");
    const auto tris = triangles();
    if (tris.size() != 2 * n - h - 2) fail("has " + std::to_string(tris.size()) + " triangles");
    for (const auto& t : tris)
        if (twice_signed_area(t) != 1) fail("triangle with area other than 1/2");
    for (const auto& e : edges_)
        if (!cfg_.index_of(e.a()) || !cfg_.index_of(e.b())) fail("edge " + to_string(e) + " leaves the grid");
}

Triangulation canonical_triangulation(int cols, int rows) {
    if (cols < 2 || rows < 2) throw std::invalid_argument("canonical triangulation needs cols >= 2 and rows >= 2");
    const auto cfg = PointConfiguration::grid(cols, rows);
    std::vector<Edge> edges;
    for (int j = 0; j < rows; ++j) {
        for (int i = 0; i < cols; ++i) {
            if (i + 1 < cols) edges.emplace_back(LatticePoint{i, j}, LatticePoint{i + 1, j});
            if (j + 1 < rows) edges.emplace_back(LatticePoint{i, j}, LatticePoint{i, j + 1});
            if (i + 1 < cols && j + 1 < rows) edges.emplace_back(LatticePoint{i, j}, LatticePoint{i + 1, j + 1});
        }
    }
    return {cfg, std::move(edges)};
}

std::vector<Flip> available_flips(const Triangulation& t, bool bimonotone_only) {
    const Adjacency adj(t.cfg(), t.edges());
    std::vector<Flip> out;
    for (const auto& e : t.edges()) {
        if (t.cfg().on_hull_boundary(e.a(), e.b())) continue;
        const auto left = adj.apex(e, 1);
        const auto right = adj.apex(e, -1);
        if (!left || !right) continue;
        // a and b strictly on opposite sides of the other diagonal.
        const auto oa = orient(*right, *left, e.a());
        const auto ob = orient(*right, *left, e.b());
        if (!((oa > 0 && ob < 0) || (oa < 0 && ob > 0))) continue;
        const Edge inserted(*left, *right);
        if (bimonotone_only && !is_bimonotone(inserted)) continue;
        out.push_back({e, inserted, {e.a(), *right, e.b(), *left}});
    }
    return out;
}

Triangulation apply_flip(const Triangulation& t, const Flip& f) {
    const auto flips = available_flips(t, false);
    const auto same = [&f](const Flip& g) { return g.removed == f.removed && g.inserted == f.inserted; };
    if (std::find_if(flips.begin(), flips.end(), same) == flips.end()) {
        throw InvalidFlip("flip " + to_string(f.removed) + " -> " + to_string(f.inserted) + " is not available");
    }
    std::vector<Edge> edges;
    edges.reserve(t.edges().size());
    for (const auto& e : t.edges())
        if (e != f.removed) edges.push_back(e);
    edges.push_back(f.inserted);
    return {t.cfg(), std::move(edges)};
}

namespace {

// Full key of a triangulation: its sorted edge list.
struct EdgeListHash {
    std::size_t operator()(const std::vector<Edge>& edges) const {
        std::uint64_t h = 1469598103934665603ULL;
        const auto mix = [&h](std::int64_t v) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ULL;
        };
        for (const auto& e : edges) {
            mix(e.a().x);
            mix(e.a().y);
            mix(e.b().x);
            mix(e.b().y);
        }
        return static_cast<std::size_t>(h);
    }
};

std::vector<std::vector<Edge>> neighbours(const Triangulation& t, bool bimonotone_only) {
    std::vector<std::vector<Edge>> out;
    for (const auto& f : available_flips(t, bimonotone_only)) {
        std::vector<Edge> edges;
        edges.reserve(t.edges().size());
        for (const auto& e : t.edges())
            if (e != f.removed) edges.push_back(e);
        edges.insert(std::upper_bound(edges.begin(), edges.end(), f.inserted), f.inserted);
        out.push_back(std::move(edges));
    }
    return out;
}

}  // namespace

std::vector<Triangulation> bfs_visit(int cols, int rows, bool bimonotone_only, const BfsOptions& options) {
    const auto start = canonical_triangulation(cols, rows);
    const auto cfg = start.cfg();
    std::unordered_set<std::vector<Edge>, EdgeListHash> seen;
    std::vector<std::vector<Edge>> order;
    std::vector<std::vector<Edge>> frontier;

    const auto admit = [&](std::vector<Edge> edges) {
        if (seen.count(edges)) return;
        if (seen.size() >= options.node_budget) {
            throw BudgetExceeded("flip search budget of " + std::to_string(options.node_budget) +
                                 " triangulations exhausted");
        }
        seen.insert(edges);
        order.push_back(edges);
        frontier.push_back(std::move(edges));
    };
    admit({start.edges().begin(), start.edges().end()});

    // Level-synchronous: expand a level (possibly in parallel), then merge in
    // frontier order so the visit order does not depend on scheduling.
    while (!frontier.empty()) {
        std::vector<std::vector<Edge>> level;
        level.swap(frontier);
        std::vector<std::vector<std::vector<Edge>>> expanded(level.size());
        const auto expand = [&](std::size_t i) { expanded[i] = neighbours(Triangulation(cfg, level[i]), bimonotone_only); };
        if (options.threads <= 1 || level.size() < 2) {
            for (std::size_t i = 0; i < level.size(); ++i) expand(i);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::jthread> pool;
            for (int k = 0; k < options.threads; ++k) {
                pool.emplace_back([&] {
                    for (std::size_t i; (i = next.fetch_add(1)) < level.size();) expand(i);
                });
            }
        }
        for (auto& group : expanded)
            for (auto& edges : group) admit(std::move(edges));
    }

    std::sort(order.begin(), order.end());
    std::vector<Triangulation> out;
    out.reserve(order.size());
    for (auto& edges : order) out.emplace_back(cfg, std::move(edges));
    return out;
}

BigCount bfs_count(int cols, int rows, bool bimonotone_only, const BfsOptions& options) {
    return BigCount(bfs_visit(cols, rows, bimonotone_only, options).size());
}

namespace {

std::vector<std::int64_t> length_profile(const Triangulation& t) {
    std::vector<std::int64_t> lengths;
    for (const auto& e : t.edges()) lengths.push_back(e.squared_length());
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
}

}  // namespace

std::vector<Flip> canonicalize_by_longest_diagonal(const Triangulation& t) {
    const auto fail = [&](const std::string& why) { throw DescentViolation("descent on " + t.cfg().descriptor() + ": " + why); };
    if (t.cfg().kind() != PointConfiguration::Kind::grid) fail("only grid triangulations are supported");
    for (const auto& e : t.edges())
        if (!is_bimonotone(e)) fail("input is not bimonotone (edge " + to_string(e) + ")");

    const auto target = canonical_triangulation(t.cfg().cols(), t.cfg().rows());
    std::vector<Flip> sequence;
    Triangulation current = t;
    const std::size_t max_steps = current.edges().size() * 1024;

    for (;;) {
        std::optional<Edge> longest;
        for (const auto& e : current.edges()) {
            if (is_axis(e) || e.squared_length() <= 2) continue;
            if (!longest || e.squared_length() > longest->squared_length()) longest = e;
        }
        if (!longest) break;
        if (sequence.size() >= max_steps) fail("did not terminate");

        const auto flips = available_flips(current, false);
        const auto it = std::find_if(flips.begin(), flips.end(), [&](const Flip& f) { return f.removed == *longest; });
        if (it == flips.end()) fail("longest diagonal " + to_string(*longest) + " is not flippable");
        const Flip& f = *it;
        const auto& q = f.quad;
        if (q[0] + q[2] != q[1] + q[3]) fail("quad around " + to_string(*longest) + " is not a parallelogram");
        if (f.inserted.squared_length() >= f.removed.squared_length())
            fail("replacement " + to_string(f.inserted) + " is not shorter");
        if (!is_bimonotone(f.inserted)) fail("replacement " + to_string(f.inserted) + " is not bimonotone");

        auto next = apply_flip(current, f);
        if (!(length_profile(next) < length_profile(current))) fail("edge length profile did not decrease");
        sequence.push_back(f);
        current = std::move(next);
    }
    if (!(current == target)) fail("stopped short of the canonical triangulation");
    return sequence;
}

}  // namespace gridsub

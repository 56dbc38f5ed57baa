#include "gridsub/enumeration.hpp"

#include "gridsub/errors.hpp"
#include "gridsub/faces.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace gridsub {

std::size_t EdgeMask::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

ConflictTable::ConflictTable(std::span<const Edge> candidates, EdgeInteractionRule rule) {
    if (candidates.size() > EdgeMask::kCapacity) {
        throw std::invalid_argument("configuration has " + std::to_string(candidates.size()) +
                                    " candidate edges; at most " + std::to_string(EdgeMask::kCapacity) +
                                    " are supported");
    }
    masks_.resize(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (!compatible(candidates[i], candidates[j], rule)) {
                masks_[i].set(j);
                masks_[j].set(i);
            }
        }
    }
}

std::uint64_t default_node_budget() {
    if (const char* env = std::getenv("GRIDSUB_BUDGET_NODES")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') return v;
    }
    return 10'000'000'000ULL;
}

bool hull_blocks_bimonotone(const PointConfiguration& cfg) {
    const auto hull = cfg.hull_corners();
    if (hull.size() < 2) return false;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        if (!is_bimonotone(Edge(hull[i], hull[(i + 1) % hull.size()]))) return true;
    }
    return false;
}

namespace {

// Immutable search data shared by all workers.
struct Model {
    PointConfiguration cfg;
    std::vector<Edge> candidates;
    ConflictTable conflicts;
    std::vector<std::uint32_t> end_a;  // point index of each candidate's endpoints
    std::vector<std::uint32_t> end_b;
    std::vector<std::vector<std::uint32_t>> finalize_at;  // points whose last incident candidate is i
    std::vector<std::vector<LatticePoint>> boundary_dirs;
    std::vector<char> corner;
    std::size_t boundary_points = 0;

    Model(const PointConfiguration& c, std::vector<Edge> cands, EdgeInteractionRule rule)
        : cfg(c), candidates(std::move(cands)), conflicts(candidates, rule) {
        const auto n = cfg.size();
        std::vector<std::ptrdiff_t> last(n, -1);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const auto a = static_cast<std::uint32_t>(*cfg.index_of(candidates[i].a()));
            const auto b = static_cast<std::uint32_t>(*cfg.index_of(candidates[i].b()));
            end_a.push_back(a);
            end_b.push_back(b);
            last[a] = last[b] = static_cast<std::ptrdiff_t>(i);
        }
        finalize_at.resize(candidates.size());
        for (std::size_t p = 0; p < n; ++p)
            if (last[p] >= 0) finalize_at[static_cast<std::size_t>(last[p])].push_back(static_cast<std::uint32_t>(p));
        for (const auto& p : cfg.points()) {
            boundary_dirs.push_back(cfg.boundary_directions(p));
            corner.push_back(cfg.is_hull_corner(p) ? 1 : 0);
            if (cfg.on_hull_boundary(p)) ++boundary_points;
        }
    }
};

class BudgetMeter {
public:
    explicit BudgetMeter(std::uint64_t budget) : budget_(budget) {}

    void charge(std::uint64_t n) {
        const auto total = used_.fetch_add(n, std::memory_order_relaxed) + n;
        if (total > budget_) {
            throw BudgetExceeded("search node budget of " + std::to_string(budget_) + " exhausted");
        }
    }
    std::uint64_t used() const { return used_.load(); }

private:
    std::uint64_t budget_;
    std::atomic<std::uint64_t> used_{0};
};

// A decided prefix of the candidate list, replayable by any worker.
struct Task {
    std::vector<std::uint32_t> chosen;
    EdgeMask forbidden;
};

// Mutable depth-first state over a shared Model.
class Search {
public:
    Search(const Model& model, BudgetMeter& meter) : m_(model), meter_(meter), dirs_(model.cfg.size()) {}

    ~Search() = default;
    Search(const Search&) = delete;
    Search& operator=(const Search&) = delete;

    const Model& model() const { return m_; }
    std::span<const std::uint32_t> chosen() const { return chosen_; }
    std::size_t degree(std::size_t p) const { return dirs_[p].size(); }

    void flush() {
        meter_.charge(pending_);
        pending_ = 0;
    }

    template <class Leaf>
    void run(std::size_t depth, EdgeMask forbidden, Leaf& leaf) {
        tick();
        if (depth == m_.candidates.size()) {
            leaf(*this);
            return;
        }
        if (!forbidden.test(depth)) {
            take(depth);
            if (finalized_ok(depth)) {
                EdgeMask next = forbidden;
                next |= m_.conflicts.conflicts(depth);
                run(depth + 1, next, leaf);
            }
            drop(depth);
        }
        if (finalized_ok(depth)) run(depth + 1, forbidden, leaf);
    }

    void collect_prefixes(std::size_t depth, std::size_t stop, EdgeMask forbidden, std::vector<Task>& out) {
        tick();
        if (depth == stop) {
            out.push_back({chosen_, forbidden});
            return;
        }
        if (!forbidden.test(depth)) {
            take(depth);
            if (finalized_ok(depth)) {
                EdgeMask next = forbidden;
                next |= m_.conflicts.conflicts(depth);
                collect_prefixes(depth + 1, stop, next, out);
            }
            drop(depth);
        }
        if (finalized_ok(depth)) collect_prefixes(depth + 1, stop, forbidden, out);
    }

    void replay(const Task& t) {
        for (auto i : t.chosen) take(i);
    }

private:
    void tick() {
        if (++pending_ == 1U << 16) flush();
    }

    void take(std::size_t i) {
        const auto a = m_.end_a[i], b = m_.end_b[i];
        const auto d = m_.candidates[i].direction();
        dirs_[a].push_back(d);
        dirs_[b].push_back({-d.x, -d.y});
        chosen_.push_back(static_cast<std::uint32_t>(i));
    }

    void drop(std::size_t i) {
        dirs_[m_.end_a[i]].pop_back();
        dirs_[m_.end_b[i]].pop_back();
        chosen_.pop_back();
    }

    bool finalized_ok(std::size_t i) const {
        for (auto p : m_.finalize_at[i]) {
            if (!directions_convex(dirs_[p], m_.boundary_dirs[p])) return false;
        }
        return true;
    }

    const Model& m_;
    BudgetMeter& meter_;
    std::uint64_t pending_ = 0;
    std::vector<std::vector<LatticePoint>> dirs_;
    std::vector<std::uint32_t> chosen_;
};

// Runs the search, serially or over split prefixes, and returns one Leaf
// per task in task order so callers can merge deterministically.
template <class Leaf>
std::vector<Leaf> drive(const Model& model, const EnumerationOptions& opt, const Leaf& proto,
                        EnumerationStats* stats) {
    BudgetMeter meter(opt.node_budget);
    std::vector<Leaf> results;
    const std::size_t k = model.candidates.size();

    if (opt.threads <= 1) {
        Search s(model, meter);
        results.push_back(proto);
        s.run(0, EdgeMask{}, results.back());
        s.flush();
    } else {
        std::size_t depth = opt.split_depth > 0 ? static_cast<std::size_t>(opt.split_depth) : 12;
        depth = std::min(depth, k);
        std::vector<Task> tasks;
        {
            Search s(model, meter);
            s.collect_prefixes(0, depth, EdgeMask{}, tasks);
            s.flush();
        }
        results.assign(tasks.size(), proto);
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            try {
                for (;;) {
                    const auto t = next.fetch_add(1);
                    if (t >= tasks.size()) break;
                    Search s(model, meter);
                    s.replay(tasks[t]);
                    s.run(depth, tasks[t].forbidden, results[t]);
                    s.flush();
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(tasks.size());
            }
        };
        std::vector<std::jthread> pool;
        for (int i = 0; i < opt.threads; ++i) pool.emplace_back(worker);
        pool.clear();
        if (failure) std::rethrow_exception(failure);
    }
    if (stats) {
        stats->nodes = meter.used();
        stats->candidates = k;
    }
    return results;
}

std::vector<Edge> search_candidates(const PointConfiguration& cfg, bool bimonotone_only, const Conventions& conv) {
    return candidate_edges(cfg, bimonotone_only, conv.candidates);
}

struct CountLeaf {
    std::uint64_t count = 0;
    void operator()(const Search&) { ++count; }
};

struct ListLeaf {
    std::vector<std::vector<Edge>> found;
    void operator()(const Search& s) {
        std::vector<Edge> edges;
        for (auto i : s.chosen()) edges.push_back(s.model().candidates[i]);
        found.push_back(std::move(edges));
    }
};

// Accepts only full-point triangulations: every point used and the edge
// count of a triangulation with all points as vertices.
struct TriangulationLeaf {
    bool keep_edges = false;
    std::uint64_t count = 0;
    std::vector<std::vector<Edge>> found;

    void operator()(const Search& s) {
        const auto& m = s.model();
        const auto n = m.cfg.size();
        const auto h = m.boundary_points;
        if (n < 3 || m.cfg.hull_corners().size() < 3) return;
        if (s.chosen().size() != 3 * n - 2 * h - 3) return;
        for (std::size_t p = 0; p < n; ++p)
            if (s.degree(p) == 0 && !m.corner[p]) return;
        std::vector<Edge> edges;
        for (auto i : s.chosen()) edges.push_back(m.candidates[i]);
        for (const auto& face : bounded_faces(m.cfg, edges)) {
            if (face.size() != 3 || twice_signed_area(face) != 1) {
                throw ValidationError("full-point triangulation of " + m.cfg.descriptor() +
                                      " has a face that is not a unimodular triangle");
            }
        }
        ++count;
        if (keep_edges) found.push_back(std::move(edges));
    }
};

}  // namespace

BigCount count_subdivisions(const PointConfiguration& cfg, bool bimonotone_only, const EnumerationOptions& options,
                            EnumerationStats* stats) {
    if (bimonotone_only && hull_blocks_bimonotone(cfg)) return 0;
    const Model model(cfg, search_candidates(cfg, bimonotone_only, options.conventions),
                      options.conventions.interaction);
    BigCount total = 0;
    for (const auto& r : drive(model, options, CountLeaf{}, stats)) total += r.count;
    return total;
}

std::vector<Subdivision> list_subdivisions(const PointConfiguration& cfg, bool bimonotone_only, std::size_t limit,
                                           const EnumerationOptions& options) {
    std::vector<Subdivision> out;
    if (bimonotone_only && hull_blocks_bimonotone(cfg)) return out;
    const Model model(cfg, search_candidates(cfg, bimonotone_only, options.conventions),
                      options.conventions.interaction);
    std::vector<std::vector<Edge>> all;
    for (auto& r : drive(model, options, ListLeaf{}, nullptr))
        for (auto& e : r.found) all.push_back(std::move(e));
    std::sort(all.begin(), all.end());
    if (all.size() > limit) all.resize(limit);
    out.reserve(all.size());
    for (auto& e : all) out.push_back({cfg, std::move(e)});
    return out;
}

BigCount count_full_triangulations(const PointConfiguration& cfg, bool bimonotone_only,
                                   const EnumerationOptions& options) {
    if (bimonotone_only && hull_blocks_bimonotone(cfg)) return 0;
    const Model model(cfg, search_candidates(cfg, bimonotone_only, options.conventions),
                      options.conventions.interaction);
    BigCount total = 0;
    for (const auto& r : drive(model, options, TriangulationLeaf{}, nullptr)) total += r.count;
    return total;
}

std::vector<Subdivision> list_full_triangulations(const PointConfiguration& cfg, bool bimonotone_only,
                                                  const EnumerationOptions& options) {
    std::vector<Subdivision> out;
    if (bimonotone_only && hull_blocks_bimonotone(cfg)) return out;
    const Model model(cfg, search_candidates(cfg, bimonotone_only, options.conventions),
                      options.conventions.interaction);
    std::vector<std::vector<Edge>> all;
    for (auto& r : drive(model, options, TriangulationLeaf{true, 0, {}}, nullptr))
        for (auto& e : r.found) all.push_back(std::move(e));
    std::sort(all.begin(), all.end());
    for (auto& e : all) out.push_back({cfg, std::move(e)});
    return out;
}

bool is_valid_subdivision(const PointConfiguration& cfg, std::span<const Edge> edges, bool bimonotone_only,
                          const Conventions& conventions) {
    if (bimonotone_only && hull_blocks_bimonotone(cfg)) return false;
    for (const auto& e : edges) {
        if (!cfg.index_of(e.a()) || !cfg.index_of(e.b())) return false;
        if (cfg.on_hull_boundary(e.a(), e.b())) return false;
        if (bimonotone_only && !is_bimonotone(e)) return false;
        if (conventions.candidates == CandidateRule::primitive_only && !e.is_primitive()) return false;
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (!compatible(edges[i], edges[j], conventions.interaction)) return false;
    for (const auto& p : cfg.points())
        if (!local_convexity_ok(cfg, edges, p)) return false;
    return true;
}

}  // namespace gridsub

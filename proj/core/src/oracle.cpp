#include "hpath/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace hpath {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) {
    return Mask{1} << v;
}

std::size_t popcount(Mask m) {
    return static_cast<std::size_t>(std::popcount(m));
}

std::vector<Vertex> vertices_of(Mask m) {
    std::vector<Vertex> out;
    while (m != 0) {
        out.push_back(static_cast<Vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

// All edges of one color as vertex masks, with per-vertex incidence lists.
struct EdgeTable {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<Mask> masks;
    std::vector<EdgeIndex> ranks;
    std::vector<std::vector<std::uint32_t>> incident;

    EdgeTable(const Coloring& coloring, Color color) : n(coloring.n()), k(coloring.k()), incident(n) {
        if (n > kOracleMaxVertices) {
            throw InputError("exact oracle supports at most 64 vertices");
        }
        for (EdgeIndex r = 0; r < coloring.edge_count(); ++r) {
            if (coloring.color_at(r) != color) {
                continue;
            }
            Mask m = 0;
            for (const Vertex v : edge_unrank(r, k)) {
                m |= bit(v);
            }
            const auto id = static_cast<std::uint32_t>(masks.size());
            masks.push_back(m);
            ranks.push_back(r);
            for (const Vertex v : vertices_of(m)) {
                incident[v].push_back(id);
            }
        }
    }
};

// Turns an edge-id sequence into the normalized canonical vertex sequence.
LoosePath normalized_path(const EdgeTable& t, const std::vector<std::uint32_t>& edges, Color color) {
    LoosePath path{t.k, {}, color};
    Mask incoming = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Mask e = t.masks[edges[i]];
        const Mask outgoing = i + 1 < edges.size() ? (e & t.masks[edges[i + 1]]) : 0;
        for (const Vertex v : vertices_of(e & ~incoming & ~outgoing)) {
            path.vertices.push_back(v);
        }
        if (outgoing != 0) {
            path.vertices.push_back(static_cast<Vertex>(std::countr_zero(outgoing)));
        }
        incoming = outgoing;
    }
    return path;
}

struct NodeBudget {
    std::uint64_t used = 0;
    std::uint64_t limit = 0;
    bool aborted = false;

    bool tick() {
        if (++used > limit) {
            aborted = true;
        }
        return !aborted;
    }
};

// Longest loose path of one color inside `avail`.
class LongestPath {
public:
    LongestPath(const EdgeTable& table, Mask avail, NodeBudget& budget)
        : t_(table), avail_(avail), budget_(budget), avail_count_(popcount(avail)) {}

    // Returns the vertex count of the longest proper path (0 if none).
    std::size_t run() {
        for (std::uint32_t id = 0; id < t_.masks.size() && !done(); ++id) {
            if ((t_.masks[id] & ~avail_) != 0) {
                continue;
            }
            stack_.assign(1, id);
            dfs(t_.masks[id], t_.masks[id], 0);
        }
        return best_;
    }

    const std::vector<std::uint32_t>& best_edges() const { return best_edges_; }
    Mask best_mask() const { return best_mask_; }

private:
    bool done() const { return budget_.aborted || best_ == avail_count_; }

    void dfs(Mask used, Mask last, Mask incoming) {
        if (!budget_.tick()) {
            return;
        }
        const std::size_t cov = popcount(used);
        if (cov > best_) {
            best_ = cov;
            best_edges_ = stack_;
            best_mask_ = used;
        }
        if (done()) {
            return;
        }
        const std::size_t rest = popcount(avail_ & ~used);
        if (cov + rest / (t_.k - 1) * (t_.k - 1) <= best_) {
            return;
        }
        for (const Vertex c : vertices_of(last & ~incoming)) {
            for (const std::uint32_t id : t_.incident[c]) {
                const Mask e = t_.masks[id];
                if ((e & ~avail_) != 0 || (e & used) != bit(c)) {
                    continue;
                }
                stack_.push_back(id);
                dfs(used | e, e, bit(c));
                stack_.pop_back();
                if (done()) {
                    return;
                }
            }
        }
    }

    const EdgeTable& t_;
    Mask avail_;
    NodeBudget& budget_;
    std::size_t avail_count_;
    std::size_t best_ = 0;
    std::vector<std::uint32_t> best_edges_;
    Mask best_mask_ = 0;
    std::vector<std::uint32_t> stack_;
};

struct BlueBest {
    std::size_t covered = 0;
    std::vector<std::uint32_t> edges;  // empty: degenerate pick of the lowest vertices
};

class MinUncoveredSearch {
public:
    MinUncoveredSearch(const Coloring& coloring, const OracleLimits& limits)
        : red_(coloring, Color::Red), blue_(coloring, Color::Blue), n_(coloring.n()),
          k_(coloring.k()), all_(n_ == 64 ? ~Mask{0} : (bit(static_cast<Vertex>(n_)) - 1)) {
        budget_.limit = limits.max_nodes;
    }

    MinUncoveredResult run() {
        MinUncoveredResult result;
        if (budget_.limit == 0) {
            result.exact = false;
            return result;
        }
        // Red side degenerate: best blue on everything plus up to k-1 more vertices.
        {
            const BlueBest b = blue_best(all_);
            if (budget_.aborted) {
                return finish();
            }
            const Mask blue_mask = blue_mask_of(b, all_);
            const Mask red_mask = lowest(all_ & ~blue_mask, k_ - 1);
            consider(popcount(red_mask) + b.covered, {}, red_mask, b, blue_mask);
        }
        for (std::uint32_t id = 0; id < red_.masks.size() && !done(); ++id) {
            stack_.assign(1, id);
            red_dfs(red_.masks[id], red_.masks[id], 0);
        }
        return finish();
    }

private:
    bool done() const { return budget_.aborted || best_cov_ == n_; }

    static Mask lowest(Mask m, std::size_t count) {
        Mask out = 0;
        for (std::size_t i = 0; i < count && m != 0; ++i) {
            const Mask low = m & (~m + 1);
            out |= low;
            m &= m - 1;
        }
        return out;
    }

    Mask blue_mask_of(const BlueBest& b, Mask avail) const {
        if (b.edges.empty()) {
            return lowest(avail, b.covered);
        }
        Mask m = 0;
        for (const std::uint32_t id : b.edges) {
            m |= blue_.masks[id];
        }
        return m;
    }

    BlueBest blue_best(Mask avail) {
        if (const auto it = memo_.find(avail); it != memo_.end()) {
            return it->second;
        }
        LongestPath search(blue_, avail, budget_);
        const std::size_t longest = search.run();
        BlueBest b;
        const std::size_t degenerate = std::min(k_ - 1, popcount(avail));
        if (longest > degenerate) {
            b.covered = longest;
            b.edges = search.best_edges();
        } else {
            b.covered = degenerate;
        }
        if (!budget_.aborted) {
            memo_.emplace(avail, b);
        }
        return b;
    }

    void consider(std::size_t covered, const std::vector<std::uint32_t>& red_edges, Mask red_mask,
                  const BlueBest& b, Mask blue_mask) {
        if (covered <= best_cov_ && have_best_) {
            return;
        }
        have_best_ = true;
        best_cov_ = covered;
        CoverageWitness w;
        if (red_edges.empty()) {
            w.red = LoosePath{k_, vertices_of(red_mask), std::nullopt};
        } else {
            w.red = normalized_path(red_, red_edges, Color::Red);
        }
        if (b.edges.empty()) {
            w.blue = LoosePath{k_, vertices_of(blue_mask), std::nullopt};
        } else {
            w.blue = normalized_path(blue_, b.edges, Color::Blue);
        }
        w.uncovered = n_ - covered;
        best_ = std::move(w);
    }

    void red_dfs(Mask used, Mask last, Mask incoming) {
        if (!budget_.tick()) {
            return;
        }
        const Mask rest = all_ & ~used;
        // Bound: even a perfect blue side cannot beat the incumbent.
        if (popcount(used) + popcount(rest) > best_cov_ || !have_best_) {
            const BlueBest b = blue_best(rest);
            if (budget_.aborted) {
                return;
            }
            consider(popcount(used) + b.covered, stack_, used, b, blue_mask_of(b, rest));
        }
        if (done()) {
            return;
        }
        for (const Vertex c : vertices_of(last & ~incoming)) {
            for (const std::uint32_t id : red_.incident[c]) {
                const Mask e = red_.masks[id];
                if ((e & used) != bit(c)) {
                    continue;
                }
                stack_.push_back(id);
                red_dfs(used | e, e, bit(c));
                stack_.pop_back();
                if (done()) {
                    return;
                }
            }
        }
    }

    MinUncoveredResult finish() {
        MinUncoveredResult result;
        result.nodes = budget_.used;
        if (have_best_) {
            result.best = best_;
        }
        if (budget_.aborted && best_cov_ != n_) {
            result.exact = false;
            result.lower_bound = 0;
            return result;
        }
        result.exact = true;
        result.value = n_ - best_cov_;
        result.lower_bound = result.value;
        return result;
    }

    EdgeTable red_;
    EdgeTable blue_;
    std::size_t n_;
    std::size_t k_;
    Mask all_;
    NodeBudget budget_;
    std::unordered_map<Mask, BlueBest> memo_;
    std::vector<std::uint32_t> stack_;
    bool have_best_ = false;
    std::size_t best_cov_ = 0;
    CoverageWitness best_;
};

} // namespace

MinUncoveredResult min_uncovered_exact(const Coloring& coloring, const OracleLimits& limits) {
    return MinUncoveredSearch(coloring, limits).run();
}

void enumerate_monochromatic_paths(const Coloring& coloring, Color color, std::size_t max_len,
                                   const std::function<void(const LoosePath&)>& emit) {
    const EdgeTable t(coloring, color);
    std::vector<std::uint32_t> stack;

    const auto canonical = [&]() {
        // Emit one orientation: the rank sequence must not exceed its reversal.
        for (std::size_t i = 0, j = stack.size() - 1; i < j; ++i, --j) {
            if (t.ranks[stack[i]] != t.ranks[stack[j]]) {
                return t.ranks[stack[i]] < t.ranks[stack[j]];
            }
        }
        return true;
    };

    const std::function<void(Mask, Mask, Mask)> dfs = [&](Mask used, Mask last, Mask incoming) {
        if (canonical()) {
            emit(normalized_path(t, stack, color));
        }
        if (stack.size() >= max_len) {
            return;
        }
        for (const Vertex c : vertices_of(last & ~incoming)) {
            for (const std::uint32_t id : t.incident[c]) {
                const Mask e = t.masks[id];
                if ((e & used) != bit(c)) {
                    continue;
                }
                stack.push_back(id);
                dfs(used | e, e, bit(c));
                stack.pop_back();
            }
        }
    };

    if (max_len == 0) {
        return;
    }
    for (std::uint32_t id = 0; id < t.masks.size(); ++id) {
        stack.assign(1, id);
        dfs(t.masks[id], t.masks[id], 0);
    }
}

std::vector<LoosePath> monochromatic_paths(const Coloring& coloring, Color color, std::size_t max_len) {
    std::vector<LoosePath> out;
    enumerate_monochromatic_paths(coloring, color, max_len, [&out](const LoosePath& p) { out.push_back(p); });
    return out;
}

} // namespace hpath

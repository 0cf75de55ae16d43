#include "hpath/partitioner.hpp"

#include <algorithm>
#include <array>

namespace hpath {

namespace {

struct RuleName {
    Rule rule;
    std::string_view name;
};

constexpr std::array<RuleName, 11> kRuleNames{{
    {Rule::GreedyExtend, "GreedyExtend"},
    {Rule::DegenerateAbsorb, "DegenerateAbsorb"},
    {Rule::ClaimExtend, "ClaimExtend"},
    {Rule::ClaimTwoEdge, "ClaimTwoEdge"},
    {Rule::Case1Finish, "Case1Finish"},
    {Rule::Case2Query, "Case2Query"},
    {Rule::SingleEdgeRebalance, "SingleEdgeRebalance"},
    {Rule::Deduction, "Ded"},
    {Rule::FinalComposite, "FinalComposite"},
    {Rule::FallbackExchange, "FallbackExchange"},
    {Rule::GraphCaseStep, "GraphCaseStep"},
}};

} // namespace

std::string_view to_string(Rule rule) noexcept {
    for (const auto& entry : kRuleNames) {
        if (entry.rule == rule) {
            return entry.name;
        }
    }
    return "?";
}

std::optional<Rule> parse_rule(std::string_view name) noexcept {
    for (const auto& entry : kRuleNames) {
        if (entry.name == name) {
            return entry.rule;
        }
    }
    return std::nullopt;
}

std::string_view to_string(PathSource source) noexcept {
    switch (source) {
    case PathSource::Red:
        return "red";
    case PathSource::Blue:
        return "blue";
    case PathSource::Empty:
        break;
    }
    return "empty";
}

std::optional<PathSource> parse_path_source(std::string_view name) noexcept {
    if (name == "red") {
        return PathSource::Red;
    }
    if (name == "blue") {
        return PathSource::Blue;
    }
    if (name == "empty") {
        return PathSource::Empty;
    }
    return std::nullopt;
}

std::string Move::label() const {
    std::string out(to_string(rule));
    if (!detail.empty()) {
        out += "(" + detail + ")";
    }
    return out;
}

std::optional<std::pair<Rule, std::string>> parse_move_label(std::string_view label) {
    std::string_view name = label;
    std::string detail;
    if (const auto open = label.find('('); open != std::string_view::npos) {
        if (label.back() != ')') {
            return std::nullopt;
        }
        name = label.substr(0, open);
        detail = std::string(label.substr(open + 1, label.size() - open - 2));
    }
    const auto rule = parse_rule(name);
    if (!rule) {
        return std::nullopt;
    }
    return std::make_pair(*rule, detail);
}

PartitionState::PartitionState(const Coloring& coloring, std::size_t active_n)
    : coloring_(&coloring), active_n_(active_n) {
    if (active_n > coloring.n()) {
        throw InputError("active vertex count exceeds n");
    }
    red_.k = coloring.k();
    blue_.k = coloring.k();
    uncovered_.resize(active_n);
    for (std::size_t v = 0; v < active_n; ++v) {
        uncovered_[v] = static_cast<Vertex>(v);
    }
}

PartitionState PartitionState::from_paths(const Coloring& coloring, std::size_t active_n, LoosePath red,
                                          LoosePath blue) {
    PartitionState st(coloring, active_n);
    if (!red.degenerate()) {
        red.color = Color::Red;
    }
    if (!blue.degenerate()) {
        blue.color = Color::Blue;
    }
    std::vector<bool> used(active_n, false);
    for (const LoosePath* p : {&red, &blue}) {
        if (const PathCheck c = check_path(*p, coloring); !c) {
            throw InputError("invalid path: " + c.reason);
        }
        for (const Vertex v : p->vertices) {
            if (v >= active_n || used[v]) {
                throw InputError("paths overlap or leave the active range");
            }
            used[v] = true;
        }
    }
    st.commit(std::move(red), std::move(blue));
    return st;
}

Potential PartitionState::potential() const noexcept {
    const std::size_t a = red_.size();
    const std::size_t b = blue_.size();
    return Potential{a + b, a > b ? a - b : b - a};
}

void PartitionState::commit(LoosePath red, LoosePath blue) {
    red_ = std::move(red);
    blue_ = std::move(blue);
    std::vector<bool> used(active_n_, false);
    for (const Vertex v : red_.vertices) {
        used[v] = true;
    }
    for (const Vertex v : blue_.vertices) {
        used[v] = true;
    }
    uncovered_.clear();
    for (std::size_t v = 0; v < active_n_; ++v) {
        if (!used[v]) {
            uncovered_.push_back(static_cast<Vertex>(v));
        }
    }
}

namespace {

// Applies one PathEdit; returns an error message or empty on success.
std::string build_path(const PartitionState& state, const PathEdit& edit, Color slot, LoosePath& out) {
    const std::size_t k = state.k();
    out.k = k;
    out.color.reset();
    std::vector<Vertex>& seq = out.vertices;
    switch (edit.source) {
    case PathSource::Red:
        seq = state.red().vertices;
        break;
    case PathSource::Blue:
        seq = state.blue().vertices;
        break;
    case PathSource::Empty:
        seq.clear();
        break;
    }

    const auto drop = [&](std::size_t edges) { return std::min(edges * (k - 1), seq.size()); };
    seq.erase(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(drop(edit.trim_front)));
    seq.resize(seq.size() - drop(edit.trim_back));
    if (edit.reverse) {
        std::reverse(seq.begin(), seq.end());
    }
    seq.insert(seq.end(), edit.absorb.begin(), edit.absorb.end());

    for (const EdgeAppend& app : edit.appends) {
        if (seq.empty()) {
            if (app.fresh.size() != k - 1) {
                return "edge append needs k-1 fresh vertices";
            }
            seq.push_back(app.attach);
            seq.insert(seq.end(), app.fresh.begin(), app.fresh.end());
            continue;
        }
        if (seq.size() < k) {
            if (std::find(seq.begin(), seq.end(), app.attach) == seq.end()) {
                return "attach vertex not in degenerate path";
            }
            if (seq.size() + app.fresh.size() != k) {
                return "degenerate path plus fresh vertices is not an edge";
            }
            seq.insert(seq.end(), app.fresh.begin(), app.fresh.end());
            continue;
        }
        if ((seq.size() - 1) % (k - 1) != 0) {
            return "append to a path of non-canonical length";
        }
        if (app.fresh.size() != k - 1) {
            return "edge append needs k-1 fresh vertices";
        }
        // Free vertices of the last edge: everything after its first slot,
        // plus the first slot when the path has a single edge.
        const std::size_t last_start = seq.size() - k;
        const std::size_t free_start = seq.size() == k ? 0 : last_start + 1;
        const auto it = std::find(seq.begin() + static_cast<std::ptrdiff_t>(free_start), seq.end(), app.attach);
        if (it == seq.end()) {
            return "attach vertex " + std::to_string(app.attach) + " is not a free vertex of the last edge";
        }
        std::iter_swap(it, seq.end() - 1);
        seq.insert(seq.end(), app.fresh.begin(), app.fresh.end());
    }
    if (!out.degenerate()) {
        out.color = slot;
    }
    return {};
}

} // namespace

SimulatedMove simulate_move(const PartitionState& state, const Move& move) {
    SimulatedMove sim;
    const auto fail = [&sim](std::string why) {
        sim.ok = false;
        sim.reason = std::move(why);
        return sim;
    };
    if (std::string err = build_path(state, move.red, Color::Red, sim.red); !err.empty()) {
        return fail("red: " + err);
    }
    if (std::string err = build_path(state, move.blue, Color::Blue, sim.blue); !err.empty()) {
        return fail("blue: " + err);
    }
    std::vector<bool> used(state.active_n(), false);
    for (const LoosePath* p : {&sim.red, &sim.blue}) {
        for (const Vertex v : p->vertices) {
            if (v >= state.active_n()) {
                return fail("vertex " + std::to_string(v) + " outside the active range");
            }
            if (used[v]) {
                return fail("not disjoint");
            }
            used[v] = true;
        }
    }
    if (const PathCheck c = check_path(sim.red, state.coloring()); !c) {
        return fail("red: " + c.reason);
    }
    if (const PathCheck c = check_path(sim.blue, state.coloring()); !c) {
        return fail("blue: " + c.reason);
    }
    const std::size_t a = sim.red.size();
    const std::size_t b = sim.blue.size();
    sim.potential = Potential{a + b, a > b ? a - b : b - a};
    if (!(sim.potential > state.potential())) {
        return fail("no progress");
    }
    sim.ok = true;
    return sim;
}

MoveVerdict validate_and_apply(PartitionState& state, const Move& move, bool record) {
    SimulatedMove sim = simulate_move(state, move);
    if (!sim.ok) {
        return MoveVerdict{false, move.label() + ": " + sim.reason};
    }
    state.commit(std::move(sim.red), std::move(sim.blue));
    ++state.moves_applied_;
    if (record) {
        state.trace_.push_back(TraceEntry{move, sim.potential});
    }
    return MoveVerdict{true, {}};
}

} // namespace hpath

#include "hpath/partitioner.hpp"
#include "hpath/validate.hpp"

#include <sstream>
#include <stdexcept>

namespace hpath {

std::string_view to_string(SolveStatus status) noexcept {
    switch (status) {
    case SolveStatus::Perfect:
        return "Perfect";
    case SolveStatus::WithinBound:
        return "WithinBound";
    case SolveStatus::Counterexample:
        break;
    }
    return "Counterexample";
}

std::optional<SolveStatus> parse_solve_status(std::string_view name) noexcept {
    for (const SolveStatus s : {SolveStatus::Perfect, SolveStatus::WithinBound, SolveStatus::Counterexample}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

namespace {

std::string describe(const PartitionState& st) {
    std::ostringstream out;
    const auto dump = [&out](const char* name, const std::vector<Vertex>& vs) {
        out << name << "=[";
        for (std::size_t i = 0; i < vs.size(); ++i) {
            out << (i ? "," : "") << vs[i];
        }
        out << "]";
    };
    dump("red", st.red().vertices);
    out << ' ';
    dump("blue", st.blue().vertices);
    out << ' ';
    dump("W", st.uncovered());
    return out.str();
}

PartitionResult finish(const PartitionState& st, SolveStatus status, std::size_t n) {
    PartitionResult result;
    result.red = st.red();
    result.blue = st.blue();
    for (std::size_t v = st.active_n(); v < n; ++v) {
        result.leftover.push_back(static_cast<Vertex>(v));
    }
    result.moves = st.moves_applied();
    result.trace = st.trace();
    if (status != SolveStatus::Counterexample) {
        status = result.leftover.empty() ? SolveStatus::Perfect : SolveStatus::WithinBound;
    }
    result.status = status;
    return result;
}

} // namespace

PartitionResult solve(const Coloring& coloring, const SolverConfig& config) {
    const std::size_t n = coloring.n();
    const std::size_t k = coloring.k();
    if (k == 2) {
        return solve_graph_case(coloring, config);
    }
    if (n < k) {
        // No edges at all: the first path takes everything as a degenerate set.
        PartitionResult result;
        result.red.k = k;
        result.blue.k = k;
        for (std::size_t v = 0; v < n; ++v) {
            result.red.vertices.push_back(static_cast<Vertex>(v));
        }
        result.status = SolveStatus::Perfect;
        return result;
    }

    const std::size_t active = n - reduction_remainder(n, k);
    PartitionState st(coloring, active);
    const std::size_t cap = (n + 1) * (n + 1);
    std::size_t fallback_hits = 0;
    std::vector<std::string> diagnostics;

    while (!st.uncovered().empty()) {
        if (st.moves_applied() >= cap) {
            throw std::logic_error("solve: iteration bound (n+1)^2 exceeded at " + describe(st));
        }
        std::vector<std::string> rejected;
        bool applied = false;
        const auto attempt = [&](const std::optional<Move>& move) {
            if (applied || !move) {
                return;
            }
            const MoveVerdict verdict = validate_and_apply(st, *move, config.record_trace);
            if (verdict.accepted) {
                applied = true;
            } else {
                rejected.push_back(verdict.reason);
                diagnostics.push_back("rejected catalog move " + verdict.reason + " at " + describe(st));
            }
        };

        attempt(phase_greedy(st));
        if (!applied && claim_shape(st)) {
            attempt(phase_degenerate_claim(st));
        }
        if (!applied && proper_shape(st)) {
            attempt(phase_proper_main(st));
        }
        if (!applied && config.enable_fallback) {
            const std::string before = describe(st);
            attempt(phase_fallback(st, config.fallback_budget));
            if (applied) {
                ++fallback_hits;
                diagnostics.push_back("fallback move applied at " + before +
                                      " after the catalog chain through deduction (vi) produced no accepted move");
            }
        }
        if (!applied) {
            PartitionResult result = finish(st, SolveStatus::Counterexample, n);
            result.counterexample = CounterexampleDump{st.red(), st.blue(), st.uncovered(), std::move(rejected)};
            result.fallback_hits = fallback_hits;
            result.diagnostics = std::move(diagnostics);
            return result;
        }
    }

    PartitionResult result = finish(st, SolveStatus::Perfect, n);
    result.fallback_hits = fallback_hits;
    result.diagnostics = std::move(diagnostics);
    return result;
}

} // namespace hpath

#include "hpath/partitioner.hpp"

#include <stdexcept>

namespace hpath {

namespace {

Move step(std::string detail) {
    Move m;
    m.rule = Rule::GraphCaseStep;
    m.detail = std::move(detail);
    return m;
}

} // namespace

PartitionResult solve_graph_case(const Coloring& coloring, const SolverConfig& config) {
    if (coloring.k() != 2) {
        throw InputError("solve_graph_case needs k = 2");
    }
    const std::size_t n = coloring.n();
    PartitionState st(coloring, n);

    // Invariant: red and blue partition {0..v-1}. Vertex v joins at an end:
    // extend whichever path its end edge allows; otherwise the edge between
    // the two ends decides which path takes the other's end vertex first.
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = static_cast<Vertex>(i);
        const LoosePath& red = st.red();
        const LoosePath& blue = st.blue();
        Move m;
        if (red.empty()) {
            m = step("red-start");
            m.red = PathEdit::fresh_set({v});
        } else if (coloring.color_of(std::vector<Vertex>{red.vertices.back(), v}) == Color::Red) {
            m = step("red-extend");
            m.red.appends = {EdgeAppend{red.vertices.back(), {v}}};
        } else if (blue.empty()) {
            m = step("blue-start");
            m.blue = PathEdit::fresh_set({v});
        } else if (coloring.color_of(std::vector<Vertex>{blue.vertices.back(), v}) == Color::Blue) {
            m = step("blue-extend");
            m.blue.appends = {EdgeAppend{blue.vertices.back(), {v}}};
        } else {
            const Vertex r = red.vertices.back();
            const Vertex b = blue.vertices.back();
            if (coloring.color_of(std::vector<Vertex>{r, b}) == Color::Red) {
                // r-b red and b-v red: red takes b then v.
                m = step("splice-red");
                m.red.appends = {EdgeAppend{r, {b}}, EdgeAppend{b, {v}}};
                m.blue.trim_back = 1;
            } else {
                // b-r blue and r-v blue: blue takes r then v.
                m = step("splice-blue");
                m.blue.appends = {EdgeAppend{b, {r}}, EdgeAppend{r, {v}}};
                m.red.trim_back = 1;
            }
        }
        const MoveVerdict verdict = validate_and_apply(st, m, config.record_trace);
        if (!verdict.accepted) {
            throw std::logic_error("graph case step rejected: " + verdict.reason);
        }
    }

    PartitionResult result;
    result.red = st.red();
    result.blue = st.blue();
    result.moves = st.moves_applied();
    result.trace = st.trace();
    result.status = SolveStatus::Perfect;
    return result;
}

} // namespace hpath

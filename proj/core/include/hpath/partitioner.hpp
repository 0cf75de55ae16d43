#ifndef HPATH_PARTITIONER_HPP
#define HPATH_PARTITIONER_HPP

#include "hpath/coloring.hpp"
#include "hpath/loose_path.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hpath {

// ---------------------------------------------------------------------------
// Moves
// ---------------------------------------------------------------------------

enum class Rule : std::uint8_t {
    GreedyExtend,
    DegenerateAbsorb,
    ClaimExtend,
    ClaimTwoEdge,
    Case1Finish,
    Case2Query,
    SingleEdgeRebalance,
    Deduction,
    FinalComposite,
    FallbackExchange,
    GraphCaseStep,
};

std::string_view to_string(Rule rule) noexcept;
std::optional<Rule> parse_rule(std::string_view name) noexcept;

// Where an edited path starts from before trims and appends.
enum class PathSource : std::uint8_t { Empty, Red, Blue };

std::string_view to_string(PathSource source) noexcept;
std::optional<PathSource> parse_path_source(std::string_view name) noexcept;

constexpr PathSource source_of(Color c) noexcept {
    return c == Color::Red ? PathSource::Red : PathSource::Blue;
}

// One edge appended at the back of a path. On a proper path `attach` must be
// a free vertex of the last edge; it is swapped to the end and `fresh` (k-1
// vertices) follows. On a degenerate path D, the new edge is D + fresh and
// `attach` must belong to D. On an empty path the sequence becomes attach, fresh.
struct EdgeAppend {
    Vertex attach = 0;
    std::vector<Vertex> fresh;

    friend bool operator==(const EdgeAppend&, const EdgeAppend&) = default;
};

// Edits applied in order: take `source`, drop trim_front / trim_back edges
// ((k-1) vertices each, clamped), optionally reverse, push `absorb` vertices
// verbatim, then perform `appends`.
struct PathEdit {
    PathSource source = PathSource::Empty;
    std::size_t trim_front = 0;
    std::size_t trim_back = 0;
    bool reverse = false;
    std::vector<Vertex> absorb;
    std::vector<EdgeAppend> appends;

    static PathEdit keep(PathSource s) { return PathEdit{s, 0, 0, false, {}, {}}; }
    static PathEdit fresh_set(std::vector<Vertex> vertices) {
        return PathEdit{PathSource::Empty, 0, 0, false, std::move(vertices), {}};
    }

    friend bool operator==(const PathEdit&, const PathEdit&) = default;
};

struct Move {
    Rule rule = Rule::GreedyExtend;
    std::string detail;  // sub-label, e.g. "iii" for Ded(iii) or "f3" for Case2Query(f3)
    PathEdit red = PathEdit::keep(PathSource::Red);
    PathEdit blue = PathEdit::keep(PathSource::Blue);

    // "Ded(iii)", "Case2Query(f3)", "GreedyExtend", ...
    std::string label() const;

    friend bool operator==(const Move&, const Move&) = default;
};

// Inverse of Move::label(); nullopt on an unknown label.
std::optional<std::pair<Rule, std::string>> parse_move_label(std::string_view label);

// ---------------------------------------------------------------------------
// State
// ---------------------------------------------------------------------------

// Lexicographic: covered vertices first, then |V(A)| - |V(B)|.
struct Potential {
    std::size_t covered = 0;
    std::size_t diff = 0;

    friend auto operator<=>(const Potential&, const Potential&) = default;
};

struct TraceEntry {
    Move move;
    Potential after;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct MoveVerdict {
    bool accepted = false;
    std::string reason;
};

/// Red path, blue path and the uncovered set W over the active vertices
/// {0, ..., active_n - 1}. Role A is the longer path (ties: red), B the other.
class PartitionState {
public:
    PartitionState(const Coloring& coloring, std::size_t active_n);

    // State holding the given paths; throws InputError unless they are valid,
    // disjoint and inside the active range.
    static PartitionState from_paths(const Coloring& coloring, std::size_t active_n, LoosePath red, LoosePath blue);

    const Coloring& coloring() const noexcept { return *coloring_; }
    std::size_t k() const noexcept { return coloring_->k(); }
    std::size_t active_n() const noexcept { return active_n_; }

    const LoosePath& red() const noexcept { return red_; }
    const LoosePath& blue() const noexcept { return blue_; }
    const LoosePath& path(Color c) const noexcept { return c == Color::Red ? red_ : blue_; }

    // Sorted ascending.
    const std::vector<Vertex>& uncovered() const noexcept { return uncovered_; }

    Potential potential() const noexcept;

    Color color_a() const noexcept { return blue_.size() > red_.size() ? Color::Blue : Color::Red; }
    Color color_b() const noexcept { return complement(color_a()); }
    const LoosePath& path_a() const noexcept { return path(color_a()); }
    const LoosePath& path_b() const noexcept { return path(color_b()); }

    Color query(std::span<const Vertex> edge) const { return coloring_->color_of(edge); }

    const std::vector<TraceEntry>& trace() const noexcept { return trace_; }
    std::size_t moves_applied() const noexcept { return moves_applied_; }

private:
    friend MoveVerdict validate_and_apply(PartitionState& state, const Move& move, bool record);

    void commit(LoosePath red, LoosePath blue);

    const Coloring* coloring_;
    std::size_t active_n_;
    LoosePath red_;
    LoosePath blue_;
    std::vector<Vertex> uncovered_;
    std::vector<TraceEntry> trace_;
    std::size_t moves_applied_ = 0;
};

// Result of replaying a move's edits without committing.
struct SimulatedMove {
    bool ok = false;
    std::string reason;
    LoosePath red;
    LoosePath blue;
    Potential potential;
};

SimulatedMove simulate_move(const PartitionState& state, const Move& move);

/// Commits `move` only when both resulting paths are valid (monochromatic or
/// degenerate), vertex-disjoint, inside the active range, and the potential
/// strictly increases. Accepted moves are appended to the trace when `record`.
MoveVerdict validate_and_apply(PartitionState& state, const Move& move, bool record = true);

// ---------------------------------------------------------------------------
// Phases
// ---------------------------------------------------------------------------

// Coverage-increasing extensions: grow a proper path at either end from W,
// start an empty path inside W, or absorb W into a short degenerate path.
std::optional<Move> phase_greedy(const PartitionState& state);

// Shape: A proper, B degenerate with exactly k-1 vertices, W nonempty.
bool claim_shape(const PartitionState& state) noexcept;
// Shape: A and B proper, W nonempty.
bool proper_shape(const PartitionState& state) noexcept;

// Case analysis for a degenerate B of k-1 vertices. Always returns a move;
// throws std::logic_error when called outside claim_shape.
Move phase_degenerate_claim(const PartitionState& state);

// Query chain over the exchange edges for two proper paths, ending in the
// composite three-edge extension of B. Throws std::logic_error outside proper_shape.
Move phase_proper_main(const PartitionState& state);

// Bounded exchange search: trim up to two edges at each end of each path and
// regrow from the freed vertices plus W. `budget` caps color queries.
std::optional<Move> phase_fallback(const PartitionState& state, std::size_t budget);

// ---------------------------------------------------------------------------
// Solver
// ---------------------------------------------------------------------------

enum class SolveStatus : std::uint8_t { Perfect, WithinBound, Counterexample };

std::string_view to_string(SolveStatus status) noexcept;
std::optional<SolveStatus> parse_solve_status(std::string_view name) noexcept;

struct SolverConfig {
    bool record_trace = true;
    bool enable_fallback = true;
    std::size_t fallback_budget = 200000;
};

struct CounterexampleDump {
    LoosePath red;
    LoosePath blue;
    std::vector<Vertex> uncovered;
    std::vector<std::string> rejected;
};

struct PartitionResult {
    LoosePath red;
    LoosePath blue;
    std::vector<Vertex> leftover;
    std::size_t moves = 0;
    std::vector<TraceEntry> trace;
    SolveStatus status = SolveStatus::Perfect;
    std::size_t fallback_hits = 0;
    std::vector<std::string> diagnostics;
    std::optional<CounterexampleDump> counterexample;
};

/// Partitions the vertices into a red and a blue loose path. The
/// (n-2) mod (k-1) highest vertices are set aside; the rest is covered
/// exactly by local search over the move catalog. k = 2 goes to
/// solve_graph_case. Throws std::logic_error if the iteration bound
/// (n+1)^2 is exceeded.
PartitionResult solve(const Coloring& coloring, const SolverConfig& config = {});

// Red path + blue path through all vertices of a 2-colored complete graph,
// built by inserting vertices one at a time.
PartitionResult solve_graph_case(const Coloring& coloring, const SolverConfig& config = {});

} // namespace hpath

#endif // HPATH_PARTITIONER_HPP

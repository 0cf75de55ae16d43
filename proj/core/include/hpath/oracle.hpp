#ifndef HPATH_ORACLE_HPP
#define HPATH_ORACLE_HPP

#include "hpath/coloring.hpp"
#include "hpath/generators.hpp"
#include "hpath/loose_path.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace hpath {

// Exact searches address vertices through 64-bit masks.
inline constexpr std::size_t kOracleMaxVertices = 64;

struct OracleLimits {
    std::uint64_t max_nodes = 200'000'000;
};

struct CoverageWitness {
    LoosePath red;
    LoosePath blue;
    std::size_t uncovered = 0;
};

/// Outcome of an exhaustive minimum search. When `exact` is false the node
/// limit was hit: the true minimum is only known to be >= lower_bound, and
/// `best` (if any) is the best pair seen so far.
struct MinUncoveredResult {
    bool exact = false;
    std::size_t value = 0;        // the minimum when exact
    std::size_t lower_bound = 0;  // proven bound when not exact
    std::optional<CoverageWitness> best;
    std::uint64_t nodes = 0;
};

// Minimum number of vertices left uncovered by a disjoint (red path, blue
// path) pair, degenerate paths allowed. Depth-first over red paths with the
// best blue path on each remainder memoized by vertex mask.
MinUncoveredResult min_uncovered_exact(const Coloring& coloring, const OracleLimits& limits = {});

// Profile of the best pair for the extremal coloring.
struct ExtremalProfile {
    std::size_t red_edges = 0;   // 0: red side is degenerate
    std::size_t blue_edges = 0;  // 0: blue side is degenerate
    std::size_t covered = 0;
};

// Exact minimum uncovered for extremal_coloring(k, m), by enumerating path
// length profiles instead of paths.
std::size_t extremal_min_uncovered(std::size_t k, std::size_t m);
ExtremalProfile extremal_best_profile(std::size_t k, std::size_t m);

// Every loose path of `color` with 1..max_len edges, once per edge sequence up
// to reversal. Each window is lowest-index normalized: non-connector vertices
// ascending, connectors at window boundaries.
void enumerate_monochromatic_paths(const Coloring& coloring, Color color, std::size_t max_len,
                                   const std::function<void(const LoosePath&)>& emit);

std::vector<LoosePath> monochromatic_paths(const Coloring& coloring, Color color, std::size_t max_len);

} // namespace hpath

#endif // HPATH_ORACLE_HPP

#ifndef HPATH_LOOSE_PATH_HPP
#define HPATH_LOOSE_PATH_HPP

#include "hpath/coloring.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hpath {

/// A loose path in canonical form: one vertex sequence whose edges are the
/// windows vertices[i(k-1) .. i(k-1)+k). Consecutive windows overlap in exactly
/// the connector vertex at position i(k-1); distinctness of the sequence makes
/// non-consecutive windows disjoint.
///
/// A sequence shorter than k is a degenerate path: it has no edges and may be
/// claimed as either color, so `color` may be empty.
struct LoosePath {
    std::size_t k = 2;
    std::vector<Vertex> vertices;
    std::optional<Color> color;

    bool empty() const noexcept { return vertices.empty(); }
    std::size_t size() const noexcept { return vertices.size(); }
    bool degenerate() const noexcept { return vertices.size() < k; }

    // True when the length is below k or of the form l(k-1)+1, l >= 1.
    bool has_canonical_length() const noexcept;

    // Number of edge windows; 0 for degenerate paths or non-canonical lengths.
    std::size_t edge_count() const noexcept;

    std::span<const Vertex> edge(std::size_t i) const noexcept {
        return std::span<const Vertex>(vertices).subspan(i * (k - 1), k);
    }

    // Edge windows copied out, in path order.
    std::vector<std::vector<Vertex>> edges() const;

    friend bool operator==(const LoosePath&, const LoosePath&) = default;
};

struct PathCheck {
    bool ok = true;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
    static PathCheck fail(std::string why) { return PathCheck{false, std::move(why)}; }
};

// Structure + coloring check: distinct in-range vertices, canonical length,
// and every edge window carries `path.color`.
PathCheck check_path(const LoosePath& path, const Coloring& coloring);

bool path_is_valid(const LoosePath& path, const Coloring& coloring);

// Checks a raw edge list against the loose-path definition: every edge has k
// distinct vertices, consecutive edges meet in exactly one vertex, all other
// pairs are disjoint.
PathCheck check_edge_sequence(std::span<const std::vector<Vertex>> edges, std::size_t k);

// Rebuilds the canonical vertex sequence from an edge list in path order.
// Throws InputError when the edges do not form a loose path.
LoosePath path_from_edges(std::span<const std::vector<Vertex>> edges, std::size_t k, std::optional<Color> color);

} // namespace hpath

#endif // HPATH_LOOSE_PATH_HPP

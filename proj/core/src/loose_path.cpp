#include "hpath/loose_path.hpp"

#include <algorithm>
#include <unordered_set>

namespace hpath {

bool LoosePath::has_canonical_length() const noexcept {
    const std::size_t len = vertices.size();
    return len < k || (len - 1) % (k - 1) == 0;
}

std::size_t LoosePath::edge_count() const noexcept {
    if (degenerate() || !has_canonical_length()) {
        return 0;
    }
    return (vertices.size() - 1) / (k - 1);
}

std::vector<std::vector<Vertex>> LoosePath::edges() const {
    std::vector<std::vector<Vertex>> out;
    const std::size_t count = edge_count();
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto e = edge(i);
        out.emplace_back(e.begin(), e.end());
    }
    return out;
}

PathCheck check_path(const LoosePath& path, const Coloring& coloring) {
    if (path.k != coloring.k()) {
        return PathCheck::fail("path uniformity differs from coloring");
    }
    std::vector<bool> seen(coloring.n(), false);
    for (const Vertex v : path.vertices) {
        if (v >= coloring.n()) {
            return PathCheck::fail("vertex " + std::to_string(v) + " out of range");
        }
        if (seen[v]) {
            return PathCheck::fail("vertex " + std::to_string(v) + " repeated");
        }
        seen[v] = true;
    }
    if (!path.has_canonical_length()) {
        return PathCheck::fail("length " + std::to_string(path.size()) + " is not l(k-1)+1 and not below k");
    }
    if (path.degenerate()) {
        return {};
    }
    if (!path.color) {
        return PathCheck::fail("non-degenerate path has no color");
    }
    for (std::size_t i = 0; i < path.edge_count(); ++i) {
        if (coloring.color_of(path.edge(i)) != *path.color) {
            return PathCheck::fail("edge " + std::to_string(i) + " is not " + std::string(to_string(*path.color)));
        }
    }
    return {};
}

bool path_is_valid(const LoosePath& path, const Coloring& coloring) {
    return check_path(path, coloring).ok;
}

namespace {

std::size_t intersection_size(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t count = 0;
    for (const Vertex v : a) {
        count += static_cast<std::size_t>(std::count(b.begin(), b.end(), v));
    }
    return count;
}

} // namespace

PathCheck check_edge_sequence(std::span<const std::vector<Vertex>> edges, std::size_t k) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].size() != k) {
            return PathCheck::fail("edge " + std::to_string(i) + " does not have k vertices");
        }
        std::unordered_set<Vertex> distinct(edges[i].begin(), edges[i].end());
        if (distinct.size() != k) {
            return PathCheck::fail("edge " + std::to_string(i) + " repeats a vertex");
        }
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const std::size_t shared = intersection_size(edges[i], edges[j]);
            const std::size_t expected = j == i + 1 ? 1 : 0;
            if (shared != expected) {
                return PathCheck::fail("edges " + std::to_string(i) + " and " + std::to_string(j) + " share " +
                                       std::to_string(shared) + " vertices, expected " + std::to_string(expected));
            }
        }
    }
    return {};
}

LoosePath path_from_edges(std::span<const std::vector<Vertex>> edges, std::size_t k, std::optional<Color> color) {
    if (const PathCheck check = check_edge_sequence(edges, k); !check) {
        throw InputError("not a loose path: " + check.reason);
    }
    LoosePath path{k, {}, color};
    if (edges.empty()) {
        return path;
    }
    auto connector = [&](std::size_t i) {
        for (const Vertex v : edges[i]) {
            if (std::find(edges[i + 1].begin(), edges[i + 1].end(), v) != edges[i + 1].end()) {
                return v;
            }
        }
        return Vertex{0}; // unreachable after check_edge_sequence
    };
    // Each window lists its non-connector vertices in input order, then the
    // outgoing connector, which lands at position (i+1)(k-1).
    std::vector<Vertex> seq;
    seq.reserve(edges.size() * (k - 1) + 1);
    std::optional<Vertex> incoming;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::optional<Vertex> outgoing = i + 1 < edges.size() ? std::optional<Vertex>(connector(i)) : std::nullopt;
        for (const Vertex v : edges[i]) {
            if (v != incoming && v != outgoing) {
                seq.push_back(v);
            }
        }
        if (outgoing) {
            seq.push_back(*outgoing);
        }
        incoming = outgoing;
    }
    path.vertices = std::move(seq);
    return path;
}

} // namespace hpath

#ifndef HPATH_TESTS_SUPPORT_HPP
#define HPATH_TESTS_SUPPORT_HPP

#include "hpath/combinatorics.hpp"
#include "hpath/generators.hpp"
#include "hpath/partitioner.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <random>

namespace hpath::testing {

// Coloring built edge by edge from (edge, color) pairs over a base color.
inline Coloring coloring_with(std::size_t n, std::size_t k, Color base,
                              std::initializer_list<std::pair<std::vector<Vertex>, Color>> edges) {
    ColoringBuilder b(n, k);
    for (EdgeIndex r = 0; r < b.edge_count(); ++r) {
        b.set(r, base);
    }
    for (auto [e, c] : edges) {
        std::sort(e.begin(), e.end());
        b.set(edge_rank(e, k), c);
    }
    return std::move(b).build();
}

// A random coloring with a random proper path A and a path B planted in it.
// B is proper when `proper_b`, otherwise a (k-1)-vertex degenerate set.
// n = 2 mod (k-1) and at least one vertex stays uncovered.
struct Planted {
    std::unique_ptr<Coloring> coloring;
    std::optional<PartitionState> state;
};

inline std::optional<Planted> plant(std::mt19937_64& rng, std::size_t k, bool proper_b) {
    const std::size_t n = 2 + (k - 1) * (2 + rng() % 5);
    std::vector<Vertex> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        perm[i] = static_cast<Vertex>(i);
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::size_t max_a = (n - k - 1) / (k - 1);
    const std::size_t len_a = 1 + (1 + rng() % std::max<std::size_t>(1, max_a)) * (k - 1);
    std::size_t len_b = k - 1;
    if (proper_b) {
        if (n < len_a + k + 1) {
            return std::nullopt;
        }
        const std::size_t max_b = (n - len_a - k) / (k - 1);
        if (max_b == 0) {
            return std::nullopt;
        }
        len_b = 1 + (1 + rng() % max_b) * (k - 1);
    } else if (n < len_a + len_b + 1) {
        return std::nullopt;
    }
    const Color ca = rng() % 2 ? Color::Red : Color::Blue;
    const double p = std::vector<double>{0.1, 0.5, 0.9}[rng() % 3];
    const Coloring base = random_coloring(n, k, p, rng());
    ColoringBuilder b(n, k);
    for (EdgeIndex r = 0; r < base.edge_count(); ++r) {
        b.set(r, base.color_at(r));
    }
    LoosePath a{k, {perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(len_a)}, ca};
    LoosePath bp{k,
                 {perm.begin() + static_cast<std::ptrdiff_t>(len_a),
                  perm.begin() + static_cast<std::ptrdiff_t>(len_a + len_b)},
                 std::nullopt};
    for (auto e : a.edges()) {
        std::sort(e.begin(), e.end());
        b.set(edge_rank(e, k), ca);
    }
    if (proper_b) {
        bp.color = complement(ca);
        for (auto e : bp.edges()) {
            std::sort(e.begin(), e.end());
            b.set(edge_rank(e, k), complement(ca));
        }
    }
    Planted out;
    out.coloring = std::make_unique<Coloring>(std::move(b).build());
    const bool a_red = ca == Color::Red;
    out.state.emplace(PartitionState::from_paths(*out.coloring, n, a_red ? a : bp, a_red ? bp : a));
    return out;
}

} // namespace hpath::testing

#endif // HPATH_TESTS_SUPPORT_HPP

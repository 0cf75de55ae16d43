#include "hpath/generators.hpp"

#include <random>

namespace hpath {

Coloring random_coloring(std::size_t n, std::size_t k, double p_red, std::uint64_t seed) {
    if (!(p_red >= 0.0 && p_red <= 1.0)) {
        throw InputError("p_red must lie in [0, 1]");
    }
    ColoringBuilder builder(n, k);
    std::mt19937_64 rng(seed);
    constexpr double kScale = 1.0 / static_cast<double>(std::uint64_t{1} << 53);
    for (EdgeIndex r = 0; r < builder.edge_count(); ++r) {
        const double u = static_cast<double>(rng() >> 11) * kScale;
        builder.set(r, u < p_red ? Color::Red : Color::Blue);
    }
    return std::move(builder).build();
}

Coloring extremal_coloring(const ExtremalParams& params) {
    if (params.k < 3) {
        throw InputError("extremal construction needs k >= 3");
    }
    if (params.m < 1) {
        throw InputError("extremal construction needs m >= 1");
    }
    const std::size_t n = params.n();
    const std::size_t k = params.k;
    const Vertex q_max = static_cast<Vertex>(params.q_size() - 1);
    ColoringBuilder builder(n, k);
    // Colex order: an edge lies inside Q iff its largest vertex does, and those
    // edges are exactly the first C(|Q|, k) ranks.
    const std::uint64_t inside = binomial(q_max + 1, k);
    for (EdgeIndex r = 0; r < inside; ++r) {
        builder.set(r, Color::Red);
    }
    return std::move(builder).build();
}

Coloring constant_coloring(std::size_t n, std::size_t k, Color color) {
    ColoringBuilder builder(n, k);
    if (color == Color::Red) {
        for (EdgeIndex r = 0; r < builder.edge_count(); ++r) {
            builder.set(r, Color::Red);
        }
    }
    return std::move(builder).build();
}

} // namespace hpath

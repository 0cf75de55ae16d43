#include "hpath/coloring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

namespace hpath {

namespace {

std::uint64_t checked_edge_count(std::size_t n, std::size_t k) {
    if (k < 2) {
        throw InputError("uniformity k must be at least 2");
    }
    if (k > kMaxUniformity) {
        throw InputError("uniformity k exceeds " + std::to_string(kMaxUniformity));
    }
    return binomial(n, k);
}

std::size_t word_count(std::uint64_t bits) {
    return static_cast<std::size_t>((bits + 63) / 64);
}

} // namespace

Coloring::Coloring(std::size_t n, std::size_t k, std::vector<std::uint64_t> words)
    : n_(n), k_(k), edge_count_(checked_edge_count(n, k)), words_(std::move(words)) {
    if (words_.size() != word_count(edge_count_)) {
        throw InputError("bit table has wrong length for C(n, k)");
    }
    const std::uint64_t tail = edge_count_ & 63;
    if (tail != 0 && (words_.back() >> tail) != 0) {
        throw InputError("bit table has nonzero padding");
    }
}

Color Coloring::color_of(std::span<const Vertex> edge) const {
    if (edge.size() != k_) {
        throw InputError("edge has " + std::to_string(edge.size()) + " vertices, expected " + std::to_string(k_));
    }
    std::array<Vertex, kMaxUniformity> sorted{};
    std::copy(edge.begin(), edge.end(), sorted.begin());
    std::sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k_));
    if (sorted[k_ - 1] >= n_) {
        throw InputError("edge vertex " + std::to_string(sorted[k_ - 1]) + " out of range");
    }
    return color_at(edge_rank(std::span<const Vertex>(sorted.data(), k_), k_));
}

std::uint64_t Coloring::red_count() const noexcept {
    std::uint64_t total = 0;
    for (const std::uint64_t w : words_) {
        total += static_cast<std::uint64_t>(std::popcount(w));
    }
    return total;
}

Coloring Coloring::complemented() const {
    std::vector<std::uint64_t> flipped(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        flipped[i] = ~words_[i];
    }
    const std::uint64_t tail = edge_count_ & 63;
    if (tail != 0) {
        flipped.back() &= (std::uint64_t{1} << tail) - 1;
    }
    return Coloring(n_, k_, std::move(flipped));
}

ColoringBuilder::ColoringBuilder(std::size_t n, std::size_t k)
    : n_(n), k_(k), edge_count_(checked_edge_count(n, k)), words_(word_count(edge_count_), 0) {}

void ColoringBuilder::set(EdgeIndex rank, Color c) {
    const std::uint64_t mask = std::uint64_t{1} << (rank & 63);
    if (c == Color::Red) {
        words_[rank >> 6] |= mask;
    } else {
        words_[rank >> 6] &= ~mask;
    }
}

Coloring ColoringBuilder::build() && {
    return Coloring(n_, k_, std::move(words_));
}

} // namespace hpath

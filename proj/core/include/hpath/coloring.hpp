#ifndef HPATH_COLORING_HPP
#define HPATH_COLORING_HPP

#include "hpath/combinatorics.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace hpath {

enum class Color : std::uint8_t { Blue = 0, Red = 1 };

constexpr Color complement(Color c) noexcept {
    return c == Color::Red ? Color::Blue : Color::Red;
}

constexpr std::string_view to_string(Color c) noexcept {
    return c == Color::Red ? "red" : "blue";
}

// Immutable 2-coloring of all k-subsets of {0, ..., n-1}.
// Bit r of the table is the color of the edge with colex rank r (1 = red).
class Coloring {
public:
    Coloring(std::size_t n, std::size_t k, std::vector<std::uint64_t> words);

    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    std::uint64_t edge_count() const noexcept { return edge_count_; }

    Color color_at(EdgeIndex rank) const noexcept {
        return ((words_[rank >> 6] >> (rank & 63)) & 1U) != 0 ? Color::Red : Color::Blue;
    }

    // Accepts the edge in any vertex order. Throws InputError on a bad edge.
    Color color_of(std::span<const Vertex> edge) const;

    std::uint64_t red_count() const noexcept;

    // Packed table, 64 edges per word, low bit first. Bits past edge_count() are zero.
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    // Same n and k with every edge color flipped.
    Coloring complemented() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::size_t n_;
    std::size_t k_;
    std::uint64_t edge_count_;
    std::vector<std::uint64_t> words_;
};

// Incremental builder used by generators and file readers.
class ColoringBuilder {
public:
    ColoringBuilder(std::size_t n, std::size_t k);

    std::uint64_t edge_count() const noexcept { return edge_count_; }
    void set(EdgeIndex rank, Color c);
    Coloring build() &&;

private:
    std::size_t n_;
    std::size_t k_;
    std::uint64_t edge_count_;
    std::vector<std::uint64_t> words_;
};

} // namespace hpath

#endif // HPATH_COLORING_HPP

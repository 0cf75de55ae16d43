#include "hpath/combinatorics.hpp"

#include <limits>

namespace hpath {

namespace {

__extension__ using Wide = unsigned __int128;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// C(n, r) clamped to kSaturated instead of overflowing.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r) {
    if (r > n) {
        return 0;
    }
    if (r > n - r) {
        r = n - r;
    }
    Wide result = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        result = result * (n - r + i) / i;
        if (result >= kSaturated) {
            return kSaturated;
        }
    }
    return static_cast<std::uint64_t>(result);
}

} // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    const std::uint64_t value = binomial_saturating(n, r);
    if (value == kSaturated) {
        throw InputError("binomial coefficient overflows 64 bits");
    }
    return value;
}

EdgeIndex edge_rank(std::span<const Vertex> edge, std::size_t k) {
    if (edge.size() != k) {
        throw InputError("edge has " + std::to_string(edge.size()) + " vertices, expected " + std::to_string(k));
    }
    EdgeIndex rank = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (i > 0 && edge[i] <= edge[i - 1]) {
            throw InputError("edge vertices must be distinct and sorted ascending");
        }
        rank += binomial(edge[i], i + 1);
    }
    return rank;
}

std::vector<Vertex> edge_unrank(EdgeIndex index, std::size_t k) {
    std::vector<Vertex> edge(k);
    EdgeIndex rest = index;
    for (std::size_t pos = k; pos > 0; --pos) {
        // Largest a with C(a, pos) <= rest: doubling bracket, then bisection.
        std::uint64_t lo = pos - 1;
        std::uint64_t hi = pos;
        while (binomial_saturating(hi, pos) <= rest) {
            lo = hi;
            hi = hi * 2;
        }
        hi -= 1;
        while (lo < hi) {
            const std::uint64_t mid = lo + (hi - lo + 1) / 2;
            if (binomial_saturating(mid, pos) <= rest) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        edge[pos - 1] = static_cast<Vertex>(lo);
        rest -= binomial(lo, pos);
    }
    return edge;
}

} // namespace hpath

#ifndef HPATH_COMBINATORICS_HPP
#define HPATH_COMBINATORICS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hpath {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint64_t;

// Largest uniformity supported by the fixed-size edge buffers.
inline constexpr std::size_t kMaxUniformity = 32;

// Raised for malformed caller input (bad edges, bad files, bad parameters).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// C(n, r); throws InputError on 64-bit overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

// Colex rank of a sorted k-subset: sum over i of C(a_i, i), i 1-based.
EdgeIndex edge_rank(std::span<const Vertex> edge, std::size_t k);

// Inverse of edge_rank. Greedy: largest a_k with C(a_k, k) <= index, recurse.
std::vector<Vertex> edge_unrank(EdgeIndex index, std::size_t k);

// Calls fn(subset) for every size-r subset of `pool` in lexicographic order of
// positions; stops early and returns true as soon as fn returns true.
template <typename Fn>
bool for_each_subset(std::span<const Vertex> pool, std::size_t r, Fn&& fn) {
    const std::size_t m = pool.size();
    if (r > m) {
        return false;
    }
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) {
        idx[i] = i;
    }
    std::vector<Vertex> subset(r);
    while (true) {
        for (std::size_t i = 0; i < r; ++i) {
            subset[i] = pool[idx[i]];
        }
        if (fn(std::span<const Vertex>(subset))) {
            return true;
        }
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == m - r + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return false;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

} // namespace hpath

#endif // HPATH_COMBINATORICS_HPP

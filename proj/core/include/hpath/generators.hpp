#ifndef HPATH_GENERATORS_HPP
#define HPATH_GENERATORS_HPP

#include "hpath/coloring.hpp"

#include <cstddef>
#include <cstdint>

namespace hpath {

// Sharpness family: Q = {0..(k-1)m} gets every internal edge red, every edge
// meeting S = the 2(k-1) vertices above Q is blue.
struct ExtremalParams {
    std::size_t k = 3;
    std::size_t m = 1;

    std::size_t q_size() const noexcept { return (k - 1) * m + 1; }
    std::size_t s_size() const noexcept { return 2 * (k - 1); }
    std::size_t n() const noexcept { return q_size() + s_size(); }
};

// Each edge red independently with probability p_red. The stream is
// std::mt19937_64 seeded with `seed`; edge r (colex order) is red iff the r-th
// draw, reduced to a 53-bit uniform u in [0,1), satisfies u < p_red.
Coloring random_coloring(std::size_t n, std::size_t k, double p_red, std::uint64_t seed);

Coloring extremal_coloring(const ExtremalParams& params);

Coloring constant_coloring(std::size_t n, std::size_t k, Color color);

} // namespace hpath

#endif // HPATH_GENERATORS_HPP

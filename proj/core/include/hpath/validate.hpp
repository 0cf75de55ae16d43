#ifndef HPATH_VALIDATE_HPP
#define HPATH_VALIDATE_HPP

#include "hpath/coloring.hpp"
#include "hpath/loose_path.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hpath {

struct PartitionReport {
    bool valid = false;
    std::string reason;
    std::size_t covered = 0;
    std::vector<Vertex> leftover;
};

// Number of vertices the two-path partition must leave uncovered: (n-2) mod (k-1),
// and 0 below two vertices.
std::size_t reduction_remainder(std::size_t n, std::size_t k) noexcept;

// Disjointness, per-path validity, distinct colors on non-degenerate paths and
// the leftover bound (<= k-2, and 0 when n = 2 mod (k-1)).
PartitionReport validate_partition(const Coloring& coloring, const LoosePath& red, const LoosePath& blue);

} // namespace hpath

#endif // HPATH_VALIDATE_HPP

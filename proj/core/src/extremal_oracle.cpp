#include "hpath/oracle.hpp"

#include <algorithm>

namespace hpath {

// Red edges are exactly the k-subsets of Q, blue edges exactly those meeting
// S, and the coloring is invariant under permutations fixing Q and S. So a
// pair of paths is determined up to symmetry by its edge counts:
//   * a red path with a >= 1 edges uses a(k-1)+1 vertices of Q;
//   * a blue path with b >= 1 edges uses N = b(k-1)+1 vertices, j of them in S.
//     Every blue edge needs an S vertex and an S vertex lies in at most two
//     edges, so j >= ceil(b/2); placing S vertices on every other connector
//     reaches that bound, and extra S vertices can replace Q vertices freely.
//     Feasible iff ceil(b/2) <= |S| and N - min(|S|, N) <= free Q vertices;
//   * a degenerate path takes any min(k-1, remaining) vertices.
ExtremalProfile extremal_best_profile(std::size_t k, std::size_t m) {
    if (k < 3 || m < 1) {
        throw InputError("extremal oracle needs k >= 3 and m >= 1");
    }
    const ExtremalParams params{k, m};
    const std::size_t q = params.q_size();
    const std::size_t s = params.s_size();
    const std::size_t n = params.n();

    const auto blue_fits = [&](std::size_t b, std::size_t q_free) {
        const std::size_t need_s = (b + 1) / 2;
        const std::size_t total = b * (k - 1) + 1;
        return need_s <= s && total - std::min(s, total) <= q_free;
    };

    ExtremalProfile best{0, 0, std::min(n, 2 * (k - 1))};
    const auto offer = [&best](std::size_t a, std::size_t b, std::size_t covered) {
        if (covered > best.covered) {
            best = ExtremalProfile{a, b, covered};
        }
    };

    for (std::size_t a = 1; a * (k - 1) + 1 <= q; ++a) {
        const std::size_t red = a * (k - 1) + 1;
        offer(a, 0, red + std::min(k - 1, n - red));
        for (std::size_t b = 1; blue_fits(b, q - red); ++b) {
            offer(a, b, red + b * (k - 1) + 1);
        }
    }
    for (std::size_t b = 1; blue_fits(b, q); ++b) {
        const std::size_t blue = b * (k - 1) + 1;
        offer(0, b, blue + std::min(k - 1, n - blue));
    }
    return best;
}

std::size_t extremal_min_uncovered(std::size_t k, std::size_t m) {
    return ExtremalParams{k, m}.n() - extremal_best_profile(k, m).covered;
}

} // namespace hpath

#include "hpath/validate.hpp"

namespace hpath {

std::size_t reduction_remainder(std::size_t n, std::size_t k) noexcept {
    if (n < 2 || k < 2) {
        return 0;
    }
    return (n - 2) % (k - 1);
}

PartitionReport validate_partition(const Coloring& coloring, const LoosePath& red, const LoosePath& blue) {
    PartitionReport report;
    const std::size_t n = coloring.n();
    const std::size_t k = coloring.k();

    std::vector<bool> used(n, false);
    for (const LoosePath* path : {&red, &blue}) {
        for (const Vertex v : path->vertices) {
            if (v >= n) {
                report.reason = "vertex " + std::to_string(v) + " out of range";
                return report;
            }
            if (used[v]) {
                report.reason = "not disjoint";
                return report;
            }
            used[v] = true;
        }
    }
    if (const PathCheck check = check_path(red, coloring); !check) {
        report.reason = "red path invalid: " + check.reason;
        return report;
    }
    if (const PathCheck check = check_path(blue, coloring); !check) {
        report.reason = "blue path invalid: " + check.reason;
        return report;
    }
    if (!red.degenerate() && !blue.degenerate() && red.color == blue.color) {
        report.reason = "both paths are " + std::string(to_string(*red.color));
        return report;
    }
    if (!red.degenerate() && red.color != Color::Red) {
        report.reason = "red path is not red";
        return report;
    }
    if (!blue.degenerate() && blue.color != Color::Blue) {
        report.reason = "blue path is not blue";
        return report;
    }

    for (Vertex v = 0; v < n; ++v) {
        if (!used[v]) {
            report.leftover.push_back(v);
        }
    }
    report.covered = n - report.leftover.size();

    const std::size_t bound = n >= 2 && reduction_remainder(n, k) == 0 ? 0 : k - 2;
    if (report.leftover.size() > bound) {
        report.reason = "leftover bound: " + std::to_string(report.leftover.size()) + " uncovered, at most " +
                        std::to_string(bound) + " allowed";
        return report;
    }
    report.valid = true;
    report.reason = "ok";
    return report;
}

} // namespace hpath

#ifndef HPATH_CLI_FILES_HPP
#define HPATH_CLI_FILES_HPP

#include "hpath/coloring.hpp"
#include "hpath/partitioner.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hpath::cli {

// "HPC1 <n> <k>\n" followed by the base64 bit table (MSB first within each
// byte, bit index = colex rank, 1 = red) and a newline.
std::string write_coloring_file(const Coloring& coloring);
Coloring read_coloring_file(std::string_view text);

std::string base64_encode(const std::vector<unsigned char>& bytes);
std::vector<unsigned char> base64_decode(std::string_view text);

struct PartitionDocument {
    std::size_t n = 0;
    std::size_t k = 0;
    LoosePath red;
    LoosePath blue;
    std::vector<Vertex> leftover;
    SolveStatus status = SolveStatus::Perfect;
    std::size_t move_count = 0;
    std::vector<TraceEntry> trace;

    friend bool operator==(const PartitionDocument&, const PartitionDocument&) = default;
};

PartitionDocument make_document(const Coloring& coloring, const PartitionResult& result, bool with_trace);

// JSON text. Paths are written as edge windows in path order, or as a plain
// vertex list under red_degenerate / blue_degenerate.
std::string write_partition_file(const PartitionDocument& doc);
PartitionDocument read_partition_file(std::string_view text);

std::string write_counterexample_file(const Coloring& coloring, const CounterexampleDump& dump);

std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view text);

} // namespace hpath::cli

#endif // HPATH_CLI_FILES_HPP

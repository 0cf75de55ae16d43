#include "hpath_cli/files.hpp"

#include "hpath/combinatorics.hpp"

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <sstream>

namespace hpath::cli {

using Json = nlohmann::ordered_json;

namespace {

// Bit tables beyond this many edges are refused before allocation.
constexpr std::uint64_t kMaxFileEdges = std::uint64_t{1} << 34;

std::size_t parse_size(std::string_view token, const char* what) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size() || token.empty()) {
        throw InputError(std::string("bad ") + what + " in coloring header");
    }
    return value;
}

} // namespace

std::string base64_encode(const std::vector<unsigned char>& bytes) {
    std::string out(4 * ((bytes.size() + 2) / 3) + 1, '\0');
    const int len = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()), bytes.data(),
                                    static_cast<int>(bytes.size()));
    out.resize(static_cast<std::size_t>(len));
    return out;
}

std::vector<unsigned char> base64_decode(std::string_view text) {
    if (text.size() % 4 != 0) {
        throw InputError("bad base64 length");
    }
    std::vector<unsigned char> out(text.size() / 4 * 3);
    if (text.empty()) {
        return out;
    }
    const int len = EVP_DecodeBlock(out.data(), reinterpret_cast<const unsigned char*>(text.data()),
                                    static_cast<int>(text.size()));
    if (len < 0) {
        throw InputError("bad base64 body");
    }
    // EVP_DecodeBlock counts the zero bytes produced by '=' padding.
    std::size_t pad = 0;
    while (pad < 2 && text[text.size() - 1 - pad] == '=') {
        ++pad;
    }
    out.resize(static_cast<std::size_t>(len) - pad);
    return out;
}

std::string write_coloring_file(const Coloring& coloring) {
    const std::uint64_t edges = coloring.edge_count();
    std::vector<unsigned char> bytes((edges + 7) / 8, 0);
    for (EdgeIndex r = 0; r < edges; ++r) {
        if (coloring.color_at(r) == Color::Red) {
            bytes[r / 8] |= static_cast<unsigned char>(0x80U >> (r % 8));
        }
    }
    std::ostringstream out;
    out << "HPC1 " << coloring.n() << ' ' << coloring.k() << '\n' << base64_encode(bytes) << '\n';
    return out.str();
}

Coloring read_coloring_file(std::string_view text) {
    const auto eol = text.find('\n');
    if (eol == std::string_view::npos) {
        throw InputError("missing coloring header line");
    }
    const std::string_view header = text.substr(0, eol);
    std::string_view body = text.substr(eol + 1);
    if (!body.empty() && body.back() == '\n') {
        body.remove_suffix(1);
    }
    if (header.substr(0, 5) != "HPC1 ") {
        throw InputError("not an HPC1 coloring file");
    }
    const std::string_view rest = header.substr(5);
    const auto space = rest.find(' ');
    if (space == std::string_view::npos) {
        throw InputError("coloring header needs n and k");
    }
    const std::size_t n = parse_size(rest.substr(0, space), "n");
    const std::size_t k = parse_size(rest.substr(space + 1), "k");
    if (k < 2 || k > kMaxUniformity) {
        throw InputError("k out of range in coloring header");
    }
    const std::uint64_t edges = binomial(n, k);
    if (edges > kMaxFileEdges) {
        throw InputError("coloring too large");
    }
    const std::uint64_t byte_count = (edges + 7) / 8;
    if (body.size() != 4 * ((byte_count + 2) / 3) || body.find('\n') != std::string_view::npos) {
        throw InputError("bad bit-table length");
    }
    const std::vector<unsigned char> bytes = base64_decode(body);
    if (bytes.size() != byte_count) {
        throw InputError("bad bit-table length");
    }
    ColoringBuilder builder(n, k);
    for (std::uint64_t i = 0; i < byte_count * 8; ++i) {
        const bool set = (bytes[i / 8] & (0x80U >> (i % 8))) != 0;
        if (i >= edges) {
            if (set) {
                throw InputError("nonzero padding bits");
            }
            continue;
        }
        if (set) {
            builder.set(i, Color::Red);
        }
    }
    return std::move(builder).build();
}

PartitionDocument make_document(const Coloring& coloring, const PartitionResult& result, bool with_trace) {
    PartitionDocument doc;
    doc.n = coloring.n();
    doc.k = coloring.k();
    doc.red = result.red;
    doc.blue = result.blue;
    doc.leftover = result.leftover;
    doc.status = result.status;
    doc.move_count = result.moves;
    if (with_trace) {
        doc.trace = result.trace;
    }
    return doc;
}

namespace {

void put_path(Json& j, const char* name, const LoosePath& path) {
    Json edges = Json::array();
    Json loose = Json::array();
    if (path.degenerate()) {
        loose = path.vertices;
    } else {
        for (const auto& e : path.edges()) {
            edges.push_back(e);
        }
    }
    j[name] = std::move(edges);
    j[std::string(name) + "_degenerate"] = std::move(loose);
}

Json edit_json(const PathEdit& e) {
    Json j;
    j["source"] = std::string(to_string(e.source));
    j["trim_front"] = e.trim_front;
    j["trim_back"] = e.trim_back;
    j["reverse"] = e.reverse;
    j["absorb"] = e.absorb;
    Json apps = Json::array();
    for (const EdgeAppend& a : e.appends) {
        apps.push_back(Json{{"attach", a.attach}, {"fresh", a.fresh}});
    }
    j["appends"] = std::move(apps);
    return j;
}

PathEdit edit_from(const Json& j) {
    PathEdit e;
    const auto src = parse_path_source(j.at("source").get<std::string>());
    if (!src) {
        throw InputError("unknown path source in trace");
    }
    e.source = *src;
    e.trim_front = j.at("trim_front").get<std::size_t>();
    e.trim_back = j.at("trim_back").get<std::size_t>();
    e.reverse = j.at("reverse").get<bool>();
    e.absorb = j.at("absorb").get<std::vector<Vertex>>();
    for (const Json& a : j.at("appends")) {
        e.appends.push_back(EdgeAppend{a.at("attach").get<Vertex>(), a.at("fresh").get<std::vector<Vertex>>()});
    }
    return e;
}

LoosePath path_from(const Json& j, const char* name, std::size_t k, Color color) {
    const auto edges = j.at(name).get<std::vector<std::vector<Vertex>>>();
    const auto loose = j.at(std::string(name) + "_degenerate").get<std::vector<Vertex>>();
    if (!edges.empty() && !loose.empty()) {
        throw InputError(std::string(name) + " has both edges and a degenerate part");
    }
    if (edges.empty()) {
        if (loose.size() >= k) {
            throw InputError(std::string(name) + "_degenerate has k or more vertices");
        }
        return LoosePath{k, loose, std::nullopt};
    }
    return path_from_edges(edges, k, color);
}

} // namespace

std::string write_partition_file(const PartitionDocument& doc) {
    Json j;
    j["n"] = doc.n;
    j["k"] = doc.k;
    put_path(j, "red", doc.red);
    put_path(j, "blue", doc.blue);
    j["leftover"] = doc.leftover;
    j["status"] = std::string(to_string(doc.status));
    j["move_count"] = doc.move_count;
    Json trace = Json::array();
    for (const TraceEntry& t : doc.trace) {
        Json entry;
        entry["rule"] = t.move.label();
        entry["red"] = edit_json(t.move.red);
        entry["blue"] = edit_json(t.move.blue);
        entry["covered"] = t.after.covered;
        entry["diff"] = t.after.diff;
        trace.push_back(std::move(entry));
    }
    j["trace"] = std::move(trace);
    return j.dump(2) + "\n";
}

PartitionDocument read_partition_file(std::string_view text) {
    try {
        const Json j = Json::parse(text);
        PartitionDocument doc;
        doc.n = j.at("n").get<std::size_t>();
        doc.k = j.at("k").get<std::size_t>();
        if (doc.k < 2 || doc.k > kMaxUniformity) {
            throw InputError("k out of range in partition file");
        }
        doc.red = path_from(j, "red", doc.k, Color::Red);
        doc.blue = path_from(j, "blue", doc.k, Color::Blue);
        doc.leftover = j.at("leftover").get<std::vector<Vertex>>();
        const auto status = parse_solve_status(j.at("status").get<std::string>());
        if (!status) {
            throw InputError("unknown status in partition file");
        }
        doc.status = *status;
        doc.move_count = j.at("move_count").get<std::size_t>();
        for (const Json& t : j.at("trace")) {
            const auto label = parse_move_label(t.at("rule").get<std::string>());
            if (!label) {
                throw InputError("unknown rule in trace");
            }
            TraceEntry entry;
            entry.move.rule = label->first;
            entry.move.detail = label->second;
            entry.move.red = edit_from(t.at("red"));
            entry.move.blue = edit_from(t.at("blue"));
            entry.after = Potential{t.at("covered").get<std::size_t>(), t.at("diff").get<std::size_t>()};
            doc.trace.push_back(std::move(entry));
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed partition file: ") + e.what());
    }
}

std::string write_counterexample_file(const Coloring& coloring, const CounterexampleDump& dump) {
    Json j;
    j["n"] = coloring.n();
    j["k"] = coloring.k();
    j["red"] = dump.red.vertices;
    j["blue"] = dump.blue.vertices;
    j["uncovered"] = dump.uncovered;
    j["rejected"] = dump.rejected;
    return j.dump(2) + "\n";
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot write " + path);
    }
    out << text;
    if (!out) {
        throw InputError("cannot write " + path);
    }
}

} // namespace hpath::cli

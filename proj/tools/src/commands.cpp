#include "hpath_cli/commands.hpp"

#include "hpath/generators.hpp"
#include "hpath/oracle.hpp"
#include "hpath/partitioner.hpp"
#include "hpath/validate.hpp"
#include "hpath_cli/files.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hpath::cli {

namespace {

constexpr std::size_t kOracleDefaultMaxN = 12;

std::string join(const std::vector<Vertex>& vs) {
    std::string out = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        out += (i ? "," : "") + std::to_string(vs[i]);
    }
    return out + "]";
}

struct GenArgs {
    std::string kind;
    std::size_t n = 0;
    std::size_t k = 3;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::size_t m = 0;
    std::string color = "red";
    std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
    Coloring coloring = [&] {
        if (a.kind == "random") {
            return random_coloring(a.n, a.k, a.p, a.seed);
        }
        if (a.kind == "extremal") {
            return extremal_coloring(ExtremalParams{a.k, a.m});
        }
        if (a.color != "red" && a.color != "blue") {
            throw InputError("--color must be red or blue");
        }
        return constant_coloring(a.n, a.k, a.color == "red" ? Color::Red : Color::Blue);
    }();
    const std::string text = write_coloring_file(coloring);
    std::ostream& summary = a.out.empty() ? err : out;
    if (a.out.empty()) {
        out << text;
    } else {
        write_text(a.out, text);
    }
    summary << "n=" << coloring.n() << " k=" << coloring.k() << " red=" << coloring.red_count() << '\n';
    return kExitOk;
}

struct SolveArgs {
    std::string in;
    std::string out;
    bool trace = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    const Coloring coloring = read_coloring_file(read_text(a.in));
    SolverConfig config;
    config.record_trace = a.trace;
    const PartitionResult result = solve(coloring, config);
    const std::string text = write_partition_file(make_document(coloring, result, a.trace));
    std::ostream& summary = a.out.empty() ? err : out;
    if (a.out.empty()) {
        out << text;
    } else {
        write_text(a.out, text);
    }
    summary << "status=" << to_string(result.status) << " leftover=" << join(result.leftover)
            << " moves=" << result.moves << " fallback_hits=" << result.fallback_hits << '\n';
    for (const std::string& d : result.diagnostics) {
        err << "diagnostic: " << d << '\n';
    }
    if (result.status == SolveStatus::Counterexample) {
        const std::string dump_path = (a.out.empty() ? a.in : a.out) + ".counterexample.json";
        write_text(dump_path, write_counterexample_file(coloring, *result.counterexample));
        err << "counterexample written to " << dump_path << '\n';
        return kExitCounterexample;
    }
    return kExitOk;
}

int cmd_verify(const std::string& coloring_path, const std::string& partition_path, std::ostream& out) {
    const Coloring coloring = read_coloring_file(read_text(coloring_path));
    const PartitionDocument doc = read_partition_file(read_text(partition_path));
    if (doc.n != coloring.n() || doc.k != coloring.k()) {
        throw InputError("partition is for n=" + std::to_string(doc.n) + " k=" + std::to_string(doc.k) +
                         " but the coloring has n=" + std::to_string(coloring.n()) +
                         " k=" + std::to_string(coloring.k()));
    }
    const PartitionReport report = validate_partition(coloring, doc.red, doc.blue);
    if (!report.valid) {
        out << "invalid: " << report.reason << '\n';
        return kExitVerify;
    }
    std::vector<Vertex> claimed = doc.leftover;
    std::sort(claimed.begin(), claimed.end());
    if (claimed != report.leftover) {
        out << "invalid: leftover list " << join(doc.leftover) << " does not match uncovered "
            << join(report.leftover) << '\n';
        return kExitVerify;
    }
    out << "valid: covered=" << report.covered << " leftover=" << join(report.leftover) << '\n';
    return kExitOk;
}

struct SweepArgs {
    std::size_t k = 3;
    std::vector<std::size_t> n;
    std::size_t trials = 100;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
    std::ostringstream csv;
    csv << "n,k,seed,status,leftover,moves,fallback_hits,wall_time\n";
    std::size_t rows = 0;
    std::size_t max_moves = 0;
    std::size_t fallback = 0;
    std::size_t off_target = 0;  // non-Perfect rows with n = 2 mod (k-1)
    std::size_t counterexamples = 0;
    SolverConfig config;
    config.record_trace = false;
    for (const std::size_t n : a.n) {
        for (std::size_t t = 0; t < a.trials; ++t) {
            const std::uint64_t seed = a.seed + t;
            const Coloring coloring = random_coloring(n, a.k, a.p, seed);
            const auto start = std::chrono::steady_clock::now();
            const PartitionResult r = solve(coloring, config);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            char wall[32];
            std::snprintf(wall, sizeof wall, "%.6f", secs);
            csv << n << ',' << a.k << ',' << seed << ',' << to_string(r.status) << ',' << r.leftover.size() << ','
                << r.moves << ',' << r.fallback_hits << ',' << wall << '\n';
            ++rows;
            max_moves = std::max(max_moves, r.moves);
            fallback += r.fallback_hits;
            counterexamples += r.status == SolveStatus::Counterexample ? 1 : 0;
            if (reduction_remainder(n, a.k) == 0 && r.status != SolveStatus::Perfect) {
                ++off_target;
            }
        }
    }
    std::ostream& summary = a.out.empty() ? err : out;
    if (a.out.empty()) {
        out << csv.str();
    } else {
        write_text(a.out, csv.str());
    }
    summary << "rows=" << rows << " max_moves=" << max_moves << " fallback_hits=" << fallback
            << " non_perfect_on_congruent_n=" << off_target << " counterexamples=" << counterexamples << '\n';
    return counterexamples == 0 ? kExitOk : kExitCounterexample;
}

void print_path(std::ostream& out, const char* name, const LoosePath& p) {
    out << name << ": " << join(p.vertices) << (p.degenerate() ? " (degenerate)" : "") << '\n';
}

int cmd_oracle_min(const std::string& path, std::uint64_t limit, bool force, std::ostream& out,
                   std::ostream& err) {
    const Coloring coloring = read_coloring_file(read_text(path));
    if (coloring.n() > kOracleDefaultMaxN && !force) {
        err << "refusing exact search on n=" << coloring.n() << " (> " << kOracleDefaultMaxN
            << "); the search is exponential in n. Pass --force to run it anyway, or --limit to cap nodes.\n";
        return kExitInput;
    }
    const MinUncoveredResult r = min_uncovered_exact(coloring, OracleLimits{limit});
    if (!r.exact) {
        out << "unknown >= " << r.lower_bound << " (node limit reached after " << r.nodes << " nodes)\n";
        return kExitOk;
    }
    out << "min_uncovered=" << r.value << " nodes=" << r.nodes << '\n';
    if (r.best) {
        print_path(out, "red", r.best->red);
        print_path(out, "blue", r.best->blue);
    }
    return kExitOk;
}

int cmd_oracle_extremal(std::size_t k, std::size_t m, std::ostream& out) {
    const ExtremalParams params{k, m};
    if (k < 3 || m < 1) {
        throw InputError("oracle extremal needs k >= 3 and m >= 1");
    }
    const ExtremalProfile prof = extremal_best_profile(k, m);
    const std::size_t profile_min = params.n() - prof.covered;
    out << "k=" << k << " m=" << m << " n=" << params.n() << " profile_min=" << profile_min
        << " red_edges=" << prof.red_edges << " blue_edges=" << prof.blue_edges << '\n';
    if (params.n() > kOracleDefaultMaxN) {
        return kExitOk;
    }
    const MinUncoveredResult direct = min_uncovered_exact(extremal_coloring(params));
    out << "direct_min=" << direct.value << " agree=" << (direct.value == profile_min ? "yes" : "no") << '\n';
    return direct.value == profile_min ? kExitOk : kExitVerify;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partition 2-colored complete k-uniform hypergraphs into a red and a blue loose path",
                 "hpart"};
    app.require_subcommand(1);

    GenArgs gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Write a coloring file");
    gen_cmd->add_option("kind", gen.kind, "random | extremal | const")
        ->required()
        ->check(CLI::IsMember({"random", "extremal", "const"}));
    gen_cmd->add_option("--n", gen.n, "Vertex count (random, const)");
    gen_cmd->add_option("--k", gen.k, "Uniformity");
    gen_cmd->add_option("--p", gen.p, "Red probability (random)");
    gen_cmd->add_option("--seed", gen.seed, "PRNG seed (random)");
    gen_cmd->add_option("--m", gen.m, "Size parameter (extremal)");
    gen_cmd->add_option("--color", gen.color, "red | blue (const)");
    gen_cmd->add_option("-o,--out", gen.out, "Output path; stdout if omitted");

    SolveArgs sol;
    CLI::App* solve_cmd = app.add_subcommand("solve", "Partition a coloring");
    solve_cmd->add_option("coloring", sol.in, "Coloring file")->required();
    solve_cmd->add_option("-o,--out", sol.out, "Partition file path; stdout if omitted");
    solve_cmd->add_flag("--trace", sol.trace, "Record the move trace");

    std::string verify_coloring;
    std::string verify_partition;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Check a partition file against a coloring");
    verify_cmd->add_option("coloring", verify_coloring, "Coloring file")->required();
    verify_cmd->add_option("partition", verify_partition, "Partition file")->required();

    SweepArgs sweep;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Solve seeded random colorings and write CSV");
    sweep_cmd->add_option("--k", sweep.k, "Uniformity");
    sweep_cmd->add_option("--n", sweep.n, "Comma-separated vertex counts")->required()->delimiter(',');
    sweep_cmd->add_option("--trials", sweep.trials, "Trials per n");
    sweep_cmd->add_option("--p", sweep.p, "Red probability");
    sweep_cmd->add_option("--seed", sweep.seed, "Seed of the first trial");
    sweep_cmd->add_option("-o,--out", sweep.out, "CSV path; stdout if omitted");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "Exact minimum-uncovered searches");
    oracle_cmd->require_subcommand(1);
    std::string min_path;
    std::uint64_t min_limit = OracleLimits{}.max_nodes;
    bool min_force = false;
    CLI::App* min_cmd = oracle_cmd->add_subcommand("min-uncovered", "Exhaustive search on a coloring file");
    min_cmd->add_option("coloring", min_path, "Coloring file")->required();
    min_cmd->add_option("--limit", min_limit, "Search node limit");
    min_cmd->add_flag("--force", min_force, "Allow n > 12");
    std::size_t ext_k = 3;
    std::size_t ext_m = 1;
    CLI::App* ext_cmd = oracle_cmd->add_subcommand("extremal", "Profile search on the extremal coloring");
    ext_cmd->add_option("--k", ext_k, "Uniformity")->required();
    ext_cmd->add_option("--m", ext_m, "Size parameter")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*gen_cmd) {
            if (gen.kind != "extremal" && !gen_cmd->count("--n")) {
                throw InputError("gen " + gen.kind + " needs --n");
            }
            if (gen.kind == "extremal" && !gen_cmd->count("--m")) {
                throw InputError("gen extremal needs --m");
            }
            return cmd_gen(gen, out, err);
        }
        if (*solve_cmd) {
            return cmd_solve(sol, out, err);
        }
        if (*verify_cmd) {
            return cmd_verify(verify_coloring, verify_partition, out);
        }
        if (*sweep_cmd) {
            return cmd_sweep(sweep, out, err);
        }
        if (*min_cmd) {
            return cmd_oracle_min(min_path, min_limit, min_force, out, err);
        }
        return cmd_oracle_extremal(ext_k, ext_m, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitCounterexample;
    }
}

} // namespace hpath::cli

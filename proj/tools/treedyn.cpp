// Command-line front end: enumeration, simulation, verification, random-tree
// experiments, and DOT/JSON/CSV emission.
//
// Exit codes: 0 success, 1 parse error, 2 constraint violation,
// 3 orbit guard breach, 4 verification mismatch.
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treedyn/treedyn.hpp"

using namespace treedyn;

namespace {

Process parse_process(const std::string& s) {
    if (s == "min") return Process::minority;
    if (s == "maj") return Process::majority;
    fail(errc::parse, "process must be min or maj");
}

int run_enumerate(const std::string& file, const std::string& kind,
                  const std::string& process, bool count_only, bool json,
                  bool both_reps) {
    Tree t = read_tree_file(file);
    Process p = parse_process(process);
    if (kind == "fixed" && count_only) {
        // count without materializing the colorings
        std::uint64_t reps = count_fix_recursive(t, p);
        std::printf("representatives: %llu, total: %llu\n",
                    static_cast<unsigned long long>(reps),
                    static_cast<unsigned long long>(2 * reps));
        return 0;
    }
    if (kind == "fixed" || kind == "pure") {
        EnumerationResult r = kind == "fixed" ? enumerate_fix_result(t, p)
                                              : enumerate_pure_result(t, p);
        if (count_only) {
            std::printf("representatives: %zu, total: %llu\n", r.items.size(),
                        static_cast<unsigned long long>(r.total));
        } else if (json) {
            std::cout << enumeration_to_json(t, r, kind, both_reps).dump(2) << "\n";
        } else {
            std::printf("# n=%d process=%s kind=%s\n", t.n, process.c_str(), kind.c_str());
            for (const auto& item : r.items) {
                std::printf("edges=[");
                const auto& idx = item.set.edge_indices();
                for (std::size_t i = 0; i < idx.size(); ++i)
                    std::printf("%s%d", i ? "," : "", idx[i]);
                std::printf("] coloring=%s", item.coloring.to_string().c_str());
                if (both_reps)
                    std::printf(" complement=%s",
                                item.coloring.complement().to_string().c_str());
                std::printf("\n");
            }
            std::printf("representatives: %zu, total: %llu\n", r.items.size(),
                        static_cast<unsigned long long>(r.total));
        }
        return 0;
    }
    if (kind == "block") {
        auto sets = enumerate_block(t);
        if (count_only) {
            std::printf("representatives: %zu, total: %zu\n", sets.size(), sets.size());
        } else if (json) {
            std::cout << block_enumeration_to_json(t, sets, p).dump(2) << "\n";
        } else {
            std::printf("# n=%d process=%s kind=block\n", t.n, process.c_str());
            for (const auto& f : sets) {
                Coloring c = canonical_coloring(t, f, p);
                BlockTree bt = block_tree_of(t, c, p);
                std::printf("edges=[");
                const auto& idx = f.edge_indices();
                for (std::size_t i = 0; i < idx.size(); ++i)
                    std::printf("%s%d", i ? "," : "", idx[i]);
                std::printf("] canonical=%s blocks=%d\n", c.to_string().c_str(),
                            bt.forest.component_count());
            }
            std::printf("representatives: %zu, total: %zu\n", sets.size(), sets.size());
        }
        return 0;
    }
    fail(errc::parse, "kind must be fixed, pure, or block");
}

int run_simulate(const std::string& file, const std::string& coloring,
                 const std::string& process, long max_rounds) {
    Tree t = read_tree_file(file);
    Process p = parse_process(process);
    Coloring c = parse_coloring(coloring, t.n);
    OrbitReport rep = run_orbit(t, c, p, max_rounds);
    Coloring cur = c;
    for (long r = 0; r <= rep.transient + rep.period; ++r) {
        std::printf("round %ld: %s\n", r, cur.to_string().c_str());
        cur = step(t, cur, p);
    }
    std::printf("transient: %ld\nperiod: %d\n", rep.transient, rep.period);
    return 0;
}

int run_verify(int max_n, const std::string& processes, bool csv) {
    if (max_n < 1 || max_n > 12) fail(errc::bad_parameter, "--max-n must be in 1..12");
    std::vector<Process> which;
    if (processes == "both") which = {Process::minority, Process::majority};
    else if (processes == "min") which = {Process::minority};
    else if (processes == "maj") which = {Process::majority};
    else fail(errc::parse, "--processes must be both, min, or maj");
    long tree_id = 0;
    if (csv) std::printf("tree,process,n,fixed,pure,two_cycles,block_sets\n");
    for (int n = 1; n <= max_n; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            VerifyReport rep = verify_tree(t, which);
            if (csv) {
                for (Process p : which) {
                    OracleReport oracle = brute_force(t, p);
                    std::printf("%ld,%s,%d,%zu,%zu,%zu,%zu\n", tree_id, process_name(p),
                                n, oracle.fixed.size(), oracle.pure.size(),
                                oracle.two_cycle_count(), oracle.block_edge_sets.size());
                }
            }
            if (!rep.ok) {
                std::printf("MISMATCH on tree %ld (n=%d): %s\n", tree_id, n,
                            rep.mismatches.front().c_str());
                std::printf("counterexample tree:\n");
                write_tree(std::cout, t);
                return 4;
            }
            ++tree_id;
        }
        if (!csv) std::printf("n=%d: ok (%ld trees so far)\n", n, tree_id);
    }
    std::printf("all checks passed (%ld trees, processes=%s)\n", tree_id,
                processes.c_str());
    return 0;
}

int run_stats(int n, int samples, std::uint64_t seed) {
    if (n < 2) fail(errc::bad_parameter, "--n must be at least 2");
    if (samples < 1) fail(errc::bad_parameter, "--samples must be at least 1");
    std::mt19937_64 rng(seed);
    std::printf("sample,n,delta,e2,e3,e25,fix_sets,fix_total,pure_sets,block_sets,"
                "fib_bound,fix_slack,e3_bound,e3_slack,min_growth_ratio\n");
    double sum[3] = {0, 0, 0}, sumsq[3] = {0, 0, 0};
    int block_rows = 0;
    for (int i = 0; i < samples; ++i) {
        Tree t = random_tree(n, rng());
        int delta = t.max_degree();
        int e2 = edge_class(t, EdgeClass::e2).size();
        int e3 = edge_class(t, EdgeClass::e3).size();
        int e25 = edge_class(t, EdgeClass::e25).size();
        auto run = enumerate_fix_instrumented(t);
        std::uint64_t fix_sets = run.sets.size();
        // smallest per-edge growth of the enumeration work list
        double min_ratio = 0;
        for (std::size_t s = 0; s + 1 < run.level_sizes.size(); ++s) {
            double ratio = double(run.level_sizes[s + 1]) / double(run.level_sizes[s]);
            if (s == 0 || ratio < min_ratio) min_ratio = ratio;
        }
        std::uint64_t pure_sets = enumerate_pure(t).size();
        long long block_sets = -1;
        try {
            block_sets = static_cast<long long>(enumerate_block(t).size());
        } catch (const Error& e) {
            if (e.code() != errc::too_large) throw;
        }
        CountBounds bounds = check_count_bounds(t, 2 * fix_sets);
        int e3_bound = n >= 4 ? (n - 4) / 2 : 0;
        std::printf("%d,%d,%d,%d,%d,%d,%llu,%llu,%llu,%lld,%llu,%llu,%d,%d,%.4f\n", i,
                    n, delta, e2, e3, e25, static_cast<unsigned long long>(fix_sets),
                    static_cast<unsigned long long>(2 * fix_sets),
                    static_cast<unsigned long long>(pure_sets), block_sets,
                    static_cast<unsigned long long>(bounds.upper),
                    static_cast<unsigned long long>(bounds.upper_slack), e3_bound,
                    e3_bound - e3, min_ratio);
        double vals[3] = {double(fix_sets), double(pure_sets), double(block_sets)};
        for (int k = 0; k < 3; ++k) {
            if (k == 2 && block_sets < 0) continue;
            sum[k] += vals[k];
            sumsq[k] += vals[k] * vals[k];
        }
        if (block_sets >= 0) ++block_rows;
    }
    const char* names[3] = {"E_fix", "E_pure", "E_block"};
    for (int k = 0; k < 3; ++k) {
        int rows = k == 2 ? block_rows : samples;
        if (rows == 0) continue;
        double mean = sum[k] / rows;
        double var = sumsq[k] / rows - mean * mean;
        std::printf("# %s mean=%.6f variance=%.6f over %d samples\n", names[k], mean,
                    var, rows);
    }
    return 0;
}

int run_export(const std::string& file, const std::string& what,
               const std::string& edges_arg, const std::string& process) {
    Tree t = read_tree_file(file);
    if (what == "tree") {
        std::cout << to_dot(t);
        return 0;
    }
    if (what != "blocktree") fail(errc::parse, "--what must be tree or blocktree");
    std::vector<int> edges;
    std::string token;
    for (char ch : edges_arg + ",") {
        if (ch == ',') {
            if (!token.empty()) edges.push_back(std::stoi(token));
            token.clear();
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            token += ch;
        } else {
            fail(errc::parse, "--edges must be a comma-separated list of edge indices");
        }
    }
    EdgeSubset f(t, edges);
    Process p = parse_process(process);
    Coloring c = canonical_coloring(t, f, p);   // IllegalSet if not block-legal
    std::cout << to_dot(block_tree_of(t, c, p));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minority/majority tree dynamics: fixed points, pure 2-cycles, block trees"};
    app.require_subcommand(1);

    std::string file, kind = "fixed", process = "min", coloring;
    bool count_only = false, json = false, both_reps = false, csv = false;
    long max_rounds = -1;
    int max_n = 8, stats_n = 8, stats_samples = 100;
    std::uint64_t stats_seed = 1;
    std::string what = "tree", edges_arg, processes = "both";

    auto* enumerate = app.add_subcommand("enumerate", "enumerate fixed points, pure 2-cycles, or block trees");
    enumerate->add_option("file", file, "tree file")->required();
    enumerate->add_option("--kind", kind, "fixed|pure|block");
    enumerate->add_option("--process", process, "min|maj");
    enumerate->add_flag("--count-only", count_only, "print counts only");
    enumerate->add_flag("--json", json, "machine-readable output");
    enumerate->add_flag("--both-representatives", both_reps, "also emit complements");

    auto* simulate = app.add_subcommand("simulate", "run the synchronous process from a coloring");
    simulate->add_option("file", file, "tree file")->required();
    simulate->add_option("--coloring", coloring, "bitstring, one bit per node")->required();
    simulate->add_option("--process", process, "min|maj");
    simulate->add_option("--max-rounds", max_rounds, "round guard (default 4n^2)");

    auto* verify = app.add_subcommand("verify", "check the enumerators against the brute-force oracle");
    verify->add_option("--max-n", max_n, "verify all trees up to this size (<= 12)");
    verify->add_option("--processes", processes, "both|min|maj");
    verify->add_flag("--csv", csv, "emit per-tree oracle counts as CSV");

    auto* stats = app.add_subcommand("stats", "sample random trees and emit per-sample set sizes as CSV");
    stats->add_option("--n", stats_n, "tree size")->required();
    stats->add_option("--samples", stats_samples, "number of samples");
    stats->add_option("--seed", stats_seed, "RNG seed");

    auto* exporter = app.add_subcommand("export", "DOT export of a tree or a block tree");
    exporter->add_option("file", file, "tree file")->required();
    exporter->add_option("--what", what, "tree|blocktree");
    exporter->add_option("--edges", edges_arg, "comma-separated edge indices (blocktree)");
    exporter->add_option("--process", process, "min|maj");
    exporter->add_flag("--dot", "DOT output (the only format)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (enumerate->parsed())
            return run_enumerate(file, kind, process, count_only, json, both_reps);
        if (simulate->parsed()) return run_simulate(file, coloring, process, max_rounds);
        if (verify->parsed()) return run_verify(max_n, processes, csv);
        if (stats->parsed()) return run_stats(stats_n, stats_samples, stats_seed);
        if (exporter->parsed()) return run_export(file, what, edges_arg, process);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        switch (e.code()) {
            case errc::parse: return 1;
            case errc::guard_exceeded: return 3;
            default: return 2;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}

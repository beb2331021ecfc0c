#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "treedyn/block_enum.hpp"
#include "treedyn/dynamics.hpp"
#include "treedyn/edge_subset.hpp"
#include "treedyn/error.hpp"
#include "treedyn/fixed_enum.hpp"
#include "treedyn/pure_enum.hpp"
#include "treedyn/tree.hpp"

namespace treedyn {

// Ground truth by exhaustive scan of all 2^n colorings. Classification is
// re-derived from the process definition on bitmasks (bit v = color of node
// v); it shares nothing with the enumerators it is used to check.
struct OracleReport {
    int n = 0;
    Process process = Process::minority;
    std::vector<std::uint32_t> fixed;   // sorted masks
    std::vector<std::uint32_t> pure;
    std::vector<std::uint32_t> mixed;   // 2-cycles that are not pure
    std::vector<std::vector<int>> block_edge_sets;   // sorted, deduplicated

    std::size_t two_cycle_count() const { return pure.size() + mixed.size(); }
};

inline int worker_count() {
    const char* env = std::getenv("TREEDYN_THREADS");
    if (!env) return 1;
    int k = std::atoi(env);
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    return std::max(1, std::min(k, hw));
}

inline Coloring coloring_from_mask(int n, std::uint32_t mask) {
    Coloring c = Coloring::zeros(n);
    for (int v = 0; v < n; ++v) c.bits[v] = (mask >> v) & 1u;
    return c;
}

inline std::uint32_t mask_from_coloring(const Coloring& c) {
    std::uint32_t m = 0;
    for (int v = 0; v < c.n(); ++v)
        if (c.bits[v]) m |= 1u << v;
    return m;
}

namespace detail {

inline void fill_step_table(const Tree& t, Process p, std::vector<std::uint32_t>& table,
                            std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::uint32_t> nb(t.n, 0);
    for (auto [u, w] : t.edges) {
        nb[u] |= 1u << w;
        nb[w] |= 1u << u;
    }
    for (std::uint32_t mask = lo; mask < hi; ++mask) {
        std::uint32_t out = mask;
        for (int v = 0; v < t.n; ++v) {
            int ones = __builtin_popcount(nb[v] & mask);
            int same = (mask >> v) & 1u ? ones : t.degree(v) - ones;
            int diff = t.degree(v) - same;
            bool flip = p == Process::minority ? same > diff : same < diff;
            if (flip) out ^= 1u << v;
        }
        table[mask] = out;
    }
}

} // namespace detail

// half_scan restricts the raw scan to masks with the v* bit clear and infers
// the complements, relying on complement closure. Off by default.
inline OracleReport brute_force(const Tree& t, Process p, bool half_scan = false) {
    if (t.n > 22) fail(errc::too_large, "oracle capped at n = 22");
    OracleReport rep;
    rep.n = t.n;
    rep.process = p;
    const std::uint32_t count = 1u << t.n;
    const std::uint32_t full = count - 1;

    std::vector<std::uint32_t> table(count);
    int workers = worker_count();
    if (workers > 1 && t.n >= 16) {
        std::vector<std::thread> pool;
        std::uint32_t chunk = count / workers + 1;
        for (int k = 0; k < workers; ++k) {
            std::uint32_t lo = k * chunk;
            std::uint32_t hi = std::min<std::uint64_t>(count, std::uint64_t(lo) + chunk);
            if (lo >= hi) break;
            pool.emplace_back(detail::fill_step_table, std::cref(t), p, std::ref(table), lo, hi);
        }
        for (auto& th : pool) th.join();
    } else {
        detail::fill_step_table(t, p, table, 0, count);
    }

    std::set<std::vector<int>> blocks;
    auto record = [&](std::uint32_t m) {
        std::uint32_t m1 = table[m];
        if (m1 == m) {
            rep.fixed.push_back(m);
            return;
        }
        if (table[m1] != m) return;
        if (m1 == (~m & full)) rep.pure.push_back(m);
        else rep.mixed.push_back(m);
        std::uint32_t toggles = m ^ m1;
        std::vector<int> boundary;
        for (int e = 0; e < t.edge_count(); ++e) {
            auto [u, w] = t.edges[e];
            if (((toggles >> u) ^ (toggles >> w)) & 1u) boundary.push_back(e);
        }
        blocks.insert(std::move(boundary));
    };

    if (half_scan) {
        for (std::uint32_t m = 0; m < count; ++m)
            if (!(m & 1u)) {
                record(m);
                std::uint32_t c = ~m & full;
                if (c != m) record(c);
            }
        std::sort(rep.fixed.begin(), rep.fixed.end());
        std::sort(rep.pure.begin(), rep.pure.end());
        std::sort(rep.mixed.begin(), rep.mixed.end());
    } else {
        for (std::uint32_t m = 0; m < count; ++m) record(m);
    }
    rep.block_edge_sets.assign(blocks.begin(), blocks.end());
    return rep;
}

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> mismatches;   // first counterexamples, one per check
};

namespace detail {

inline std::vector<std::uint32_t> with_complements(int n,
                                                   const std::vector<Coloring>& reps) {
    std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> out;
    out.reserve(2 * reps.size());
    for (const auto& c : reps) {
        std::uint32_t m = mask_from_coloring(c);
        out.push_back(m);
        out.push_back(~m & full);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace detail

// Compares enumerator output against an oracle report; split out so tests can
// feed deliberately corrupted families through the same path.
inline void compare_families(const Tree& t, const OracleReport& oracle,
                             const std::vector<Coloring>& fixed_reps,
                             const std::vector<Coloring>& pure_reps,
                             const std::vector<std::vector<int>>& block_sets,
                             VerifyReport& report) {
    const char* pname = process_name(oracle.process);
    auto fixed = detail::with_complements(t.n, fixed_reps);
    if (fixed != oracle.fixed) {
        report.ok = false;
        report.mismatches.push_back(std::string("fixed points differ from oracle (") +
                                    pname + ", n=" + std::to_string(t.n) + ")");
    }
    auto pure = detail::with_complements(t.n, pure_reps);
    if (pure != oracle.pure) {
        report.ok = false;
        report.mismatches.push_back(std::string("pure 2-cycles differ from oracle (") +
                                    pname + ", n=" + std::to_string(t.n) + ")");
    }
    std::vector<std::vector<int>> sorted_blocks = block_sets;
    std::sort(sorted_blocks.begin(), sorted_blocks.end());
    if (sorted_blocks != oracle.block_edge_sets) {
        report.ok = false;
        report.mismatches.push_back(std::string("block edge sets differ from oracle (") +
                                    pname + ", n=" + std::to_string(t.n) + ")");
    }
}

inline VerifyReport verify_tree(const Tree& t,
                                const std::vector<Process>& processes = {
                                    Process::minority, Process::majority}) {
    if (t.n > 12) fail(errc::too_large, "verify_tree capped at n = 12");
    VerifyReport report;
    std::vector<std::vector<int>> block_sets;
    for (const auto& f : enumerate_block(t)) block_sets.push_back(f.edge_indices());
    for (Process p : processes) {
        OracleReport oracle = brute_force(t, p);
        std::vector<Coloring> fixed_reps, pure_reps;
        for (auto& item : enumerate_fix_result(t, p).items)
            fixed_reps.push_back(item.coloring);
        for (auto& item : enumerate_pure_result(t, p).items)
            pure_reps.push_back(item.coloring);
        compare_families(t, oracle, fixed_reps, pure_reps, block_sets, report);
    }
    return report;
}

} // namespace treedyn

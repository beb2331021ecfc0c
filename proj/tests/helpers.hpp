#pragma once

#include <cstdint>
#include <vector>

#include "treedyn/treedyn.hpp"

namespace treedyn::testing {

// The 9-node spider: center 0 of degree 4 with four 2-paths. Carries a mixed
// 2-cycle (010000000 under minority) whose forced fixed component sits on the
// I_1 side of the quotient.
inline Tree spider9() {
    return build_tree(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                          {1, 5}, {2, 6}, {3, 7}, {4, 8}});
}

// Center 0 of degree 5: one pendant leaf and four 2-paths. The block edge set
// of the mixed 2-cycle 0000111100 has F_0 = 4 > deg(0)/2, a witness that
// E_block is not contained in E_fix.
inline Tree star_of_paths10() {
    return build_tree(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                           {2, 6}, {3, 7}, {4, 8}, {5, 9}});
}

// Non-hereditary witness found by exhaustive search at n = 8: F = edges
// {0,1,3} is block-legal, its subset {1,3} is not (two neighboring components
// become fixed).
inline Tree witness8() {
    return build_tree(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {4, 6}, {4, 7}});
}

// Two degree-3 centers, two leaves each.
inline Tree double_star6() {
    return build_tree(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

// Counterexample to the claimed per-edge growth ratio of the hereditary
// enumerator: E^2 arrives as (1,3),(0,7),(2,3),(3,7) and the list sizes run
// 1,2,4,6,7, so the last step has 4*7 < 5*6. Verified against a brute-force
// subset count.
inline Tree ratio_witness8() {
    return build_tree(8, {{4, 1}, {1, 3}, {5, 0}, {0, 7}, {6, 2}, {2, 3}, {3, 7}});
}

// Star on n-1 nodes with one subdivided ray: max degree n-2.
inline Tree broom(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n - 2; ++i) edges.emplace_back(0, i);
    edges.emplace_back(1, n - 1);
    return build_tree(n, edges);
}

// Reference implementation of the fixed/toggle node inequalities for
// 2-cycles, stated over the per-color fixed and toggle neighbor counts.
inline bool lemma_fixed_node(const Tree& t, const Coloring& c,
                             const std::vector<std::uint8_t>& toggles, int u, Process p) {
    int nf[2] = {0, 0}, nt[2] = {0, 0};
    for (int w : t.adj[u]) (toggles[w] ? nt : nf)[c.bits[w]]++;
    int cu = c.bits[u];
    int lhs = nt[1 - cu] - nt[cu];
    if (lhs < 0) lhs = -lhs;
    int rhs = p == Process::minority ? nf[1 - cu] - nf[cu] : nf[cu] - nf[1 - cu];
    return lhs <= rhs;
}

inline bool lemma_toggle_node(const Tree& t, const Coloring& c,
                              const std::vector<std::uint8_t>& toggles, int u, Process p) {
    int nf[2] = {0, 0}, nt[2] = {0, 0};
    for (int w : t.adj[u]) (toggles[w] ? nt : nf)[c.bits[w]]++;
    int cu = c.bits[u];
    int lhs = nf[cu] - nf[1 - cu];
    if (lhs < 0) lhs = -lhs;
    int rhs = p == Process::minority ? nt[cu] - nt[1 - cu] : nt[1 - cu] - nt[cu];
    return lhs < rhs;
}

} // namespace treedyn::testing

#pragma once

#include <vector>

#include "treedyn/dynamics.hpp"
#include "treedyn/edge_subset.hpp"
#include "treedyn/error.hpp"
#include "treedyn/fixed_enum.hpp"
#include "treedyn/tree.hpp"

namespace treedyn {

// F is pure-legal when F is within E^3(T) and 2 F_v < deg(v) at every node.
inline bool is_pure_legal(const Tree& t, const EdgeSubset& f) {
    for (int e : f.edge_indices()) {
        auto [u, w] = t.edges[e];
        if (t.degree(u) < 3 || t.degree(w) < 3) return false;
    }
    for (int v = 0; v < t.n; ++v)
        if (2 * f.fv(v) >= t.degree(v)) return false;
    return true;
}

// E_pure(T), via the same hereditary enumerator over E^3 with the strict
// budget. A single node has no 2-cycles at all, so its family is empty.
inline std::vector<EdgeSubset> enumerate_pure(const Tree& t) {
    if (t.n == 1) return {};
    return enumerate_legal_sets(t, edge_class(t, EdgeClass::e3), /*strict=*/true).sets;
}

// B_pure. Minority: components monochromatic, member edges multichromatic.
// Majority: components independent, member edges monochromatic. Dual to the
// B_fix rules with the processes swapped.
inline Coloring coloring_from_pure(const Tree& t, const EdgeSubset& f, Process p) {
    if (t.n == 1) fail(errc::illegal_set, "a single node has no pure 2-cycles");
    if (!is_pure_legal(t, f)) fail(errc::illegal_set, "subset is not pure-legal");
    return detail::parity_coloring(t, f, /*flip_on_member=*/p == Process::minority);
}

inline EdgeSubset pure_set_from_coloring(const Tree& t, const Coloring& c, Process p) {
    if (classify(t, c, p) != OrbitClass::pure_two_cycle)
        fail(errc::not_pure, "coloring is not a pure 2-cycle");
    std::vector<int> edges;
    for (int e = 0; e < t.edge_count(); ++e) {
        bool mono = c.bits[t.edges[e].first] == c.bits[t.edges[e].second];
        if (mono == (p == Process::majority)) edges.push_back(e);
    }
    return EdgeSubset(t, std::move(edges));
}

inline EnumerationResult enumerate_pure_result(const Tree& t, Process p) {
    EnumerationResult out;
    out.process = p;
    for (auto& f : enumerate_pure(t)) {
        Coloring c = coloring_from_pure(t, f, p);
        out.items.push_back({std::move(f), std::move(c)});
    }
    out.total = 2 * static_cast<std::uint64_t>(out.items.size());
    return out;
}

} // namespace treedyn

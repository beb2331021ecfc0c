#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "treedyn/dynamics.hpp"
#include "treedyn/edge_subset.hpp"
#include "treedyn/error.hpp"
#include "treedyn/tree.hpp"

namespace treedyn {

// F is fix-legal when F is within E^2(T) and 2 F_v <= deg(v) at every node.
inline bool is_fix_legal(const Tree& t, const EdgeSubset& f) {
    for (int e : f.edge_indices()) {
        auto [u, w] = t.edges[e];
        if (t.degree(u) < 2 || t.degree(w) < 2) return false;
    }
    for (int v = 0; v < t.n; ++v)
        if (2 * f.fv(v) > t.degree(v)) return false;
    return true;
}

// Output-sensitive enumeration of all legal subsets of a hereditary edge
// universe: the list starts at {emptyset} and each universe edge is offered to
// every set found so far (the count cutoff keeps freshly appended sets from
// being reprocessed in the same pass). level_sizes[i] is the list size after
// the first i edges, so level_sizes.front() == 1.
struct LegalSetEnumeration {
    std::vector<EdgeSubset> sets;
    std::vector<std::size_t> level_sizes;
};

inline LegalSetEnumeration enumerate_legal_sets(const Tree& t,
                                                const EdgeSubset& universe,
                                                bool strict) {
    std::vector<std::vector<int>> sets;
    sets.push_back({});
    LegalSetEnumeration out;
    out.level_sizes.push_back(1);
    for (int e : universe.edge_indices()) {
        auto [u, w] = t.edges[e];
        std::size_t count = sets.size();
        for (std::size_t i = 0; i < count; ++i) {
            int xu = 0, xw = 0;
            for (int g : sets[i]) {
                xu += (t.edges[g].first == u || t.edges[g].second == u);
                xw += (t.edges[g].first == w || t.edges[g].second == w);
            }
            bool legal = strict
                             ? 2 * (xu + 1) < t.degree(u) && 2 * (xw + 1) < t.degree(w)
                             : 2 * (xu + 1) <= t.degree(u) && 2 * (xw + 1) <= t.degree(w);
            if (legal) {
                auto extended = sets[i];
                extended.push_back(e);
                sets.push_back(std::move(extended));
            }
        }
        out.level_sizes.push_back(sets.size());
    }
    out.sets.reserve(sets.size());
    for (auto& s : sets) out.sets.emplace_back(t, std::move(s));
    return out;
}

inline LegalSetEnumeration enumerate_fix_instrumented(const Tree& t) {
    return enumerate_legal_sets(t, edge_class(t, EdgeClass::e2), /*strict=*/false);
}

// E_fix(T): every legal subset of E^2(T), generation order.
inline std::vector<EdgeSubset> enumerate_fix(const Tree& t) {
    return enumerate_fix_instrumented(t).sets;
}

namespace detail {

// Parity coloring along the unique v*-paths: crossing an edge flips the color
// iff the edge's membership matches flip_on_member.
inline Coloring parity_coloring(const Tree& t, const EdgeSubset& f, bool flip_on_member) {
    Coloring c = Coloring::zeros(t.n);
    std::vector<char> seen(t.n, 0);
    std::vector<int> stack{Tree::vstar};
    seen[Tree::vstar] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < t.adj[v].size(); ++i) {
            int w = t.adj[v][i];
            if (seen[w]) continue;
            seen[w] = 1;
            bool member = f.contains(t.adj_edge[v][i]);
            c.bits[w] = c.bits[v] ^ static_cast<std::uint8_t>(member == flip_on_member);
            stack.push_back(w);
        }
    }
    return c;
}

} // namespace detail

// B_fix. Minority: member edges are the monochromatic ones, components are
// independently colored, so the color is the parity of non-member edges on
// the v*-path. Majority: components are monochromatic, member edges
// multichromatic (parity of member edges).
inline Coloring coloring_from_fix(const Tree& t, const EdgeSubset& f, Process p) {
    if (!is_fix_legal(t, f)) fail(errc::illegal_set, "subset is not fix-legal");
    return detail::parity_coloring(t, f, /*flip_on_member=*/p == Process::majority);
}

// Inverse of B_fix: the monochromatic (minority) or multichromatic (majority)
// edges of a fixed point.
inline EdgeSubset fix_set_from_coloring(const Tree& t, const Coloring& c, Process p) {
    if (step(t, c, p) != c) fail(errc::not_a_fixed_point, "coloring is not a fixed point");
    std::vector<int> edges;
    for (int e = 0; e < t.edge_count(); ++e) {
        bool mono = c.bits[t.edges[e].first] == c.bits[t.edges[e].second];
        if (mono == (p == Process::minority)) edges.push_back(e);
    }
    return EdgeSubset(t, std::move(edges));
}

struct EnumeratedColoring {
    EdgeSubset set;
    Coloring coloring;
};

struct EnumerationResult {
    Process process;
    std::vector<EnumeratedColoring> items;   // representatives, c(v*) = 0
    std::uint64_t total = 0;                 // representatives and complements
};

inline EnumerationResult enumerate_fix_result(const Tree& t, Process p) {
    EnumerationResult out;
    out.process = p;
    for (auto& f : enumerate_fix(t)) {
        Coloring c = coloring_from_fix(t, f, p);
        out.items.push_back({std::move(f), std::move(c)});
    }
    out.total = 2 * static_cast<std::uint64_t>(out.items.size());
    return out;
}

namespace detail {

// The recursive generator A_M: extend a partial coloring outward from v* in
// BFS order. Leaves are forced; the r_0 cutoff of Eq. (2) bounds how many
// non-leaf children may take the constrained color.
class RecursiveFixEnumerator {
public:
    RecursiveFixEnumerator(const Tree& t, Process p) : t_(t), p_(p) {
        order_.reserve(t.n);
        parent_.assign(t.n, -1);
        order_.push_back(Tree::vstar);
        parent_[Tree::vstar] = Tree::vstar;
        for (std::size_t qi = 0; qi < order_.size(); ++qi) {
            int v = order_[qi];
            for (int w : t_.adj[v])
                if (parent_[w] < 0) {
                    parent_[w] = v;
                    order_.push_back(w);
                }
        }
        color_.assign(t.n, -1);
    }

    void run(const std::function<void(const Coloring&)>& emit) {
        emit_ = &emit;
        color_.assign(t_.n, -1);
        color_[Tree::vstar] = 0;
        extend(0);
    }

private:
    void extend(std::size_t qi) {
        if (qi == order_.size()) {
            Coloring c = Coloring::zeros(t_.n);
            for (int v = 0; v < t_.n; ++v) c.bits[v] = static_cast<std::uint8_t>(color_[v]);
            (*emit_)(c);
            return;
        }
        int v = order_[qi];
        int cv = color_[v];
        std::vector<int> leaves, inner;
        for (int w : t_.adj[v]) {
            if (w == parent_[v] && v != Tree::vstar) continue;
            if (color_[w] >= 0) continue;
            (t_.is_leaf(w) ? leaves : inner).push_back(w);
        }
        int forced = p_ == Process::minority ? 1 - cv : cv;
        for (int w : leaves) color_[w] = forced;

        int same = 0, diffc = 0;
        for (int w : t_.adj[v])
            if (color_[w] >= 0) (color_[w] == cv ? same : diffc)++;

        int r = static_cast<int>(inner.size());
        int num = p_ == Process::minority ? r + diffc - same : r + same - diffc;
        if (num >= 0) {
            int r0 = std::min(num / 2, r);
            // subsets of size i get c(v) for minority, 1-c(v) for majority
            int scarce = p_ == Process::minority ? cv : 1 - cv;
            std::vector<int> pick;
            for (int i = 0; i <= r0; ++i) choose(inner, 0, i, scarce, 1 - scarce, pick, qi);
        }
        for (int w : leaves) color_[w] = -1;
    }

    void choose(const std::vector<int>& pool, std::size_t from, int want,
                int in_color, int out_color, std::vector<int>& pick, std::size_t qi) {
        if (want == 0) {
            for (std::size_t i = 0; i < pool.size(); ++i) color_[pool[i]] = out_color;
            for (int w : pick) color_[w] = in_color;
            extend(qi + 1);
            for (std::size_t i = 0; i < pool.size(); ++i) color_[pool[i]] = -1;
            return;
        }
        for (std::size_t i = from; i + want <= pool.size() + 0u; ++i) {
            pick.push_back(pool[i]);
            choose(pool, i + 1, want - 1, in_color, out_color, pick, qi);
            pick.pop_back();
        }
    }

    const Tree& t_;
    Process p_;
    std::vector<int> order_, parent_;
    std::vector<int> color_;
    const std::function<void(const Coloring&)>* emit_ = nullptr;
};

} // namespace detail

// All fixed points with c(v*) = 0 via the recursive partial-coloring scheme.
// Produces the same coloring set as enumerate_fix + B_fix.
inline std::vector<Coloring> enumerate_fix_recursive(const Tree& t, Process p) {
    std::vector<Coloring> out;
    detail::RecursiveFixEnumerator gen(t, p);
    gen.run([&](const Coloring& c) { out.push_back(c); });
    return out;
}

// Count-only mode: same recursion, integer accumulation, no materialization.
inline std::uint64_t count_fix_recursive(const Tree& t, Process p) {
    std::uint64_t count = 0;
    detail::RecursiveFixEnumerator gen(t, p);
    gen.run([&](const Coloring&) { ++count; });
    return count;
}

inline std::uint64_t fibonacci(int k) {
    if (k < 0 || k > 93) fail(errc::bad_parameter, "fibonacci index out of uint64 range");
    std::uint64_t a = 0, b = 1;
    for (int i = 0; i < k; ++i) {
        std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return a;
}

// The 2 F_{n - ceil(delta/2)} cap on the total number of fixed points.
inline std::uint64_t fib_bound(int n, int delta) {
    if (n < 1 || delta < 0 || delta >= std::max(n, 1) + 1)
        fail(errc::bad_parameter, "bad (n, delta)");
    return 2 * fibonacci(n - (delta + 1) / 2);
}

struct CountBounds {
    std::uint64_t total = 0;
    std::uint64_t upper = 0;       // 2 F_{n - ceil(delta/2)}
    std::uint64_t upper_slack = 0;
    int e2_size = 0;
    int delta = 0;
};

// Checks (5/4)^{|E^2|} <= total <= 2 F_{n - ceil(delta/2)} plus the star-like
// special cases (delta = n-1 gives 2, delta = n-2 gives 4). A violation is an
// implementation bug, so it throws rather than reporting.
inline CountBounds check_count_bounds(const Tree& t, std::uint64_t total_fixed) {
    CountBounds r;
    r.total = total_fixed;
    r.delta = t.max_degree();
    r.e2_size = edge_class(t, EdgeClass::e2).size();
    r.upper = fib_bound(t.n, r.delta);
    if (total_fixed > r.upper)
        fail(errc::bound_violated, "fixed-point total above the Fibonacci bound");
    r.upper_slack = r.upper - total_fixed;

    // (5/4)^l <= total, compared exactly as 5^l <= total * 4^l
    if (r.e2_size > 45) fail(errc::too_large, "E^2 too large for exact ratio check");
    unsigned __int128 pow5 = 1;
    for (int i = 0; i < r.e2_size; ++i) pow5 *= 5;
    unsigned __int128 rhs = static_cast<unsigned __int128>(total_fixed)
                            << (2 * r.e2_size);
    if (pow5 > rhs)
        fail(errc::bound_violated, "fixed-point total below the (5/4)^|E^2| bound");

    if (r.delta == t.n - 1 && total_fixed != 2)
        fail(errc::bound_violated, "star-like tree must have exactly 2 fixed points");
    if (r.delta == t.n - 2 && total_fixed != 4)
        fail(errc::bound_violated, "delta = n-2 tree must have exactly 4 fixed points");
    return r;
}

} // namespace treedyn

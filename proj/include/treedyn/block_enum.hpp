#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "treedyn/dynamics.hpp"
#include "treedyn/edge_subset.hpp"
#include "treedyn/error.hpp"
#include "treedyn/tree.hpp"

namespace treedyn {

enum class BlockKind { fixed_block, toggle_block };

// The quotient structure of a 2-cycle: components of the fixed/toggle node
// partition, joined by the edges that cross it.
struct BlockTree {
    EdgeSubset edges;
    ComponentForest forest;
    std::vector<BlockKind> kind;   // per component
};

namespace detail {

// A component is fixed when it is a singleton or contains a component-leaf
// of even tree-degree; such components are forced to be fixed blocks.
inline bool component_is_fixed(const Tree& t, const EdgeSubset& f,
                               const std::vector<int>& nodes) {
    if (nodes.size() == 1) return true;
    for (int v : nodes)
        if (t.degree(v) % 2 == 0 && t.degree(v) - f.fv(v) == 1) return true;
    return false;
}

} // namespace detail

inline std::vector<int> fixed_components(const Tree& t, const EdgeSubset& f) {
    for (int e : f.edge_indices()) {
        int du = t.degree(t.edges[e].first);
        int dw = t.degree(t.edges[e].second);
        if (std::min(du, dw) < 2 || std::max(du, dw) < 3)
            fail(errc::not_in_e25, "subset contains an edge outside E^2.5");
    }
    ComponentForest forest = remove_edges(t, f);
    std::vector<int> out;
    for (int c = 0; c < forest.component_count(); ++c)
        if (detail::component_is_fixed(t, f, forest.components[c])) out.push_back(c);
    return out;
}

// Block legality: F within E^2.5, singleton components have even tree-degree,
// and all fixed components lie in a single bipartition class of T_F. (Edges of
// a block tree always join a fixed block to a toggle block, so the forced
// fixed components must share one side.)
inline bool is_block_legal(const Tree& t, const EdgeSubset& f) {
    for (int e : f.edge_indices()) {
        int du = t.degree(t.edges[e].first);
        int dw = t.degree(t.edges[e].second);
        if (std::min(du, dw) < 2 || std::max(du, dw) < 3) return false;
    }
    ComponentForest forest = remove_edges(t, f);
    int fixed_side = -1;
    for (int c = 0; c < forest.component_count(); ++c) {
        const auto& nodes = forest.components[c];
        if (nodes.size() == 1 && t.degree(nodes[0]) % 2 != 0) return false;
        if (detail::component_is_fixed(t, f, nodes)) {
            if (fixed_side < 0) fixed_side = forest.side[c];
            else if (fixed_side != forest.side[c]) return false;
        }
    }
    return true;
}

// E_block(T) by exhaustive filtering of the subsets of E^2.5(T). The family is
// not hereditary, so the extension scheme of the fixed/pure enumerators does
// not apply; it is also not contained in E_fix(T), so nothing smaller than the
// full power set of E^2.5 is a safe search space.
inline std::vector<EdgeSubset> enumerate_block(const Tree& t) {
    if (t.n == 1) return {};
    std::vector<int> universe = edge_class(t, EdgeClass::e25).edge_indices();
    int l = static_cast<int>(universe.size());
    if (l > 24) fail(errc::too_large, "E^2.5 too large for exhaustive block enumeration");
    std::vector<EdgeSubset> out;
    std::vector<int> chosen;
    for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
        chosen.clear();
        for (int i = 0; i < l; ++i)
            if (mask & (1u << i)) chosen.push_back(universe[i]);
        EdgeSubset f(t, chosen);
        if (is_block_legal(t, f)) out.push_back(std::move(f));
    }
    return out;
}

inline BlockTree block_tree_of(const Tree& t, const Coloring& c, Process p) {
    if (classify(t, c, p) == OrbitClass::transient)
        fail(errc::not_periodic, "coloring is not on a cycle");
    Coloring c1 = step(t, c, p);
    std::vector<int> boundary;
    for (int e = 0; e < t.edge_count(); ++e) {
        auto [u, w] = t.edges[e];
        bool fu = c1.bits[u] == c.bits[u];
        bool fw = c1.bits[w] == c.bits[w];
        if (fu != fw) boundary.push_back(e);
    }
    BlockTree out;
    out.edges = EdgeSubset(t, std::move(boundary));
    out.forest = remove_edges(t, out.edges);
    out.kind.resize(out.forest.component_count());
    for (int comp = 0; comp < out.forest.component_count(); ++comp) {
        int v = out.forest.components[comp][0];
        out.kind[comp] = c1.bits[v] == c.bits[v] ? BlockKind::fixed_block
                                                 : BlockKind::toggle_block;
    }
    return out;
}

namespace detail {

// Searches the per-block orientations for a canonical 2-cycle realizing the
// given block structure. Components are decided in BFS order over the
// quotient tree; a node is validated (both phases, per the fixed/toggle
// neighborhood inequalities) as soon as every component it touches is decided.
class CanonicalSearch {
public:
    CanonicalSearch(const Tree& t, const EdgeSubset& f, const ComponentForest& forest,
                    Process p)
        : t_(t), f_(f), forest_(forest), p_(p) {
        int nc = forest.component_count();
        // node parity inside its component (phase of the independent coloring)
        parity_.assign(t.n, 0);
        std::vector<char> seen(t.n, 0);
        for (int c = 0; c < nc; ++c) {
            int root = forest.components[c][0];
            seen[root] = 1;
            std::vector<int> stack{root};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (std::size_t i = 0; i < t.adj[v].size(); ++i) {
                    if (f.contains(t.adj_edge[v][i])) continue;
                    int w = t.adj[v][i];
                    if (!seen[w]) {
                        seen[w] = 1;
                        parity_[w] = parity_[v] ^ 1;
                        stack.push_back(w);
                    }
                }
            }
        }

        // BFS order of components over the quotient tree
        std::vector<std::vector<int>> qadj(nc);
        for (const auto& qe : forest.quotient_edges) {
            qadj[qe.comp_u].push_back(qe.comp_w);
            qadj[qe.comp_w].push_back(qe.comp_u);
        }
        bfs_pos_.assign(nc, -1);
        comp_order_.push_back(0);
        bfs_pos_[0] = 0;
        for (std::size_t i = 0; i < comp_order_.size(); ++i)
            for (int d : qadj[comp_order_[i]])
                if (bfs_pos_[d] < 0) {
                    bfs_pos_[d] = static_cast<int>(comp_order_.size());
                    comp_order_.push_back(d);
                }

        // node v can be validated once all components it touches are decided
        check_at_.assign(nc, {});
        for (int v = 0; v < t.n; ++v) {
            int last = bfs_pos_[forest.component_id[v]];
            for (std::size_t i = 0; i < t.adj[v].size(); ++i)
                if (f.contains(t.adj_edge[v][i]))
                    last = std::max(last, bfs_pos_[forest.component_id[t.adj[v][i]]]);
            check_at_[last].push_back(v);
        }
    }

    // toggles[v] derived from the component kinds; color from the orientation
    // bits. Returns true and fills `result` on success.
    bool run(int fixed_side, Coloring& result) {
        fixed_side_ = fixed_side;
        color_.assign(t_.n, 0);
        orient_.assign(forest_.component_count(), 0);
        return decide(0, result);
    }

private:
    bool node_toggles(int v) const {
        return forest_.side[forest_.component_id[v]] != fixed_side_;
    }

    // monochromatic blocks take the orientation bit; independent blocks take
    // orientation xor parity. Minority: toggle mono / fixed independent;
    // majority: the reverse.
    void paint(int comp) {
        bool toggle = forest_.side[comp] != fixed_side_;
        bool mono = (p_ == Process::minority) == toggle;
        for (int v : forest_.components[comp])
            color_[v] = orient_[comp] ^ (mono ? 0 : parity_[v]);
    }

    bool node_ok(int v) const {
        int deg = t_.degree(v);
        int same0 = 0, same1 = 0;
        int cv0 = color_[v];
        int cv1 = cv0 ^ node_toggles(v);
        for (int w : t_.adj[v]) {
            same0 += (color_[w] == cv0);
            same1 += ((color_[w] ^ node_toggles(w)) == cv1);
        }
        bool want_toggle = node_toggles(v);
        bool t0, t1;
        if (p_ == Process::minority) {
            t0 = 2 * same0 > deg;
            t1 = 2 * same1 > deg;
        } else {
            t0 = 2 * same0 < deg;
            t1 = 2 * same1 < deg;
        }
        return t0 == want_toggle && t1 == want_toggle;
    }

    bool decide(std::size_t pos, Coloring& result) {
        if (pos == comp_order_.size()) {
            result = Coloring::zeros(t_.n);
            for (int v = 0; v < t_.n; ++v)
                result.bits[v] = static_cast<std::uint8_t>(color_[v]);
            if (result.bits[Tree::vstar]) result = result.complement();
            return true;
        }
        int comp = comp_order_[pos];
        for (int bit = 0; bit <= 1; ++bit) {
            orient_[comp] = bit;
            paint(comp);
            bool ok = true;
            for (int v : check_at_[pos])
                if (!node_ok(v)) {
                    ok = false;
                    break;
                }
            if (ok && decide(pos + 1, result)) return true;
        }
        return false;
    }

    const Tree& t_;
    const EdgeSubset& f_;
    const ComponentForest& forest_;
    Process p_;
    int fixed_side_ = 0;
    std::vector<int> parity_;
    std::vector<int> comp_order_, bfs_pos_;
    std::vector<std::vector<int>> check_at_;
    std::vector<int> color_, orient_;
};

} // namespace detail

// A canonical 2-cycle whose block tree has exactly the edge set f: toggle
// blocks monochromatic and fixed blocks independent for minority (reversed
// for majority). The fixed side is forced by the Def.-18 fixed components
// when any exist; the empty set yields a single toggle block (an all-fixed
// coloring would be a fixed point, not a 2-cycle).
inline Coloring canonical_coloring(const Tree& t, const EdgeSubset& f, Process p) {
    if (t.n == 1) {
        if (f.size() != 0) fail(errc::illegal_set, "single node admits only the empty set");
        return Coloring::zeros(1);   // degenerate: one fixed block
    }
    if (!is_block_legal(t, f)) fail(errc::illegal_set, "subset is not block-legal");
    ComponentForest forest = remove_edges(t, f);

    std::vector<int> candidates;
    int forced = -1;
    for (int c = 0; c < forest.component_count() && forced < 0; ++c)
        if (detail::component_is_fixed(t, f, forest.components[c]))
            forced = forest.side[c];
    if (forced >= 0) {
        candidates = {forced};
    } else if (f.size() == 0) {
        candidates = {1};   // lone component on side 0 must toggle
    } else {
        candidates = {0, 1};
    }

    detail::CanonicalSearch search(t, f, forest, p);
    Coloring result;
    for (int side : candidates)
        if (search.run(side, result)) return result;
    fail(errc::construction_failed, "no canonical coloring found for a legal set");
}

} // namespace treedyn

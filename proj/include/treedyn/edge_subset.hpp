#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "treedyn/error.hpp"
#include "treedyn/tree.hpp"

namespace treedyn {

// Immutable subset of a tree's edge index space. F_v (number of member edges
// incident to v) is cached at construction.
class EdgeSubset {
public:
    EdgeSubset() = default;

    EdgeSubset(const Tree& t, std::vector<int> edge_indices)
        : universe_(t.edge_count()), member_(t.edge_count(), 0), fv_(t.n, 0) {
        std::sort(edge_indices.begin(), edge_indices.end());
        edge_indices.erase(std::unique(edge_indices.begin(), edge_indices.end()),
                           edge_indices.end());
        for (int e : edge_indices) {
            if (e < 0 || e >= universe_) fail(errc::bad_index, "edge index out of range");
            member_[e] = 1;
            ++fv_[t.edges[e].first];
            ++fv_[t.edges[e].second];
        }
        edges_ = std::move(edge_indices);
    }

    static EdgeSubset empty(const Tree& t) { return EdgeSubset(t, {}); }

    bool contains(int e) const { return e >= 0 && e < universe_ && member_[e]; }
    int size() const { return static_cast<int>(edges_.size()); }
    int universe_size() const { return universe_; }
    int fv(int v) const { return fv_[v]; }
    const std::vector<int>& edge_indices() const { return edges_; }

    bool operator==(const EdgeSubset& o) const {
        return universe_ == o.universe_ && edges_ == o.edges_;
    }
    bool operator!=(const EdgeSubset& o) const { return !(*this == o); }
    bool operator<(const EdgeSubset& o) const { return edges_ < o.edges_; }

private:
    int universe_ = 0;
    std::vector<int> edges_;       // sorted member edge indices
    std::vector<std::uint8_t> member_;
    std::vector<int> fv_;
};

enum class EdgeClass { e2, e3, e25 };

// E^2: both ends degree >= 2.  E^3: both ends >= 3.  E^2.5: one end >= 2 and
// the other >= 3.  E^3 is a subset of E^2.5 is a subset of E^2.
inline EdgeSubset edge_class(const Tree& t, EdgeClass kind) {
    std::vector<int> out;
    for (int e = 0; e < t.edge_count(); ++e) {
        int du = t.degree(t.edges[e].first);
        int dw = t.degree(t.edges[e].second);
        int lo = std::min(du, dw), hi = std::max(du, dw);
        bool in = false;
        switch (kind) {
            case EdgeClass::e2: in = lo >= 2; break;
            case EdgeClass::e3: in = lo >= 3; break;
            case EdgeClass::e25: in = lo >= 2 && hi >= 3; break;
        }
        if (in) out.push_back(e);
    }
    return EdgeSubset(t, std::move(out));
}

// The components C_T(F) of T with the edges of F deleted, the quotient tree
// T_F they form, and its bipartition. The component containing v* is
// component 0 and carries side 0.
struct ComponentForest {
    std::vector<int> component_id;              // per node
    std::vector<std::vector<int>> components;   // node lists
    struct QuotientEdge {
        int comp_u, comp_w; // components of the edge's endpoints
        int tree_edge;
    };
    std::vector<QuotientEdge> quotient_edges;   // one per member edge
    std::vector<std::uint8_t> side;             // per component; side[comp of v*] = 0

    int component_count() const { return static_cast<int>(components.size()); }
};

inline ComponentForest remove_edges(const Tree& t, const EdgeSubset& f) {
    ComponentForest out;
    out.component_id.assign(t.n, -1);
    std::vector<int> stack;
    for (int start = 0; start < t.n; ++start) {
        if (out.component_id[start] >= 0) continue;
        int cid = out.component_count();
        out.components.emplace_back();
        stack.push_back(start);
        out.component_id[start] = cid;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.components[cid].push_back(v);
            for (std::size_t i = 0; i < t.adj[v].size(); ++i) {
                if (f.contains(t.adj_edge[v][i])) continue;
                int w = t.adj[v][i];
                if (out.component_id[w] < 0) {
                    out.component_id[w] = cid;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.components[cid].begin(), out.components[cid].end());
    }

    std::vector<std::vector<int>> qadj(out.component_count());
    for (int e : f.edge_indices()) {
        int cu = out.component_id[t.edges[e].first];
        int cw = out.component_id[t.edges[e].second];
        out.quotient_edges.push_back({cu, cw, e});
        qadj[cu].push_back(cw);
        qadj[cw].push_back(cu);
    }

    out.side.assign(out.component_count(), 0);
    std::vector<char> seen(out.component_count(), 0);
    stack.assign(1, out.component_id[Tree::vstar]);
    seen[stack[0]] = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int d : qadj[c]) {
            if (!seen[d]) {
                seen[d] = 1;
                out.side[d] = out.side[c] ^ 1;
                stack.push_back(d);
            }
        }
    }
    return out;
}

} // namespace treedyn

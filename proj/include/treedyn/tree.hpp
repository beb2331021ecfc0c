#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "treedyn/error.hpp"

namespace treedyn {

// A finite free tree on nodes 0..n-1 with a distinguished node v* fixed at
// index 0. Edges keep their input order; edge indices are used as the index
// space of EdgeSubset throughout.
struct Tree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;   // n-1 entries
    std::vector<std::vector<int>> adj;        // neighbor lists, input order
    std::vector<std::vector<int>> adj_edge;   // edge index parallel to adj

    static constexpr int vstar = 0;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const { return n - 1; }
    bool is_leaf(int v) const { return degree(v) == 1; }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
        return d;
    }

    int other_end(int e, int v) const {
        return edges[e].first == v ? edges[e].second : edges[e].first;
    }
};

inline Tree build_tree(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 1) fail(errc::bad_parameter, "node count must be at least 1");
    if (static_cast<int>(edge_list.size()) > n - 1)
        fail(errc::cyclic, "more than n-1 edges");
    if (static_cast<int>(edge_list.size()) < n - 1)
        fail(errc::disconnected, "fewer than n-1 edges");

    Tree t;
    t.n = n;
    t.edges = edge_list;
    t.adj.assign(n, {});
    t.adj_edge.assign(n, {});

    std::vector<std::vector<int>> seen(n);
    for (int e = 0; e < static_cast<int>(edge_list.size()); ++e) {
        auto [u, w] = edge_list[e];
        if (u < 0 || u >= n || w < 0 || w >= n)
            fail(errc::bad_index, "edge endpoint out of range");
        if (u == w) fail(errc::cyclic, "self-loop");
        auto& s = seen[std::min(u, w)];
        if (std::find(s.begin(), s.end(), std::max(u, w)) != s.end())
            fail(errc::duplicate_edge, "repeated edge");
        s.push_back(std::max(u, w));
        t.adj[u].push_back(w);
        t.adj_edge[u].push_back(e);
        t.adj[w].push_back(u);
        t.adj_edge[w].push_back(e);
    }

    // n-1 distinct edges: connected iff acyclic, so one reachability pass suffices.
    std::vector<char> visited(n, 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : t.adj[v]) {
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != n) fail(errc::disconnected, "not all nodes reachable from node 0");
    return t;
}

} // namespace treedyn

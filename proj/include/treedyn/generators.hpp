#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "treedyn/error.hpp"
#include "treedyn/tree.hpp"

namespace treedyn {

inline Tree make_path(int n) {
    if (n < 1) fail(errc::bad_parameter, "path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_tree(n, edges);
}

inline Tree make_star(int n) {
    if (n < 1) fail(errc::bad_parameter, "star needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return build_tree(n, edges);
}

// The comb H_n: a spine of (n+2)/2 nodes (indices 0..(n+2)/2-1) with one
// pendant leaf attached to each inner spine node. Requires even n >= 6.
inline Tree make_comb(int n) {
    if (n < 6 || n % 2 != 0) fail(errc::bad_parameter, "comb needs even n >= 6");
    int spine = (n + 2) / 2;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
    for (int j = 1; j + 1 < spine; ++j) edges.emplace_back(j, spine + j - 1);
    return build_tree(n, edges);
}

// Complete binary tree of depth h (2^{h+1}-1 nodes, root 0, level order).
inline Tree make_full_binary(int h) {
    if (h < 0 || h > 20) fail(errc::bad_parameter, "binary tree depth out of range");
    int n = (1 << (h + 1)) - 1;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / 2, v);
    return build_tree(n, edges);
}

inline Tree prufer_decode(int n, const std::vector<int>& seq) {
    if (n < 2) fail(errc::bad_parameter, "prufer decode needs n >= 2");
    if (static_cast<int>(seq.size()) != n - 2)
        fail(errc::bad_parameter, "prufer sequence must have n-2 entries");
    std::vector<int> deg(n, 1);
    for (int s : seq) {
        if (s < 0 || s >= n) fail(errc::bad_index, "prufer entry out of range");
        ++deg[s];
    }
    std::vector<std::pair<int, int>> edges;
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        edges.emplace_back(leaf, s);
        if (--deg[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return build_tree(n, edges);
}

// Uniform over labelled trees: decodes a uniformly random Prufer sequence.
inline Tree random_tree(int n, std::uint64_t seed) {
    if (n < 2) fail(errc::bad_parameter, "random tree needs n >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, n - 1);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = dist(rng);
    return prufer_decode(n, seq);
}

namespace detail {

inline std::string ahu_string(const Tree& t, int root) {
    // iterative post-order; children signatures sorted
    std::vector<std::string> sig(t.n);
    std::vector<int> parent(t.n, -1), order;
    order.reserve(t.n);
    std::vector<int> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : t.adj[v])
            if (parent[w] < 0) {
                parent[w] = v;
                stack.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<std::string> kids;
        for (int w : t.adj[v])
            if (w != parent[v]) kids.push_back(sig[w]);
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (auto& k : kids) s += k;
        s += ")";
        sig[v] = std::move(s);
    }
    return sig[root];
}

inline std::vector<int> tree_centers(const Tree& t) {
    if (t.n == 1) return {0};
    std::vector<int> deg(t.n), layer, next;
    int remaining = t.n;
    for (int v = 0; v < t.n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    std::vector<char> removed(t.n, 0);
    while (remaining > 2) {
        for (int v : layer) removed[v] = 1;
        remaining -= static_cast<int>(layer.size());
        next.clear();
        for (int v : layer)
            for (int w : t.adj[v])
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        layer.swap(next);
    }
    return layer;
}

} // namespace detail

// Isomorphism-invariant canonical form: AHU signature rooted at the
// center(s), lexicographic minimum over the at most two rootings.
inline std::string canonical_form(const Tree& t) {
    std::string best;
    for (int c : detail::tree_centers(t)) {
        std::string s = detail::ahu_string(t, c);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

inline bool isomorphic(const Tree& a, const Tree& b) {
    return a.n == b.n && canonical_form(a) == canonical_form(b);
}

// One representative per isomorphism class of free trees on n nodes,
// generated by leaf extension with canonical-form dedup. Counts follow the
// free tree sequence 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551.
inline std::vector<Tree> enumerate_trees(int n) {
    if (n < 1) fail(errc::bad_parameter, "enumerate_trees needs n >= 1");
    if (n > 12) fail(errc::too_large, "enumerate_trees capped at n = 12");
    std::vector<Tree> level{build_tree(1, {})};
    for (int k = 2; k <= n; ++k) {
        std::vector<Tree> next;
        std::unordered_set<std::string> seen;
        for (const Tree& t : level) {
            for (int v = 0; v < t.n; ++v) {
                auto edges = t.edges;
                edges.emplace_back(v, t.n);
                Tree cand = build_tree(k, edges);
                if (seen.insert(canonical_form(cand)).second)
                    next.push_back(std::move(cand));
            }
        }
        level.swap(next);
    }
    return level;
}

} // namespace treedyn

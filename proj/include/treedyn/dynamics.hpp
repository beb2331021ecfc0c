#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treedyn/error.hpp"
#include "treedyn/tree.hpp"

namespace treedyn {

enum class Process { minority, majority };

inline const char* process_name(Process p) {
    return p == Process::minority ? "min" : "maj";
}

struct Coloring {
    std::vector<std::uint8_t> bits;

    Coloring() = default;
    explicit Coloring(std::vector<std::uint8_t> b) : bits(std::move(b)) {}
    static Coloring zeros(int n) { return Coloring(std::vector<std::uint8_t>(n, 0)); }

    int n() const { return static_cast<int>(bits.size()); }

    Coloring complement() const {
        Coloring out = *this;
        for (auto& b : out.bits) b ^= 1;
        return out;
    }

    std::string to_string() const {
        std::string s(bits.size(), '0');
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) s[i] = '1';
        return s;
    }

    bool operator==(const Coloring& o) const { return bits == o.bits; }
    bool operator!=(const Coloring& o) const { return bits != o.bits; }
    bool operator<(const Coloring& o) const { return bits < o.bits; }
};

// One synchronous round. A node flips exactly when its same-color
// neighborhood strictly outweighs the other color (minority) or is strictly
// outweighed by it (majority); ties keep the current color.
inline Coloring step(const Tree& t, const Coloring& c, Process p) {
    if (c.n() != t.n) fail(errc::size_mismatch, "coloring length must equal node count");
    Coloring out = c;
    for (int v = 0; v < t.n; ++v) {
        int same = 0;
        for (int w : t.adj[v]) same += (c.bits[w] == c.bits[v]);
        int diff = t.degree(v) - same;
        bool flip = p == Process::minority ? (same > diff) : (same < diff);
        if (flip) out.bits[v] ^= 1;
    }
    return out;
}

enum class OrbitClass { fixed, pure_two_cycle, mixed_two_cycle, transient };

inline OrbitClass classify(const Tree& t, const Coloring& c, Process p) {
    Coloring c1 = step(t, c, p);
    if (c1 == c) return OrbitClass::fixed;
    if (step(t, c1, p) != c) return OrbitClass::transient;
    return c1 == c.complement() ? OrbitClass::pure_two_cycle
                                : OrbitClass::mixed_two_cycle;
}

struct OrbitReport {
    long transient = 0;                // rounds until the orbit enters its cycle
    int period = 1;                    // 1 or 2
    std::vector<Coloring> cycle;       // the cycle colorings, entry point first
};

// Iterates step until the orbit repeats. The 4n^2 guard backs the O(n^2)
// stabilization bound; exceeding it is a contract violation, not truncation.
inline OrbitReport run_orbit(const Tree& t, const Coloring& c0, Process p,
                             long guard = -1) {
    if (guard < 0) guard = 4L * t.n * t.n;
    Coloring prev = c0;
    Coloring cur = step(t, prev, p);
    if (cur == prev) return {0, 1, {prev}};
    Coloring nxt = step(t, cur, p);
    long transient = 0;
    long rounds = 2;
    while (true) {
        if (nxt == prev) return {transient, 2, {prev, cur}};
        if (nxt == cur) return {transient + 1, 1, {cur}};
        prev = std::move(cur);
        cur = std::move(nxt);
        nxt = step(t, cur, p);
        ++transient;
        ++rounds;
        if (rounds > guard)
            fail(errc::guard_exceeded, "orbit exceeded the 4n^2 round guard");
    }
}

struct NodePartition {
    std::vector<int> fixed_nodes;
    std::vector<int> toggle_nodes;
};

inline NodePartition node_partition(const Tree& t, const Coloring& c, Process p) {
    if (classify(t, c, p) == OrbitClass::transient)
        fail(errc::not_periodic, "coloring is not on a cycle");
    Coloring c1 = step(t, c, p);
    NodePartition out;
    for (int v = 0; v < t.n; ++v)
        (c1.bits[v] == c.bits[v] ? out.fixed_nodes : out.toggle_nodes).push_back(v);
    return out;
}

} // namespace treedyn

#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "treedyn/block_enum.hpp"
#include "treedyn/dynamics.hpp"
#include "treedyn/error.hpp"
#include "treedyn/fixed_enum.hpp"
#include "treedyn/tree.hpp"

namespace treedyn {

// Text tree format: line 1 holds n, the next n-1 lines hold "u w" with
// 0-based indices. '#' starts a comment line; node 0 is v*.
inline Tree read_tree(std::istream& in) {
    std::vector<std::string> lines;
    std::string raw;
    while (std::getline(in, raw)) {
        std::size_t start = raw.find_first_not_of(" \t\r");
        if (start == std::string::npos || raw[start] == '#') continue;
        lines.push_back(raw);
    }
    if (lines.empty()) fail(errc::parse, "empty tree file");
    std::istringstream head(lines[0]);
    int n = 0;
    if (!(head >> n)) fail(errc::parse, "first line must be the node count");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream ls(lines[i]);
        int u, w;
        if (!(ls >> u >> w)) fail(errc::parse, "edge line must be two integers");
        edges.emplace_back(u, w);
    }
    return build_tree(n, edges);
}

inline Tree read_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse, "cannot open " + path);
    return read_tree(in);
}

inline void write_tree(std::ostream& out, const Tree& t) {
    out << t.n << "\n";
    for (auto [u, w] : t.edges) out << u << " " << w << "\n";
}

inline Coloring parse_coloring(const std::string& s, int n) {
    if (static_cast<int>(s.size()) != n)
        fail(errc::parse, "coloring must have one bit per node");
    Coloring c = Coloring::zeros(n);
    for (int i = 0; i < n; ++i) {
        if (s[i] != '0' && s[i] != '1') fail(errc::parse, "coloring must be a 0/1 string");
        c.bits[i] = s[i] == '1';
    }
    return c;
}

inline std::string to_dot(const Tree& t) {
    std::ostringstream out;
    out << "graph tree {\n";
    for (int v = 0; v < t.n; ++v) out << "  " << v << " [label=\"" << v << "\"];\n";
    for (auto [u, w] : t.edges) out << "  " << u << " -- " << w << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string to_dot(const BlockTree& bt) {
    std::ostringstream out;
    out << "graph blocktree {\n";
    for (int c = 0; c < bt.forest.component_count(); ++c) {
        bool fixed = bt.kind[c] == BlockKind::fixed_block;
        out << "  b" << c << " [shape=" << (fixed ? "box" : "ellipse") << " label=\"{";
        const auto& nodes = bt.forest.components[c];
        for (std::size_t i = 0; i < nodes.size(); ++i)
            out << (i ? "," : "") << nodes[i];
        out << "} " << (fixed ? "fixed" : "toggle") << "\"];\n";
    }
    for (const auto& qe : bt.forest.quotient_edges)
        out << "  b" << qe.comp_u << " -- b" << qe.comp_w << ";\n";
    out << "}\n";
    return out.str();
}

inline nlohmann::json enumeration_to_json(const Tree& t, const EnumerationResult& r,
                                          const std::string& kind,
                                          bool both_representatives = false) {
    nlohmann::json j;
    j["n"] = t.n;
    j["process"] = process_name(r.process);
    j["kind"] = kind;
    j["representatives"] = nlohmann::json::array();
    for (const auto& item : r.items) {
        nlohmann::json rep;
        rep["edges"] = item.set.edge_indices();
        rep["coloring"] = item.coloring.to_string();
        if (both_representatives)
            rep["complement_coloring"] = item.coloring.complement().to_string();
        j["representatives"].push_back(std::move(rep));
    }
    j["total"] = r.total;
    return j;
}

inline nlohmann::json block_enumeration_to_json(const Tree& t,
                                                const std::vector<EdgeSubset>& sets,
                                                Process p) {
    nlohmann::json j;
    j["n"] = t.n;
    j["process"] = process_name(p);
    j["kind"] = "block";
    j["representatives"] = nlohmann::json::array();
    for (const auto& f : sets) {
        Coloring c = canonical_coloring(t, f, p);
        BlockTree bt = block_tree_of(t, c, p);
        nlohmann::json rep;
        rep["edges"] = f.edge_indices();
        rep["canonical_coloring"] = c.to_string();
        rep["blocks"] = nlohmann::json::array();
        for (int comp = 0; comp < bt.forest.component_count(); ++comp) {
            nlohmann::json b;
            b["nodes"] = bt.forest.components[comp];
            b["kind"] = bt.kind[comp] == BlockKind::fixed_block ? "fixed" : "toggle";
            rep["blocks"].push_back(std::move(b));
        }
        j["representatives"].push_back(std::move(rep));
    }
    j["total"] = sets.size();
    return j;
}

} // namespace treedyn

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "helpers.hpp"
#include "treedyn/treedyn.hpp"

using namespace treedyn;

TEST_CASE("fixed_components") {
    SECTION("paths have none") {
        for (int n : {2, 5, 8}) {
            Tree t = make_path(n);
            CHECK(fixed_components(t, EdgeSubset::empty(t)).empty());
        }
    }
    SECTION("a single node is its own fixed component") {
        Tree t = make_path(1);
        CHECK(fixed_components(t, EdgeSubset::empty(t)) == std::vector<int>{0});
    }
    SECTION("H_10 split at the middle E^3 edge has none") {
        Tree t = make_comb(10);
        CHECK(fixed_components(t, EdgeSubset(t, {2})).empty());
    }
    SECTION("edges outside E^2.5 are rejected") {
        Tree t = make_path(6);
        CHECK_THROWS_AS(fixed_components(t, EdgeSubset(t, {2})), Error);
    }
}

TEST_CASE("is_block_legal") {
    SECTION("empty set is legal on paths") {
        for (int n : {2, 4, 7}) {
            Tree t = make_path(n);
            CHECK(is_block_legal(t, EdgeSubset::empty(t)));
        }
    }
    SECTION("star edges are not in E^2.5") {
        Tree t = make_star(5);
        for (int e = 0; e < t.edge_count(); ++e)
            CHECK_FALSE(is_block_legal(t, EdgeSubset(t, {e})));
    }
    SECTION("the spider block set with a forced fixed component on the v* side's opposite class") {
        Tree t = testing::spider9();
        CHECK(is_block_legal(t, EdgeSubset(t, {0})));
    }
    SECTION("odd-degree singletons are illegal") {
        // cutting both edges around a degree-2 node leaves an even singleton
        Tree t = build_tree(7, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}});
        REQUIRE(t.degree(1) == 2);
        EdgeSubset both(t, {0, 1});
        CHECK(is_block_legal(t, both));
        // a degree-3 node cut free would be an odd singleton
        Tree u = build_tree(9, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5},
                                {2, 6}, {2, 7}, {3, 8}});
        CHECK_FALSE(is_block_legal(u, EdgeSubset(u, {0, 1, 2})));
    }
}

TEST_CASE("non-hereditary witness") {
    Tree t = testing::witness8();
    EdgeSubset f(t, {0, 1, 3});
    EdgeSubset sub(t, {1, 3});
    CHECK(is_block_legal(t, f));
    CHECK_FALSE(is_block_legal(t, sub));

    std::set<std::vector<int>> family;
    for (const auto& g : enumerate_block(t)) family.insert(g.edge_indices());
    CHECK(family.count(f.edge_indices()) == 1);
    CHECK(family.count(sub.edge_indices()) == 0);

    SECTION("the legal set realizes two fixed blocks") {
        Coloring c = canonical_coloring(t, f, Process::minority);
        BlockTree bt = block_tree_of(t, c, Process::minority);
        int fixed_blocks = 0;
        for (auto k : bt.kind) fixed_blocks += k == BlockKind::fixed_block;
        CHECK(bt.forest.component_count() == 4);
        CHECK(fixed_blocks == 2);
        CHECK(bt.edges == f);
    }
}

TEST_CASE("enumerate_block") {
    SECTION("paths have only the empty set") {
        for (int n : {2, 4, 9}) {
            auto sets = enumerate_block(make_path(n));
            REQUIRE(sets.size() == 1);
            CHECK(sets[0].size() == 0);
        }
    }
    SECTION("single node has no block trees") {
        CHECK(enumerate_block(make_path(1)).empty());
    }
    SECTION("all-odd-degree trees: subsets of E^3 with no singletons") {
        Tree t = build_tree(10, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5},
                                 {2, 6}, {2, 7}, {3, 8}, {3, 9}});
        std::set<std::vector<int>> family;
        for (const auto& f : enumerate_block(t)) family.insert(f.edge_indices());
        auto e3 = edge_class(t, EdgeClass::e3).edge_indices();
        std::set<std::vector<int>> expected;
        for (std::uint32_t m = 0; m < (1u << e3.size()); ++m) {
            std::vector<int> chosen;
            for (std::size_t i = 0; i < e3.size(); ++i)
                if (m & (1u << i)) chosen.push_back(e3[i]);
            EdgeSubset f(t, chosen);
            bool singleton = false;
            for (const auto& comp : remove_edges(t, f).components)
                singleton |= comp.size() == 1;
            if (!singleton) expected.insert(f.edge_indices());
        }
        CHECK(family == expected);
    }
    SECTION("matches the oracle's block trees on every tree up to n = 8") {
        for (int n = 1; n <= 8; ++n) {
            for (const Tree& t : enumerate_trees(n)) {
                std::vector<std::vector<int>> mine;
                for (const auto& f : enumerate_block(t)) mine.push_back(f.edge_indices());
                std::sort(mine.begin(), mine.end());
                for (Process p : {Process::minority, Process::majority})
                    CHECK(mine == brute_force(t, p).block_edge_sets);
            }
        }
    }
}

TEST_CASE("block sets need not be fix-legal") {
    Tree t = testing::star_of_paths10();
    Coloring c = parse_coloring("0000111100", 10);
    REQUIRE(classify(t, c, Process::minority) == OrbitClass::mixed_two_cycle);
    BlockTree bt = block_tree_of(t, c, Process::minority);
    CHECK(bt.edges.edge_indices() == std::vector<int>{1, 2, 3, 4});
    CHECK(is_block_legal(t, bt.edges));
    CHECK_FALSE(is_fix_legal(t, bt.edges));
}

TEST_CASE("block_tree_of") {
    SECTION("fixed point: one fixed block covering the tree") {
        Tree t = make_path(4);
        BlockTree bt = block_tree_of(t, parse_coloring("0101", 4), Process::minority);
        REQUIRE(bt.forest.component_count() == 1);
        CHECK(bt.kind[0] == BlockKind::fixed_block);
    }
    SECTION("pure cycle: one toggle block") {
        Tree t = make_path(5);
        BlockTree bt = block_tree_of(t, Coloring::zeros(5), Process::minority);
        REQUIRE(bt.forest.component_count() == 1);
        CHECK(bt.kind[0] == BlockKind::toggle_block);
    }
    SECTION("spider mixed 2-cycle: alternating kinds") {
        Tree t = testing::spider9();
        BlockTree bt = block_tree_of(t, parse_coloring("010000000", 9), Process::minority);
        REQUIRE(bt.forest.component_count() == 2);
        CHECK(bt.kind[bt.forest.component_id[1]] == BlockKind::fixed_block);
        CHECK(bt.kind[bt.forest.component_id[0]] == BlockKind::toggle_block);
        for (const auto& qe : bt.forest.quotient_edges)
            CHECK(bt.kind[qe.comp_u] != bt.kind[qe.comp_w]);
    }
    SECTION("transient is rejected") {
        CHECK_THROWS_AS(
            block_tree_of(make_path(4), parse_coloring("0001", 4), Process::minority),
            Error);
    }
}

TEST_CASE("canonical_coloring") {
    SECTION("empty set gives the monochromatic or independent pure cycle") {
        CHECK(canonical_coloring(make_path(6), EdgeSubset::empty(make_path(6)),
                                 Process::minority) == Coloring::zeros(6));
        Coloring maj = canonical_coloring(make_path(4), EdgeSubset::empty(make_path(4)),
                                          Process::majority);
        CHECK(maj.to_string() == "0101");
    }
    SECTION("single node: the degenerate fixed block") {
        Tree t = make_path(1);
        CHECK(canonical_coloring(t, EdgeSubset::empty(t), Process::majority).to_string() ==
              "0");
    }
    SECTION("illegal sets are rejected") {
        Tree t = testing::witness8();
        CHECK_THROWS_AS(canonical_coloring(t, EdgeSubset(t, {1, 3}), Process::minority),
                        Error);
    }
    SECTION("round trips on larger random trees") {
        std::mt19937_64 rng(61);
        for (int iter = 0; iter < 40; ++iter) {
            Tree t = random_tree(11 + int(rng() % 6), rng());
            if (edge_class(t, EdgeClass::e25).size() > 14) continue;
            for (const auto& f : enumerate_block(t)) {
                for (Process p : {Process::minority, Process::majority}) {
                    Coloring c = canonical_coloring(t, f, p);
                    CHECK(block_tree_of(t, c, p).edges == f);
                }
            }
        }
    }
    SECTION("reproduces its block edge set on every tree up to n = 8") {
        for (int n = 2; n <= 8; ++n) {
            for (const Tree& t : enumerate_trees(n)) {
                for (const auto& f : enumerate_block(t)) {
                    for (Process p : {Process::minority, Process::majority}) {
                        Coloring c = canonical_coloring(t, f, p);
                        CHECK(c.bits[Tree::vstar] == 0);
                        CHECK(step(t, step(t, c, p), p) == c);
                        BlockTree bt = block_tree_of(t, c, p);
                        CHECK(bt.edges == f);
                    }
                }
            }
        }
    }
}

TEST_CASE("block tree structural laws hold on oracle cycles") {
    for (int n = 2; n <= 8; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            for (Process p : {Process::minority, Process::majority}) {
                auto oracle = brute_force(t, p);
                std::vector<std::uint32_t> cycles = oracle.pure;
                cycles.insert(cycles.end(), oracle.mixed.begin(), oracle.mixed.end());
                for (std::uint32_t m : cycles) {
                    Coloring c = coloring_from_mask(n, m);
                    BlockTree bt = block_tree_of(t, c, p);
                    CHECK(is_block_legal(t, bt.edges));
                    for (int e : bt.edges.edge_indices()) {
                        auto [u, w] = t.edges[e];
                        int lo = std::min(t.degree(u), t.degree(w));
                        int hi = std::max(t.degree(u), t.degree(w));
                        CHECK(lo >= 2);
                        CHECK(hi >= 3);
                        // degree-2 endpoints of block edges are fixed nodes
                        Coloring c1 = step(t, c, p);
                        if (t.degree(u) == 2) CHECK(c1.bits[u] == c.bits[u]);
                        if (t.degree(w) == 2) CHECK(c1.bits[w] == c.bits[w]);
                    }
                    for (int comp = 0; comp < bt.forest.component_count(); ++comp) {
                        const auto& nodes = bt.forest.components[comp];
                        if (bt.kind[comp] == BlockKind::toggle_block)
                            CHECK(nodes.size() >= 2);
                        if (nodes.size() == 1) {
                            CHECK(bt.kind[comp] == BlockKind::fixed_block);
                            CHECK(t.degree(nodes[0]) % 2 == 0);
                        }
                        // component-leaves of even tree-degree force a fixed block
                        for (int v : nodes)
                            if (t.degree(v) % 2 == 0 &&
                                t.degree(v) - bt.edges.fv(v) == 1)
                                CHECK(bt.kind[comp] == BlockKind::fixed_block);
                    }
                    // restriction of c: fixed blocks are fixed points, toggle
                    // blocks pure cycles (checked via node statuses)
                    Coloring c1 = step(t, c, p);
                    for (int comp = 0; comp < bt.forest.component_count(); ++comp)
                        for (int v : bt.forest.components[comp])
                            CHECK((c1.bits[v] == c.bits[v]) ==
                                  (bt.kind[comp] == BlockKind::fixed_block));
                }
            }
        }
    }
}

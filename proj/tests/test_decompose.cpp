#include <doctest.h>

#include <algorithm>
#include <set>

#include "degpath/decompose.hpp"
#include "degpath/oracle.hpp"
#include "fixtures.hpp"

using namespace degpath;

namespace {

/// Two triangles sharing vertex 0.
Graph bowtie() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

/// Three triangles chained: 0-1-2, 2-3-4, 4-5-6.
Graph triangle_chain() {
    return Graph::from_edges(
        7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {4, 5}, {5, 6}, {6, 4}});
}

}  // namespace

TEST_CASE("degeneracy on standard graphs") {
    CHECK(degeneracy(fixtures::complete_graph(5)) == 4);
    CHECK(degeneracy(fixtures::cycle_graph(6)) == 2);
    CHECK(degeneracy(fixtures::petersen()) == 3);
}

TEST_CASE("core_decomposition satisfies the peeling invariants") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = fixtures::random_graph(seed, 4 + static_cast<int>(seed % 8), 0.4);
        CoreDecomposition cd = core_decomposition(g);
        REQUIRE(static_cast<int>(cd.order.size()) == g.vertex_count());
        std::vector<int> pos(cd.order.size());
        for (std::size_t i = 0; i < cd.order.size(); ++i)
            pos[static_cast<std::size_t>(cd.order[i])] = static_cast<int>(i);
        int max_core = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int later = 0;
            for (int u : g.neighbors(v))
                if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) ++later;
            CHECK(later <= cd.degeneracy);
            max_core = std::max(max_core, cd.core[static_cast<std::size_t>(v)]);
        }
        CHECK(max_core == cd.degeneracy);
    }
}

TEST_CASE("every induced subgraph has a vertex of degree at most dg") {
    std::mt19937_64 mt(99);
    for (int sample = 0; sample < 200; ++sample) {
        Graph g = fixtures::random_graph(mt(), 8, 0.5);
        int d = degeneracy(g);
        std::vector<int> verts;
        for (int v = 0; v < 8; ++v)
            if (mt() % 2) verts.push_back(v);
        if (verts.empty()) continue;
        int min_deg = 1 << 20;
        for (int v : verts) {
            int deg = 0;
            for (int u : g.neighbors(v))
                if (std::find(verts.begin(), verts.end(), u) != verts.end()) ++deg;
            min_deg = std::min(min_deg, deg);
        }
        CHECK(min_deg <= d);
    }
}

TEST_CASE("d_core picks a deterministic deepest core") {
    SUBCASE("two K5s joined by a bridge") {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) {
                e.emplace_back(i, j);
                e.emplace_back(5 + i, 5 + j);
            }
        e.emplace_back(4, 5);
        Graph g = Graph::from_edges(10, e);
        auto core = d_core(g, 4);
        REQUIRE(core.has_value());
        // The bridge keeps every degree at 4 or above, so the inclusion-maximal
        // connected subgraph with minimum degree 4 is the whole graph.
        CHECK(core->size() == 10);
    }
    SUBCASE("C6 has no 3-core") { CHECK_FALSE(d_core(fixtures::cycle_graph(6), 3).has_value()); }
    SUBCASE("Petersen's 3-core is everything") {
        auto core = d_core(fixtures::petersen(), 3);
        REQUIRE(core.has_value());
        CHECK(core->size() == 10);
    }
}

TEST_CASE("d_core equals definition-based enumeration on small graphs") {
    // A valid answer is an inclusion-maximal connected induced subgraph with
    // minimum degree >= d.
    std::mt19937_64 mt(3);
    for (int sample = 0; sample < 60; ++sample) {
        int n = 4 + static_cast<int>(mt() % 5);  // 4..8
        Graph g = fixtures::random_graph(mt(), n, 0.5);
        for (int d = 1; d <= 4; ++d) {
            auto core = d_core(g, d);
            std::vector<std::set<int>> feasible;
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                std::vector<int> verts;
                for (int v = 0; v < n; ++v)
                    if ((mask >> v) & 1) verts.push_back(v);
                bool ok = detail::set_connected(g, verts);
                for (int v : verts) {
                    int deg = 0;
                    for (int u : g.neighbors(v))
                        if ((mask >> u) & 1) ++deg;
                    if (deg < d) ok = false;
                }
                if (ok) feasible.emplace_back(verts.begin(), verts.end());
            }
            std::vector<std::set<int>> maximal;
            for (const auto& a : feasible) {
                bool dominated = false;
                for (const auto& b : feasible)
                    if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end()))
                        dominated = true;
                if (!dominated) maximal.push_back(a);
            }
            if (!core) {
                CHECK(maximal.empty());
            } else {
                std::set<int> got(core->begin(), core->end());
                CHECK(std::find(maximal.begin(), maximal.end(), got) != maximal.end());
            }
        }
    }
}

TEST_CASE("blocks_and_cuts on the canonical fixtures") {
    SUBCASE("two triangles sharing a vertex") {
        BlockTree bt = blocks_and_cuts(bowtie());
        CHECK(bt.blocks.size() == 2);
        CHECK(bt.cut_vertices == std::vector<int>{0});
    }
    SUBCASE("C5 is a single block") {
        BlockTree bt = blocks_and_cuts(fixtures::cycle_graph(5));
        CHECK(bt.blocks.size() == 1);
        CHECK(bt.cut_vertices.empty());
    }
    SUBCASE("P4 splits into three bridge blocks") {
        BlockTree bt = blocks_and_cuts(fixtures::path_graph(4));
        CHECK(bt.blocks.size() == 3);
        CHECK(bt.cut_vertices == std::vector<int>{1, 2});
    }
    SUBCASE("disconnected input is rejected") {
        Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
        CHECK_THROWS_AS(blocks_and_cuts(g), PreconditionError);
    }
    SUBCASE("every edge lies in exactly one block") {
        std::mt19937_64 mt(8);
        int checked = 0;
        while (checked < 25) {
            Graph g = fixtures::random_graph(mt(), 9, 0.3);
            if (!is_connected(g)) continue;
            ++checked;
            BlockTree bt = blocks_and_cuts(g);
            long covered = 0;
            for (const auto& blk : bt.blocks) {
                for (std::size_t i = 0; i < blk.size(); ++i)
                    for (std::size_t j = i + 1; j < blk.size(); ++j)
                        if (g.has_edge(blk[i], blk[j])) ++covered;
            }
            CHECK(covered == g.edge_count());
        }
    }
}

TEST_CASE("cut vertices match the deletion-based definition") {
    std::mt19937_64 mt(17);
    int checked = 0;
    while (checked < 40) {
        int n = 5 + static_cast<int>(mt() % 6);  // 5..10
        Graph g = fixtures::random_graph(mt(), n, 0.35);
        if (!is_connected(g)) continue;
        ++checked;
        BlockTree bt = blocks_and_cuts(g);
        for (int v = 0; v < n; ++v) {
            std::vector<int> rest;
            for (int u = 0; u < n; ++u)
                if (u != v) rest.push_back(u);
            bool cut = !detail::set_connected(g, rest);
            CHECK(bt.is_cut_vertex(v) == cut);
        }
    }
}

TEST_CASE("connectivity predicates") {
    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(two_k2));
    CHECK(is_two_connected(fixtures::cycle_graph(4)));
    CHECK_FALSE(is_two_connected(fixtures::path_graph(3)));
}

TEST_CASE("block_tree_distance measures bipartite tree distance from the root") {
    SUBCASE("two triangles sharing v") {
        BlockTree bt = blocks_and_cuts(bowtie());
        CHECK(block_tree_distance(bt, 0) == 1);
    }
    SUBCASE("three chained triangles: the far cut is three tree edges away") {
        BlockTree bt = blocks_and_cuts(triangle_chain());
        REQUIRE(bt.blocks.size() == 3);
        // Root is the block containing vertex 0; cut 2 is adjacent to it,
        // cut 4 sits one block further: root - 2 - middle - 4.
        CHECK(block_tree_distance(bt, 2) == 1);
        CHECK(block_tree_distance(bt, 4) == 3);
    }
    SUBCASE("non-cut vertex is rejected") {
        BlockTree bt = blocks_and_cuts(fixtures::cycle_graph(5));
        CHECK_THROWS_AS(block_tree_distance(bt, 0), PreconditionError);
    }
}

TEST_CASE("dense graphs contain long cycles (edge-count floor)") {
    // For m > (n-1) * l / 2 with l >= 2 the longest cycle has > l vertices.
    std::mt19937_64 mt(23);
    for (int sample = 0; sample < 60; ++sample) {
        int n = 4 + static_cast<int>(mt() % 7);  // 4..10
        Graph g = fixtures::random_graph(mt(), n, 0.6);
        auto cyc = brute_longest_cycle(g);
        for (int l = 2; l < n; ++l) {
            if (2 * g.edge_count() > static_cast<long>(n - 1) * l) {
                REQUIRE(cyc.has_value());
                CHECK(cyc->size() >= l + 1);
            }
        }
    }
}

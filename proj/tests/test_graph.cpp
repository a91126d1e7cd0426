#include <doctest.h>

#include <algorithm>
#include <set>

#include "degpath/graph.hpp"
#include "fixtures.hpp"

using namespace degpath;

TEST_CASE("parse_graph accepts plain edge lists") {
    Graph g = parse_graph("0 1\n1 2");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("parse_graph rejects self-loops and duplicates") {
    CHECK_THROWS_AS(parse_graph("0 0"), FormatError);
    CHECK_THROWS_AS(parse_graph("0 1\n1 0"), FormatError);
    CHECK_THROWS_AS(parse_graph("0 1\n0 1"), FormatError);
    CHECK_THROWS_AS(parse_graph("0 x"), FormatError);
}

TEST_CASE("parse_graph honours comments and the header") {
    Graph g = parse_graph("# a comment\np 5 2\n0 1\n3 4\n");
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(parse_graph("p 3 2\n0 1\n"), FormatError);  // m mismatch
}

TEST_CASE("parse then serialize is the identity on canonical lists") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = fixtures::random_graph(seed, 4 + static_cast<int>(seed % 6), 0.5);
        std::string text = serialize_graph(g);
        CHECK(serialize_graph(parse_graph(text)) == text);
    }
}

TEST_CASE("verify_witness checks paths and cycles") {
    Graph c4 = fixtures::cycle_graph(4);

    Witness ok;
    ok.kind = Witness::Kind::path;
    ok.vertices = {0, 1, 2, 3};
    CHECK(verify_witness(c4, ok));

    Witness bad_cycle;
    bad_cycle.kind = Witness::Kind::cycle;
    bad_cycle.vertices = {0, 1, 3, 2};
    CHECK_FALSE(verify_witness(c4, bad_cycle));  // 1 and 3 are not adjacent

    Witness repeat;
    repeat.kind = Witness::Kind::path;
    repeat.vertices = {0, 1, 0};
    CHECK_FALSE(verify_witness(c4, repeat));

    Witness good_cycle;
    good_cycle.kind = Witness::Kind::cycle;
    good_cycle.vertices = {0, 1, 2, 3};
    CHECK(verify_witness(c4, good_cycle));

    Witness two_cycle;
    two_cycle.kind = Witness::Kind::cycle;
    two_cycle.vertices = {0, 1};
    CHECK_FALSE(verify_witness(c4, two_cycle));  // cycles need >= 3 vertices
}

TEST_CASE("contract collapses connected groups") {
    SUBCASE("P4 with {1,2} becomes P3") {
        Graph p4 = fixtures::path_graph(4);
        auto [q, map] = contract(p4, {{1, 2}});
        CHECK(q.vertex_count() == 3);
        CHECK(q.edge_count() == 2);
        CHECK(map.members.size() == 3);
    }
    SUBCASE("K4 with {0,1},{2,3} becomes K2") {
        Graph k4 = fixtures::complete_graph(4);
        auto [q, map] = contract(k4, {{0, 1}, {2, 3}});
        CHECK(q.vertex_count() == 2);
        CHECK(q.edge_count() == 1);
    }
    SUBCASE("disconnected group is rejected") {
        Graph c6 = fixtures::cycle_graph(6);
        CHECK_THROWS_AS(contract(c6, {{0, 3}}), PreconditionError);
    }
    SUBCASE("all-singleton contraction reproduces the graph") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            Graph g = fixtures::random_graph(seed, 3 + static_cast<int>(seed % 6), 0.5);
            auto [q, map] = contract(g, {});
            REQUIRE(q.vertex_count() == g.vertex_count());
            REQUIRE(q.edge_count() == g.edge_count());
            // Blob ids are assigned by increasing minimum member, so singleton
            // blobs reproduce the vertex ids themselves.
            for (int v = 0; v < g.vertex_count(); ++v)
                for (int u : g.neighbors(v)) CHECK(q.has_edge(map.blob_of[v], map.blob_of[u]));
        }
    }
}

TEST_CASE("lift_cycle expands quotient cycles back into the host graph") {
    SUBCASE("singleton blobs lift to the identical cycle") {
        Graph c4 = fixtures::cycle_graph(4);
        auto [q, map] = contract(c4, {});
        Witness w = lift_cycle(c4, map, {0, 1, 2, 3});
        CHECK(w.kind == Witness::Kind::cycle);
        CHECK(w.vertices == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("a path blob inside a quotient triangle lifts to >= 3 vertices") {
        // C4 with {1,2} contracted is a triangle.
        Graph c4 = fixtures::cycle_graph(4);
        auto [q, map] = contract(c4, {{1, 2}});
        REQUIRE(q.vertex_count() == 3);
        Witness w = lift_cycle(c4, map, {0, 1, 2});
        CHECK(verify_witness(c4, w));
        CHECK(w.size() >= 3);
    }
    SUBCASE("blob of size 3 traversed end to end gains vertices") {
        // 0 - (1-2-3) - 4 - 0; contracting {1,2,3} gives a triangle.
        Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
        auto [q, map] = contract(g, {{1, 2, 3}});
        REQUIRE(q.vertex_count() == 3);
        Witness w = lift_cycle(g, map, {0, 1, 2});
        CHECK(verify_witness(g, w));
        CHECK(w.size() >= 4);  // quotient length 3 plus at least one gained vertex
    }
    SUBCASE("lifted length never drops below the quotient length") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Graph g = fixtures::cycle_graph(6);
            auto [q, map] = contract(g, {{0, 1}});
            Witness w = lift_cycle(g, map, {0, 1, 2, 3, 4});
            CHECK(verify_witness(g, w));
            CHECK(w.size() >= 5);
        }
    }
}

TEST_CASE("induced_subgraph keeps ids sorted and edges intact") {
    Graph g = fixtures::cycle_graph(5);
    auto [h, ids] = induced_subgraph(g, {3, 0, 4});
    CHECK(ids == std::vector<int>{0, 3, 4});
    CHECK(h.vertex_count() == 3);
    CHECK(h.has_edge(1, 2));   // 3-4
    CHECK(h.has_edge(0, 2));   // 0-4
    CHECK_FALSE(h.has_edge(0, 1));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "support/fixtures.hpp"

using namespace acp;
using namespace acp::fixtures;

TEST_CASE("tetrahedron validates") {
    CHECK(validate_triangulation(tetrahedron()).empty());
}

TEST_CASE("reversed face breaks orientation parity") {
    Triangulation t = tetrahedron();
    std::swap(t.faces[3][0], t.faces[3][1]);
    auto bad = validate_triangulation(t);
    REQUIRE(!bad.empty());
    bool found = false;
    for (auto& b : bad) found |= b.find("same-orientation") != std::string::npos;
    CHECK(found);
}

TEST_CASE("one-vertex torus face repeats a vertex") {
    Triangulation t{1, 1, {{0, 0, 0}, {0, 0, 0}}};
    auto bad = validate_triangulation(t);
    REQUIRE(!bad.empty());
    CHECK(bad[0].find("repeats a vertex") != std::string::npos);
}

TEST_CASE("euler mismatch is reported") {
    Triangulation t = tetrahedron();
    t.genus = 1;
    auto bad = validate_triangulation(t);
    REQUIRE(!bad.empty());
    CHECK(bad[0].find("Euler") != std::string::npos);
}

TEST_CASE("fixture suite is valid and satisfies 3F = 2E") {
    for (auto t : {tetrahedron(), octahedron(), icosahedron(), k7_torus(), square_torus(), genus2()}) {
        auto bad = validate_triangulation(t);
        for (auto& b : bad) MESSAGE(b);
        CHECK(bad.empty());
        CHECK(3 * t.faces.size() == 2 * t.edge_list().size());
    }
}

TEST_CASE("K4 completes to the tetrahedron with identity injection") {
    auto eg = k4_graph();
    auto res = complete_to_triangulation(eg.graph, eg.rotation);
    CHECK(res.triangulation.vertex_count == 4);
    CHECK(res.triangulation.faces.size() == 4);
    CHECK(res.triangulation.genus == 0);
    CHECK(validate_triangulation(res.triangulation).empty());
    for (int i = 0; i < 4; ++i) CHECK(res.vertex_injection[i] == i);
}

TEST_CASE("C4 stellates to six vertices containing the cycle") {
    auto eg = c4_graph();
    auto res = complete_to_triangulation(eg.graph, eg.rotation);
    CHECK(res.triangulation.vertex_count == 6);
    CHECK(validate_triangulation(res.triangulation).empty());
    auto edges = res.triangulation.edge_list();
    std::set<VertexPair> es(edges.begin(), edges.end());
    for (auto& e : eg.graph.edges) CHECK(es.count(e) == 1);
}

TEST_CASE("P2 completes to a sphere triangulation containing its edge") {
    auto eg = p2_graph();
    auto res = complete_to_triangulation(eg.graph, eg.rotation);
    CHECK(validate_triangulation(res.triangulation).empty());
    CHECK(res.triangulation.genus == 0);
    CHECK(res.triangulation.vertex_count == 4);  // tetrahedron completion
    auto edges = res.triangulation.edge_list();
    std::set<VertexPair> es(edges.begin(), edges.end());
    CHECK(es.count({0, 1}) == 1);
}

TEST_CASE("completion corpus always validates and embeds the input") {
    for (auto eg : {k4_graph(), c4_graph(), p2_graph(), p3_graph(), wheel5_graph(), cube_graph()}) {
        auto res = complete_to_triangulation(eg.graph, eg.rotation);
        auto bad = validate_triangulation(res.triangulation);
        for (auto& b : bad) MESSAGE(b);
        CHECK(bad.empty());
        auto edges = res.triangulation.edge_list();
        std::set<VertexPair> es(edges.begin(), edges.end());
        for (auto& e : eg.graph.edges) CHECK(es.count(e) == 1);
    }
}

TEST_CASE("disconnected graph is rejected") {
    SimpleGraph g = SimpleGraph::create(4, {{0, 1}, {2, 3}});
    RotationSystem rot{{{1}, {0}, {3}, {2}}};
    CHECK_THROWS_WITH_AS(complete_to_triangulation(g, rot), "graph is not connected", Error);
}

TEST_CASE("toroidal rotation system is rejected as non-planar") {
    // K5 is not planar; any rotation system traces genus > 0
    std::vector<VertexPair> edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) edges.push_back({i, j});
    SimpleGraph g = SimpleGraph::create(5, edges);
    RotationSystem rot;
    for (int v = 0; v < 5; ++v) {
        std::vector<int> nb;
        for (int w = 0; w < 5; ++w)
            if (w != v) nb.push_back(w);
        rot.neighbors.push_back(nb);
    }
    try {
        complete_to_triangulation(g, rot);
        FAIL("expected NonPlanarEmbedding");
    } catch (const Error& e) {
        CHECK(e.code() == "NonPlanarEmbedding");
    }
}

TEST_CASE("nonedges") {
    auto k4 = k4_graph().graph;
    CHECK(nonedges(k4).empty());

    // octahedron skeleton: three antipodal pairs
    auto octa = octahedron();
    SimpleGraph g = SimpleGraph::create(octa.vertex_count, octa.edge_list());
    auto ne = nonedges(g);
    CHECK(ne.size() == 3);

    auto c4 = c4_graph().graph;
    auto d = nonedges(c4);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == VertexPair{0, 2});
    CHECK(d[1] == VertexPair{1, 3});
}

TEST_CASE("nonedges and edges partition all pairs") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        std::vector<VertexPair> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 2) edges.push_back({a, b});
        SimpleGraph g = SimpleGraph::create(n, edges);
        auto ne = nonedges(g);
        CHECK(ne.size() + g.edges.size() == static_cast<size_t>(n * (n - 1) / 2));
        for (auto& e : ne) CHECK(!g.has_edge(e.first, e.second));
    }
}

TEST_CASE("simple graph invariants") {
    CHECK_THROWS_AS(SimpleGraph::create(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(SimpleGraph::create(2, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(SimpleGraph::create(2, {{0, 2}}), Error);
}

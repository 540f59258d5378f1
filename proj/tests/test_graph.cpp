#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "circuitry/graph.hpp"
#include "circuitry/instances.hpp"
#include "common.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace circuitry;

TEST_CASE("cycle matroid circuits are the simple cycles") {
    SUBCASE("k4: 4 triangles and 3 four-cycles") {
        Graph k4 = k4_graph();
        Matroid m = cycle_matroid(k4);
        CHECK(m.circuits().size() == 7);
        int triangles = 0, squares = 0;
        for (const EdgeSet& c : m.circuits()) {
            if (c.size() == 3) ++triangles;
            if (c.size() == 4) ++squares;
        }
        CHECK(triangles == 4);
        CHECK(squares == 3);
        CHECK(m.circuits() == oracles::simple_cycles(k4));
    }
    SUBCASE("self-loop is a one-edge circuit") {
        Matroid m = cycle_matroid(named::self_loop());
        CHECK(m.circuits() == std::vector<EdgeSet>{EdgeSet{0}});
    }
    SUBCASE("trees have no circuits") {
        CHECK(cycle_matroid(named::path4()).circuits().empty());
    }
    SUBCASE("parallel pair is a two-edge circuit") {
        CHECK(cycle_matroid(named::digon()).circuits() == std::vector<EdgeSet>{EdgeSet{0, 1}});
    }
    SUBCASE("assorted multigraphs match the cycle oracle") {
        std::vector<Graph> pool{named::two_digons(), named::two_triangles(), named::tournament3(),
                                named::digon(),      named::self_loop(),     named::path4()};
        Graph mixed;  // loop + parallels + bridge in one graph
        mixed.add_arc("l", "u", "u");
        mixed.add_arc("p1", "u", "v");
        mixed.add_arc("p2", "u", "v");
        mixed.add_arc("b", "v", "w");
        pool.push_back(mixed);
        for (std::uint64_t seed = 1; seed <= 15; ++seed) pool.push_back(random_digraph_arcs(4, 7, seed));
        for (const Graph& g : pool) {
            CHECK(cycle_matroid(g).circuits() == oracles::simple_cycles(g));
        }
    }
}

TEST_CASE("cycle matroid cocircuits are the bonds") {
    std::vector<Graph> pool{k4_graph(),    named::two_digons(), named::two_triangles(),
                            named::path4(), named::digon(),     named::tournament3()};
    for (std::uint64_t seed = 1; seed <= 15; ++seed) pool.push_back(random_digraph_arcs(4, 7, seed));
    for (const Graph& g : pool) {
        Matroid m = cycle_matroid(g);
        CHECK(cocircuits(m) == oracles::graph_bonds(g));
    }
}

TEST_CASE("incidence matrices") {
    Graph g = named::tournament3();
    BinaryMatrix b = incidence_gf2(g);
    CHECK(b.rows == 3);
    CHECK(b.cols == 3);
    CHECK(b.at(0, 0) == 1);  // a01 touches v0
    CHECK(b.at(1, 0) == 1);
    CHECK(b.at(2, 0) == 0);

    IntMatrix s = incidence_signed(g);
    CHECK(s.at(0, 0) == 1);   // tail of a01
    CHECK(s.at(1, 0) == -1);  // head of a01
    CHECK(s.at(2, 2) == -1);  // head of a02

    Graph loop = named::self_loop();
    CHECK(incidence_gf2(loop).column_mask(0) == 0);
    CHECK(incidence_signed(loop).at(0, 0) == 0);
}

TEST_CASE("graph plumbing") {
    Graph g;
    g.add_arc("x", "a", "b");
    CHECK_THROWS_AS(g.add_arc("x", "b", "c"), Error);
    CHECK(g.vertex_count() == 2);
    CHECK(g.arc_ground().index_of("x") == 0);

    std::vector<int> comp = named::two_triangles().components_without(EdgeSet{});
    CHECK(comp[0] == comp[1]);
    CHECK(comp[0] != comp[3]);
}

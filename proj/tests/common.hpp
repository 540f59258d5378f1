// Small named instances shared by the unit tests and the acceptance suite.
#pragma once

#include <string>
#include <vector>

#include "circuitry/graph.hpp"
#include "circuitry/instances.hpp"
#include "circuitry/matroid.hpp"

namespace named {

using namespace circuitry;

inline GroundSet ground_n(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    return GroundSet(std::move(labels));
}

inline Matroid triangle() { return matroid_from_circuits(ground_n(3), {EdgeSet{0, 1, 2}}); }

inline Matroid empty_matroid() { return matroid_from_circuits(GroundSet{}, {}); }

inline Matroid coloop() { return matroid_from_circuits(ground_n(1), {}); }

inline Matroid two_coloops() { return matroid_from_circuits(ground_n(2), {}); }

inline Matroid loop_and_coloops() {
    // one loop, two coloops
    return matroid_from_circuits(ground_n(3), {EdgeSet{0}});
}

inline Matroid u24() { return gen_uniform(2, 4); }

inline Graph triangle_digraph() {
    Graph g;
    g.add_arc("a0", "u", "v");
    g.add_arc("a1", "v", "w");
    g.add_arc("a2", "w", "u");
    return g;
}

inline Graph digon() {
    Graph g;
    g.add_arc("a0", "u", "v");
    g.add_arc("a1", "v", "u");
    return g;
}

inline Graph single_arc() {
    Graph g;
    g.add_arc("a0", "u", "v");
    return g;
}

inline Graph self_loop() {
    Graph g;
    g.add_arc("a0", "u", "u");
    return g;
}

inline Graph tournament3() {
    // transitive tournament: 0->1, 1->2, 0->2
    Graph g;
    g.add_arc("a01", "v0", "v1");
    g.add_arc("a12", "v1", "v2");
    g.add_arc("a02", "v0", "v2");
    return g;
}

inline Graph two_digons() {
    // u<->v and v<->w, arc-disjoint
    Graph g;
    g.add_arc("a0", "u", "v");
    g.add_arc("a1", "v", "u");
    g.add_arc("a2", "v", "w");
    g.add_arc("a3", "w", "v");
    return g;
}

inline Graph two_triangles() {
    Graph g;
    g.add_arc("a0", "p", "q");
    g.add_arc("a1", "q", "r");
    g.add_arc("a2", "r", "p");
    g.add_arc("b0", "x", "y");
    g.add_arc("b1", "y", "z");
    g.add_arc("b2", "z", "x");
    return g;
}

inline Graph path4() {
    Graph g;
    g.add_arc("a0", "v0", "v1");
    g.add_arc("a1", "v1", "v2");
    g.add_arc("a2", "v2", "v3");
    return g;
}

inline std::vector<Matroid> small_named_matroids() {
    return {empty_matroid(),
            coloop(),
            two_coloops(),
            loop_and_coloops(),
            triangle(),
            u24(),
            gen_fano(),
            gen_k4(),
            cycle_matroid(two_triangles()),
            cycle_matroid(path4()),
            cycle_matroid(digon()),
            cycle_matroid(self_loop())};
}

}  // namespace named

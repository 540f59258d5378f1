#pragma once

#include <cstdint>
#include <vector>

#include "circuitry/graph.hpp"
#include "circuitry/matroid.hpp"
#include "circuitry/oriented.hpp"

namespace circuitry {

/// Uniform matroid U_{r,n}: circuits are all (r+1)-subsets.
Matroid gen_uniform(int r, int n);

/// The seven nonzero GF(2) vectors of length 3 as columns, labeled by
/// their numeric values "1".."7".
Matroid gen_fano();

/// Cycle matroid of the complete graph on four vertices.
Matroid gen_k4();
Graph k4_graph();

/// Seeded random 0/1 matrix, then the circuits of its column matroid.
Matroid gen_random_gf2(int rows, int cols, std::uint64_t seed, const EnumLimits& limits = {});

/// Composition of seeded random directed cycles (length 1 cycles are
/// self-loops); every vertex ends with equal in- and out-degree, so the
/// result is balanced by construction.
Graph random_eulerian_arcs(int vertices, int arcs, std::uint64_t seed);
OrientedMatroid gen_random_eulerian_digraph(int vertices, int arcs, std::uint64_t seed,
                                            const EnumLimits& limits = {});

/// Seeded random digraph with no degree balancing (may or may not be
/// balanced); companion to the Eulerian generator for mixed test pools.
Graph random_digraph_arcs(int vertices, int arcs, std::uint64_t seed);

/// Finite window {-k..k} of the rank-2 oriented matroid on the integers:
/// every 3-subset i<j<l is a circuit signed (+,-,+), and each cocircuit has
/// support E∖{n} signed +1 below n and -1 above n. Orthogonality holds, yet
/// no circuit is positive; positivity of cocircuits is pinned to the two
/// window boundaries and vanishes as the window grows.
OrientedMatroid gen_z_window(int k, const EnumLimits& limits = {});

struct ZWindowReport {
    int k = 0;
    bool orthogonality_clean = false;
    bool positive_circuit_exists = false;
    bool farkas_all_positive_cocircuit = false;  // every element: farkas -> cocircuit
    std::vector<SignedSet> positive_cocircuits;
    bool positives_boundary_only = false;  // supports are E∖{-k} / E∖{k} only
};

ZWindowReport z_window_report(int k, const EnumLimits& limits = {});

}  // namespace circuitry

#include "circuitry/instances.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace circuitry {

Matroid gen_uniform(int r, int n) {
    if (r < 0 || n < 0 || r > n) throw Error("gen_uniform: need 0 <= r <= n");
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));

    std::vector<EdgeSet> circuits;
    if (r < n) {
        // all (r+1)-subsets
        std::vector<int> pick(static_cast<std::size_t>(r) + 1);
        for (int i = 0; i <= r; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            circuits.push_back(EdgeSet(pick));
            int i = r;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - (r + 1) + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j <= r; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return matroid_from_circuits(GroundSet(std::move(labels)), std::move(circuits));
}

Matroid gen_fano() {
    BinaryMatrix m(3, 7);
    std::vector<std::string> labels;
    for (int c = 0; c < 7; ++c) {
        int value = c + 1;
        labels.push_back(std::to_string(value));
        for (int r = 0; r < 3; ++r) m.set(r, c, static_cast<std::uint8_t>((value >> r) & 1));
    }
    return matroid_from_gf2(m, GroundSet(std::move(labels)));
}

Graph k4_graph() {
    Graph g;
    for (int v = 0; v < 4; ++v) g.vertex("v" + std::to_string(v));
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            g.add_arc("e" + std::to_string(u) + std::to_string(v), "v" + std::to_string(u), "v" + std::to_string(v));
    return g;
}

Matroid gen_k4() { return cycle_matroid(k4_graph()); }

Matroid gen_random_gf2(int rows, int cols, std::uint64_t seed, const EnumLimits& limits) {
    if (rows <= 0 || cols <= 0) throw Error("gen_random_gf2: need positive dimensions");
    std::mt19937_64 rng(seed);
    BinaryMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, static_cast<std::uint8_t>(rng() & 1));
    return matroid_from_gf2(m, limits);
}

namespace {

Graph random_cycle_composition(int vertices, int arcs, std::uint64_t seed, bool balance) {
    if (vertices <= 0 || arcs < 0) throw Error("digraph generator: need positive vertex count");
    std::mt19937_64 rng(seed);
    Graph g;
    for (int v = 0; v < vertices; ++v) g.vertex("v" + std::to_string(v));

    int placed = 0;
    if (balance) {
        while (placed < arcs) {
            int remaining = arcs - placed;
            int max_len = std::min(vertices, remaining);
            int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_len));
            // partial Fisher-Yates for `len` distinct vertices
            std::vector<int> pool(static_cast<std::size_t>(vertices));
            for (int v = 0; v < vertices; ++v) pool[static_cast<std::size_t>(v)] = v;
            for (int i = 0; i < len; ++i) {
                int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(vertices - i));
                std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
            }
            for (int i = 0; i < len; ++i) {
                int from = pool[static_cast<std::size_t>(i)];
                int to = pool[static_cast<std::size_t>((i + 1) % len)];
                g.add_arc("a" + std::to_string(placed), "v" + std::to_string(from), "v" + std::to_string(to));
                ++placed;
            }
        }
    } else {
        for (; placed < arcs; ++placed) {
            int from = static_cast<int>(rng() % static_cast<std::uint64_t>(vertices));
            int to = static_cast<int>(rng() % static_cast<std::uint64_t>(vertices));
            g.add_arc("a" + std::to_string(placed), "v" + std::to_string(from), "v" + std::to_string(to));
        }
    }
    return g;
}

}  // namespace

Graph random_eulerian_arcs(int vertices, int arcs, std::uint64_t seed) {
    return random_cycle_composition(vertices, arcs, seed, true);
}

OrientedMatroid gen_random_eulerian_digraph(int vertices, int arcs, std::uint64_t seed, const EnumLimits& limits) {
    return oriented_from_digraph(random_eulerian_arcs(vertices, arcs, seed), limits);
}

Graph random_digraph_arcs(int vertices, int arcs, std::uint64_t seed) {
    return random_cycle_composition(vertices, arcs, seed, false);
}

OrientedMatroid gen_z_window(int k, const EnumLimits& limits) {
    if (k < 1) throw Error("gen_z_window: need k >= 1");
    const int n = 2 * k + 1;
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int v = -k; v <= k; ++v) labels.push_back(std::to_string(v));

    std::vector<EdgeSet> supports;
    std::vector<SignedSet> circuit_sigs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int l = j + 1; l < n; ++l) {
                supports.push_back(EdgeSet{i, j, l});
                circuit_sigs.push_back(SignedSet(EdgeSet{i, l}, EdgeSet{j}));
            }
        }
    }
    Matroid m = matroid_from_circuits(GroundSet(std::move(labels)), std::move(supports));

    std::vector<SignedSet> cocircuit_sigs;
    for (int hole = 0; hole < n; ++hole) {
        EdgeSet below, above;
        for (int e = 0; e < n; ++e) {
            if (e < hole) below.members.push_back(e);
            if (e > hole) above.members.push_back(e);
        }
        cocircuit_sigs.push_back(SignedSet(std::move(below), std::move(above)).canonical());
    }
    return oriented_from_signature(std::move(m), std::move(circuit_sigs), std::move(cocircuit_sigs), limits);
}

ZWindowReport z_window_report(int k, const EnumLimits& limits) {
    ZWindowReport report;
    report.k = k;
    OrientedMatroid om = gen_z_window(k, limits);
    report.orthogonality_clean = verify_orthogonality(om).ok();

    report.positive_circuit_exists = false;
    for (const SignedSet& c : om.circuit_signature())
        if (c.is_directed()) report.positive_circuit_exists = true;

    for (const SignedSet& d : om.cocircuit_signature())
        if (d.is_directed()) report.positive_cocircuits.push_back(d.is_positive() ? d : d.negated());

    report.farkas_all_positive_cocircuit = true;
    for (int e = 0; e < om.size(); ++e) {
        Certificate cert = farkas(om, e);
        if (cert.kind != Certificate::Kind::PositiveCocircuit) report.farkas_all_positive_cocircuit = false;
    }

    // Positive cocircuits must be exactly the two whose missing element is
    // a window boundary.
    report.positives_boundary_only = report.positive_cocircuits.size() == 2;
    const int n = om.size();
    for (const SignedSet& d : report.positive_cocircuits) {
        EdgeSet support = d.support();
        if (support.size() != n - 1) {
            report.positives_boundary_only = false;
            continue;
        }
        int missing = -1;
        for (int e = 0; e < n; ++e)
            if (!support.contains(e)) missing = e;
        if (missing != 0 && missing != n - 1) report.positives_boundary_only = false;
    }
    return report;
}

}  // namespace circuitry

#pragma once

#include <string>
#include <vector>

#include "circuitry/matroid.hpp"
#include "circuitry/types.hpp"

namespace circuitry {

/// Multigraph with named arcs. Undirected uses ignore the tail/head
/// orientation; parallel arcs and self-loops are allowed.
struct Graph {
    struct Arc {
        std::string name;
        int tail = -1;
        int head = -1;

        bool operator==(const Arc&) const = default;
    };

    std::vector<std::string> vertex_names;
    std::vector<Arc> arcs;

    int vertex(const std::string& name);          // adds if missing
    int find_vertex(const std::string& name) const;  // -1 if missing
    void add_arc(const std::string& name, const std::string& tail, const std::string& head);

    int vertex_count() const { return static_cast<int>(vertex_names.size()); }
    int arc_count() const { return static_cast<int>(arcs.size()); }

    /// Ground set of the cycle matroid: arc names in declaration order.
    GroundSet arc_ground() const;

    /// Vertex component ids after removing the arcs in `removed`.
    std::vector<int> components_without(const EdgeSet& removed) const;

    bool operator==(const Graph&) const = default;
};

using MultiGraph = Graph;
using Digraph = Graph;

/// Vertex-arc incidence over GF(2); a self-loop is a zero column.
BinaryMatrix incidence_gf2(const Graph& g);

/// Signed incidence (network matrix): +1 at the tail, -1 at the head,
/// zero column for a self-loop.
IntMatrix incidence_signed(const Graph& g);

/// Circuits = edge sets of the simple cycles of g, including parallel
/// 2-cycles and self-loops. The GF(2) incidence representation is retained.
Matroid cycle_matroid(const Graph& g, const EnumLimits& limits = {});

}  // namespace circuitry

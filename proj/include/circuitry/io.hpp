#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "circuitry/certificate.hpp"
#include "circuitry/graph.hpp"
#include "circuitry/matroid.hpp"
#include "circuitry/oriented.hpp"

namespace circuitry {

enum class InstanceFormat { Circuits, SignedCircuits, Gf2, Graph, Digraph };

/// Parsed instance file. Line-oriented text with '#' comments:
///   elements a b c          ground set in canonical order
///   circuit a b c           one circuit per line
///   scircuit +a -b +c       signed circuit
///   scocircuit +a -b        optional supplied cocircuit signature
///   gf2 R C                 followed by R rows of C 0/1 entries
///   edge name u v           undirected multigraph edge
///   arc name u v            directed arc
///   vertex u                declares a vertex and its position in the
///                           vertex order (needed for isolated vertices)
/// Exactly one content kind per file.
struct Instance {
    InstanceFormat format = InstanceFormat::Circuits;
    GroundSet ground;  // circuits / signed circuits / gf2 columns
    std::vector<EdgeSet> circuits;
    std::vector<SignedSet> signed_circuits;
    std::vector<SignedSet> signed_cocircuits;
    bool has_cocircuit_lines = false;
    std::optional<BinaryMatrix> gf2;
    std::optional<Graph> graph;

    bool operator==(const Instance&) const = default;
};

Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);

std::string serialize_instance(const Instance& inst);

Matroid to_matroid(const Instance& inst, const EnumLimits& limits = {});

/// Builds the oriented matroid of a digraph or signed-circuit instance.
/// When no cocircuit signature is supplied and `derive_if_absent` is set,
/// the signature is derived (binary instances only).
OrientedMatroid to_oriented(const Instance& inst, const EnumLimits& limits = {}, bool derive_if_absent = true);

Instance instance_from_matroid(const Matroid& m);
Instance instance_from_graph(const Graph& g, bool directed);
Instance instance_from_oriented(const OrientedMatroid& om);

std::string render_edge_set(const GroundSet& ground, const EdgeSet& s);
std::string render_signed_set(const GroundSet& ground, const SignedSet& s);

/// Machine-readable certificate lines ("CERT ..." / "PART: ...").
std::vector<std::string> render_certificate(const GroundSet& ground, const Certificate& cert);

}  // namespace circuitry

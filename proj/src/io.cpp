#include "circuitry/io.hpp"

#include <fstream>
#include <sstream>

namespace circuitry {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    return tokens;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

struct PendingSigned {
    int line;
    std::vector<std::pair<std::string, int>> entries;  // label, sign
};

SignedSet resolve_signed(const GroundSet& ground, const PendingSigned& p) {
    EdgeSet pos, neg;
    for (const auto& [label, sign] : p.entries) {
        int e = ground.index_of(label);
        if (e < 0) throw ParseError(p.line, "unknown element '" + label + "'");
        (sign > 0 ? pos : neg).members.push_back(e);
    }
    return SignedSet(EdgeSet(std::move(pos.members)), EdgeSet(std::move(neg.members)));
}

}  // namespace

Instance parse_instance(std::istream& in) {
    Instance inst;
    std::optional<std::vector<std::string>> element_labels;
    std::vector<std::pair<int, std::vector<std::string>>> circuit_lines;
    std::vector<PendingSigned> scircuit_lines, scocircuit_lines;
    std::optional<Graph> graph;
    bool saw_edge = false, saw_arc = false, saw_vertex = false;
    std::optional<BinaryMatrix> gf2;

    int line_no = 0;
    int gf2_rows_left = 0;
    int gf2_row = 0;
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::vector<std::string> tokens = tokenize(strip_comment(raw));
        if (tokens.empty()) continue;

        if (gf2_rows_left > 0) {
            if (static_cast<int>(tokens.size()) != gf2->cols)
                throw ParseError(line_no, "expected " + std::to_string(gf2->cols) + " entries in matrix row");
            for (int c = 0; c < gf2->cols; ++c) {
                const std::string& t = tokens[static_cast<std::size_t>(c)];
                if (t != "0" && t != "1") throw ParseError(line_no, "matrix entries must be 0 or 1");
                gf2->set(gf2_row, c, t == "1" ? 1 : 0);
            }
            ++gf2_row;
            --gf2_rows_left;
            continue;
        }

        const std::string& keyword = tokens.front();
        if (keyword == "elements") {
            if (element_labels) throw ParseError(line_no, "duplicate elements line");
            element_labels.emplace(tokens.begin() + 1, tokens.end());
        } else if (keyword == "circuit") {
            circuit_lines.push_back({line_no, {tokens.begin() + 1, tokens.end()}});
        } else if (keyword == "scircuit" || keyword == "scocircuit") {
            PendingSigned p;
            p.line = line_no;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const std::string& t = tokens[i];
                if (t.size() < 2 || (t[0] != '+' && t[0] != '-'))
                    throw ParseError(line_no, "signed entries look like +name or -name");
                p.entries.push_back({t.substr(1), t[0] == '+' ? 1 : -1});
            }
            (keyword == "scircuit" ? scircuit_lines : scocircuit_lines).push_back(std::move(p));
        } else if (keyword == "gf2") {
            if (gf2) throw ParseError(line_no, "duplicate gf2 block");
            if (tokens.size() != 3) throw ParseError(line_no, "gf2 needs row and column counts");
            int r = 0, c = 0;
            try {
                r = std::stoi(tokens[1]);
                c = std::stoi(tokens[2]);
            } catch (...) {
                throw ParseError(line_no, "gf2 needs numeric row and column counts");
            }
            if (r <= 0 || c <= 0) throw ParseError(line_no, "gf2 needs positive dimensions");
            gf2.emplace(r, c);
            gf2_rows_left = r;
            gf2_row = 0;
        } else if (keyword == "edge" || keyword == "arc") {
            if (tokens.size() != 4) throw ParseError(line_no, keyword + " needs a name and two endpoints");
            if (!graph) graph.emplace();
            (keyword == "edge" ? saw_edge : saw_arc) = true;
            try {
                graph->add_arc(tokens[1], tokens[2], tokens[3]);
            } catch (const Error& e) {
                throw ParseError(line_no, e.what());
            }
        } else if (keyword == "vertex") {
            if (tokens.size() != 2) throw ParseError(line_no, "vertex needs a name");
            if (!graph) graph.emplace();
            saw_vertex = true;
            graph->vertex(tokens[1]);
        } else {
            throw ParseError(line_no, "unknown keyword '" + keyword + "'");
        }
    }
    if (gf2_rows_left > 0) throw ParseError(line_no, "gf2 block ended early");
    if (saw_edge && saw_arc) throw ParseError(line_no, "file mixes edge and arc lines");
    if (!circuit_lines.empty() && !scircuit_lines.empty())
        throw ParseError(line_no, "file mixes circuit and scircuit lines");

    int kinds = (!circuit_lines.empty() || !scircuit_lines.empty() ? 1 : 0) + (gf2 ? 1 : 0) + (graph ? 1 : 0);
    if (kinds > 1) throw ParseError(line_no, "file mixes content kinds");

    if (graph) {
        if (saw_vertex && saw_edge == false && saw_arc == false && graph->arc_count() == 0)
            throw ParseError(line_no, "graph file has vertices but no edges or arcs");
        inst.format = saw_edge ? InstanceFormat::Graph : InstanceFormat::Digraph;
        inst.graph = std::move(graph);
        return inst;
    }
    if (gf2) {
        if (element_labels && static_cast<int>(element_labels->size()) != gf2->cols)
            throw ParseError(line_no, "elements line does not match matrix columns");
        std::vector<std::string> labels;
        if (element_labels) {
            labels = std::move(*element_labels);
        } else {
            for (int c = 0; c < gf2->cols; ++c) labels.push_back("e" + std::to_string(c));
        }
        inst.format = InstanceFormat::Gf2;
        try {
            inst.ground = GroundSet(std::move(labels));
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
        inst.gf2 = std::move(gf2);
        return inst;
    }

    if (!element_labels) element_labels.emplace();
    try {
        inst.ground = GroundSet(std::move(*element_labels));
    } catch (const Error& e) {
        throw ParseError(line_no, e.what());
    }
    if (!scircuit_lines.empty() || !scocircuit_lines.empty()) {
        inst.format = InstanceFormat::SignedCircuits;
        for (const PendingSigned& p : scircuit_lines) inst.signed_circuits.push_back(resolve_signed(inst.ground, p));
        for (const PendingSigned& p : scocircuit_lines)
            inst.signed_cocircuits.push_back(resolve_signed(inst.ground, p));
        inst.has_cocircuit_lines = !scocircuit_lines.empty();
        return inst;
    }
    inst.format = InstanceFormat::Circuits;
    for (const auto& [line, labels] : circuit_lines) {
        EdgeSet c;
        for (const std::string& label : labels) {
            int e = inst.ground.index_of(label);
            if (e < 0) throw ParseError(line, "unknown element '" + label + "'");
            c.members.push_back(e);
        }
        inst.circuits.push_back(EdgeSet(std::move(c.members)));
    }
    return inst;
}

Instance parse_instance_text(const std::string& text) {
    std::istringstream is(text);
    return parse_instance(is);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream os;
    auto emit_elements = [&](const GroundSet& g) {
        os << "elements";
        for (const std::string& label : g.labels()) os << " " << label;
        os << "\n";
    };
    switch (inst.format) {
        case InstanceFormat::Circuits:
            emit_elements(inst.ground);
            for (const EdgeSet& c : inst.circuits) os << "circuit " << render_edge_set(inst.ground, c) << "\n";
            break;
        case InstanceFormat::SignedCircuits:
            emit_elements(inst.ground);
            for (const SignedSet& c : inst.signed_circuits)
                os << "scircuit " << render_signed_set(inst.ground, c) << "\n";
            for (const SignedSet& d : inst.signed_cocircuits)
                os << "scocircuit " << render_signed_set(inst.ground, d) << "\n";
            break;
        case InstanceFormat::Gf2: {
            emit_elements(inst.ground);
            const BinaryMatrix& m = *inst.gf2;
            os << "gf2 " << m.rows << " " << m.cols << "\n";
            for (int r = 0; r < m.rows; ++r) {
                for (int c = 0; c < m.cols; ++c) os << (c ? " " : "") << static_cast<int>(m.at(r, c));
                os << "\n";
            }
            break;
        }
        case InstanceFormat::Graph:
        case InstanceFormat::Digraph: {
            const Graph& g = *inst.graph;
            const char* keyword = inst.format == InstanceFormat::Graph ? "edge" : "arc";
            // vertex lines pin the vertex order, so the trip is bit-exact
            for (int v = 0; v < g.vertex_count(); ++v)
                os << "vertex " << g.vertex_names[static_cast<std::size_t>(v)] << "\n";
            for (const Graph::Arc& a : g.arcs)
                os << keyword << " " << a.name << " " << g.vertex_names[static_cast<std::size_t>(a.tail)] << " "
                   << g.vertex_names[static_cast<std::size_t>(a.head)] << "\n";
            break;
        }
    }
    return os.str();
}

Matroid to_matroid(const Instance& inst, const EnumLimits& limits) {
    switch (inst.format) {
        case InstanceFormat::Circuits:
            return matroid_from_circuits(inst.ground, inst.circuits);
        case InstanceFormat::SignedCircuits: {
            std::vector<EdgeSet> supports;
            supports.reserve(inst.signed_circuits.size());
            for (const SignedSet& c : inst.signed_circuits) supports.push_back(c.support());
            return matroid_from_circuits(inst.ground, std::move(supports));
        }
        case InstanceFormat::Gf2:
            return matroid_from_gf2(*inst.gf2, inst.ground, limits);
        case InstanceFormat::Graph:
        case InstanceFormat::Digraph:
            return cycle_matroid(*inst.graph, limits);
    }
    throw Error("unreachable instance format");
}

OrientedMatroid to_oriented(const Instance& inst, const EnumLimits& limits, bool derive_if_absent) {
    switch (inst.format) {
        case InstanceFormat::Digraph:
            return oriented_from_digraph(*inst.graph, limits);
        case InstanceFormat::SignedCircuits: {
            Matroid m = to_matroid(inst, limits);
            std::optional<std::vector<SignedSet>> cocirc;
            if (inst.has_cocircuit_lines) cocirc = inst.signed_cocircuits;
            OrientedMatroid om = oriented_from_signature(std::move(m), inst.signed_circuits, std::move(cocirc), limits);
            if (!om.has_cocircuit_signature() && derive_if_absent) return derive_cocircuit_signature(om, limits);
            return om;
        }
        case InstanceFormat::Graph:
            throw Error("undirected instance carries no orientation; use arc lines");
        default:
            throw Error("instance format has no orientation; use arc or scircuit lines");
    }
}

Instance instance_from_matroid(const Matroid& m) {
    Instance inst;
    if (m.representation()) {
        inst.format = InstanceFormat::Gf2;
        inst.ground = m.ground();
        inst.gf2 = m.representation();
    } else {
        inst.format = InstanceFormat::Circuits;
        inst.ground = m.ground();
        inst.circuits = m.circuits();
    }
    return inst;
}

Instance instance_from_graph(const Graph& g, bool directed) {
    Instance inst;
    inst.format = directed ? InstanceFormat::Digraph : InstanceFormat::Graph;
    inst.graph = g;
    return inst;
}

Instance instance_from_oriented(const OrientedMatroid& om) {
    Instance inst;
    inst.format = InstanceFormat::SignedCircuits;
    inst.ground = om.ground();
    inst.signed_circuits = om.circuit_signature();
    if (om.has_cocircuit_signature()) {
        inst.signed_cocircuits = om.cocircuit_signature();
        inst.has_cocircuit_lines = true;
    }
    return inst;
}

std::string render_edge_set(const GroundSet& ground, const EdgeSet& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.members.size(); ++i) os << (i ? " " : "") << ground.label(s.members[i]);
    return os.str();
}

std::string render_signed_set(const GroundSet& ground, const SignedSet& s) {
    std::ostringstream os;
    EdgeSet support = s.support();
    for (std::size_t i = 0; i < support.members.size(); ++i) {
        int e = support.members[i];
        os << (i ? " " : "") << (s.sign(e) > 0 ? "+" : "-") << ground.label(e);
    }
    return os.str();
}

std::vector<std::string> render_certificate(const GroundSet& ground, const Certificate& cert) {
    switch (cert.kind) {
        case Certificate::Kind::Circuit:
            return {"CERT circuit: " + render_edge_set(ground, cert.set_witness)};
        case Certificate::Kind::Cocircuit:
            return {"CERT cocircuit: " + render_edge_set(ground, cert.set_witness)};
        case Certificate::Kind::PositiveCircuit:
            return {"CERT positive-circuit: " + render_signed_set(ground, cert.signed_witness)};
        case Certificate::Kind::PositiveCocircuit:
            return {"CERT positive-cocircuit: " + render_signed_set(ground, cert.signed_witness)};
        case Certificate::Kind::OddCocircuit:
            return {"CERT odd-cocircuit: " + render_edge_set(ground, cert.set_witness)};
        case Certificate::Kind::UnbalancedCocircuit:
            return {"CERT unbalanced-cocircuit: " + render_signed_set(ground, cert.signed_witness)};
        case Certificate::Kind::CounterexampleMatching: {
            std::string line = "CERT counterexample-matching: " + ground.label(cert.element) + " |";
            for (std::size_t i = 0; i < cert.matching.circuits.size(); ++i) {
                line += (i ? " ; " : " ") + render_edge_set(ground, cert.matching.circuits[i]);
            }
            return {line};
        }
        case Certificate::Kind::Partition: {
            std::vector<std::string> lines;
            for (const SignedSet& part : cert.parts) {
                if (cert.directed_parts)
                    lines.push_back("PART: " + render_signed_set(ground, part));
                else
                    lines.push_back("PART: " + render_edge_set(ground, part.support()));
            }
            if (lines.empty()) lines.push_back("PART:");
            return lines;
        }
    }
    return {};
}

}  // namespace circuitry

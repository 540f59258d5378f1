// circuitry: command-line front end for instance checks, certificates, and
// partition solvers over finite matroids and binary oriented matroids.
//
// Exit codes: 0 property holds / object found, 1 property fails with a
// certified counterexample, 2 input or cap error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "circuitry/decompose.hpp"
#include "circuitry/instances.hpp"
#include "circuitry/io.hpp"

using namespace circuitry;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

struct Session {
    std::string file;
    std::string output = "human";
    std::string expected_format;
    EnumLimits limits;

    bool human() const { return output == "human"; }
};

InstanceFormat parse_format_name(const std::string& name) {
    if (name == "circuits") return InstanceFormat::Circuits;
    if (name == "scircuits") return InstanceFormat::SignedCircuits;
    if (name == "gf2") return InstanceFormat::Gf2;
    if (name == "graph") return InstanceFormat::Graph;
    if (name == "digraph") return InstanceFormat::Digraph;
    throw Error("unknown format '" + name + "'");
}

Instance load(const Session& session) {
    Instance inst = load_instance(session.file);
    if (!session.expected_format.empty() && inst.format != parse_format_name(session.expected_format))
        throw Error("instance format does not match --format " + session.expected_format);
    return inst;
}

std::vector<std::string> split_labels(const std::string& csv) {
    std::vector<std::string> out;
    std::string current;
    for (char ch : csv) {
        if (ch == ',' || ch == ' ') {
            if (!current.empty()) out.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) out.push_back(current);
    return out;
}

// Unknown labels are allowed and ignored: minor sets need not live inside
// the ground set.
EdgeSet labels_to_set_lenient(const GroundSet& ground, const std::string& csv) {
    EdgeSet s;
    for (const std::string& label : split_labels(csv)) {
        int e = ground.index_of(label);
        if (e >= 0) s.members.push_back(e);
    }
    return EdgeSet(std::move(s.members));
}

EdgeSet labels_to_set_strict(const GroundSet& ground, const std::string& csv) {
    EdgeSet s;
    for (const std::string& label : split_labels(csv)) {
        int e = ground.index_of(label);
        if (e < 0) throw Error("unknown element '" + label + "'");
        s.members.push_back(e);
    }
    return EdgeSet(std::move(s.members));
}

void print_cert(const GroundSet& ground, const Certificate& cert) {
    for (const std::string& line : render_certificate(ground, cert)) std::cout << line << "\n";
}

int cmd_check_axioms(const Session& session) {
    Instance inst = load(session);
    try {
        to_matroid(inst, session.limits);
    } catch (const AxiomViolation& e) {
        if (session.human()) std::cout << "circuit axioms (nonempty, incomparable, elimination): FAIL\n";
        std::cout << "CERT axiom-violation: " << e.kind << " " << e.witness << "\n";
        return kExitFails;
    }
    if (session.human())
        std::cout << "circuit axioms (nonempty, incomparable, elimination): OK\n";
    else
        std::cout << "OK\n";
    return kExitHolds;
}

int cmd_cocircuits(const Session& session) {
    Matroid m = to_matroid(load(session), session.limits);
    std::vector<EdgeSet> cocircs = cocircuits(m, session.limits);
    if (session.human())
        std::cout << "cocircuits (minimal nonempty sets never meeting a circuit exactly once): " << cocircs.size()
                  << "\n";
    for (const EdgeSet& d : cocircs) std::cout << "COCIRCUIT: " << render_edge_set(m.ground(), d) << "\n";
    return kExitHolds;
}

int cmd_is_binary(const Session& session) {
    Matroid m = to_matroid(load(session), session.limits);
    BinaryWitness w = is_binary(m, session.limits);
    if (session.human())
        std::cout << "binary characterization (every circuit meets every cocircuit evenly): "
                  << (w.binary ? "true" : "false") << "\n";
    std::cout << "BINARY: " << (w.binary ? "yes" : "no") << "\n";
    if (!w.binary) {
        std::cout << "CERT odd-intersection: " << render_edge_set(m.ground(), w.circuit) << " | "
                  << render_edge_set(m.ground(), w.cocircuit) << "\n";
        return kExitFails;
    }
    return kExitHolds;
}

int cmd_minors(const Session& session, const std::string& op, const std::string& set_csv) {
    Instance inst = load(session);
    Matroid m = to_matroid(inst, session.limits);
    EdgeSet f = labels_to_set_lenient(m.ground(), set_csv);
    Matroid minor;
    if (op == "delete")
        minor = deletion(m, f);
    else if (op == "contract")
        minor = contraction(m, f);
    else if (op == "restrict")
        minor = restriction(m, f);
    else if (op == "dot-restrict")
        minor = dot_restriction(m, f);
    else
        throw Error("unknown minor operation '" + op + "' (delete, contract, restrict, dot-restrict)");
    if (session.human()) std::cout << "# " << op << " applied to " << session.file << "\n";
    std::cout << serialize_instance(instance_from_matroid(minor));
    return kExitHolds;
}

int cmd_paint(const Session& session, const std::string& element, const std::string& x_csv) {
    Matroid m = to_matroid(load(session), session.limits);
    int e = m.ground().index_of(element);
    if (e < 0) throw Error("unknown element '" + element + "'");
    EdgeSet x = labels_to_set_strict(m.ground(), x_csv);
    EdgeSet y;
    for (int i = 0; i < m.size(); ++i)
        if (i != e && !x.contains(i)) y.members.push_back(i);
    Certificate cert = paint(m, e, x, y, session.limits);
    if (session.human())
        std::cout << "painting split (circuit inside X or cocircuit inside Y, exactly one): "
                  << (cert.kind == Certificate::Kind::Circuit ? "circuit" : "cocircuit") << "\n";
    print_cert(m.ground(), cert);
    return kExitHolds;
}

int cmd_farkas(const Session& session, const std::string& element) {
    OrientedMatroid om = to_oriented(load(session), session.limits);
    int e = om.ground().index_of(element);
    if (e < 0) throw Error("unknown element '" + element + "'");
    Certificate cert = farkas(om, e);
    if (session.human())
        std::cout << "Farkas dichotomy (positive circuit or positive cocircuit, never both): "
                  << (cert.kind == Certificate::Kind::PositiveCircuit ? "positive circuit" : "positive cocircuit")
                  << "\n";
    print_cert(om.ground(), cert);
    return kExitHolds;
}

int cmd_balanced(const Session& session) {
    OrientedMatroid om = to_oriented(load(session), session.limits);
    BalanceResult r = is_balanced(om);
    if (session.human())
        std::cout << "balance criterion (every signed cocircuit splits evenly): " << (r.balanced ? "true" : "false")
                  << "\n";
    std::cout << "BALANCED: " << (r.balanced ? "yes" : "no") << "\n";
    if (!r.balanced) {
        print_cert(om.ground(), *r.witness);
        return kExitFails;
    }
    return kExitHolds;
}

int cmd_partition(const Session& session) {
    Matroid m = to_matroid(load(session), session.limits);
    std::optional<Certificate> part = exact_partition(m, session.limits);
    if (part) {
        if (session.human()) std::cout << "partition into circuits: found\n";
        print_cert(m.ground(), *part);
        return kExitHolds;
    }
    if (session.human()) std::cout << "partition into circuits: none\n";
    std::cout << "NOPART\n";
    if (is_binary(m, session.limits).binary) {
        std::optional<Certificate> odd = has_odd_cocircuit(m, session.limits);
        if (odd) {
            print_cert(m.ground(), *odd);
            return kExitFails;
        }
    }
    std::cout << "CERT no-partition: search-exhausted\n";
    return kExitFails;
}

int cmd_partition_directed(const Session& session) {
    OrientedMatroid om = to_oriented(load(session), session.limits);
    Certificate cert = greedy_directed_partition(om, session.limits);
    if (cert.kind == Certificate::Kind::Partition) {
        if (session.human()) std::cout << "partition into directed circuits: found\n";
        print_cert(om.ground(), cert);
        return kExitHolds;
    }
    if (session.human()) std::cout << "partition into directed circuits: none (instance is unbalanced)\n";
    print_cert(om.ground(), cert);
    return kExitFails;
}

int cmd_fme(const Session& session, long long matching_cap) {
    Matroid m = to_matroid(load(session), session.limits);
    FmeResult r = is_fme(m, matching_cap > 0 ? matching_cap : session.limits.matching_cap);
    if (r.status == FmeResult::Status::NotFalsified)
        throw SizeLimit("matching enumeration truncated at the cap; result not falsified");
    bool extendable = r.status == FmeResult::Status::Extendable;
    if (session.human())
        std::cout << "finite matching extendability (every matching extends past every uncovered element): "
                  << (extendable ? "true" : "false") << "\n";
    std::cout << "FME: " << (extendable ? "yes" : "no") << "\n";
    if (!extendable) {
        print_cert(m.ground(), *r.witness);
        return kExitFails;
    }
    return kExitHolds;
}

int cmd_welsh(const Session& session) {
    Matroid m = to_matroid(load(session), session.limits);
    std::optional<Certificate> odd = has_odd_cocircuit(m, session.limits);
    std::optional<Certificate> part = exact_partition(m, session.limits);
    bool agree = part.has_value() == !odd.has_value();
    if (session.human()) {
        std::cout << "Welsh criterion (partition into circuits iff no odd cocircuit, on binary instances):\n";
        std::cout << "  odd cocircuit: " << (odd ? "present" : "none") << "\n";
        std::cout << "  exact partition: " << (part ? "found" : "none") << "\n";
        if (!is_binary(m, session.limits).binary)
            std::cout << "  note: instance is not binary; the criterion is not guaranteed\n";
    }
    std::cout << "WELSH: odd-cocircuit=" << (odd ? "yes" : "no") << " partition=" << (part ? "yes" : "no")
              << " agree=" << (agree ? "yes" : "no") << "\n";
    if (part) {
        print_cert(m.ground(), *part);
        return kExitHolds;
    }
    if (odd) {
        print_cert(m.ground(), *odd);
        return kExitFails;
    }
    std::cout << "CERT no-partition: search-exhausted\n";
    return kExitFails;
}

int cmd_gen(const Session& session, const std::string& family, int r, int n, int rows, int cols, int vertices,
            int arcs, std::uint64_t seed, int k) {
    Instance inst;
    if (family == "uniform") {
        inst = instance_from_matroid(gen_uniform(r, n));
    } else if (family == "fano") {
        inst = instance_from_matroid(gen_fano());
    } else if (family == "k4") {
        inst = instance_from_graph(k4_graph(), false);
    } else if (family == "gf2") {
        inst = instance_from_matroid(gen_random_gf2(rows, cols, seed, session.limits));
    } else if (family == "eulerian") {
        inst = instance_from_graph(random_eulerian_arcs(vertices, arcs, seed), true);
    } else if (family == "digraph") {
        inst = instance_from_graph(random_digraph_arcs(vertices, arcs, seed), true);
    } else if (family == "zwindow") {
        inst = instance_from_oriented(gen_z_window(k, session.limits));
    } else {
        throw Error("unknown family '" + family + "' (uniform, fano, k4, gf2, eulerian, digraph, zwindow)");
    }
    std::cout << serialize_instance(inst);
    return kExitHolds;
}

int cmd_z_report(const Session& session, int k) {
    ZWindowReport r = z_window_report(k, session.limits);
    if (session.human()) {
        std::cout << "window " << -k << ".." << k << " of the signed 3-subset family:\n";
        std::cout << "  orthogonality: " << (r.orthogonality_clean ? "clean" : "VIOLATED") << "\n";
        std::cout << "  positive circuit: " << (r.positive_circuit_exists ? "EXISTS" : "none") << "\n";
        std::cout << "  farkas yields a positive cocircuit for every element: "
                  << (r.farkas_all_positive_cocircuit ? "yes" : "NO") << "\n";
        std::cout << "  positive cocircuits pinned to the window boundary: "
                  << (r.positives_boundary_only ? "yes" : "NO") << "\n";
    }
    std::cout << "ZWINDOW: k=" << r.k << " orthogonality=" << (r.orthogonality_clean ? "clean" : "violated")
              << " positive-circuit=" << (r.positive_circuit_exists ? "yes" : "no")
              << " farkas-all-cocircuit=" << (r.farkas_all_positive_cocircuit ? "yes" : "no")
              << " boundary-only=" << (r.positives_boundary_only ? "yes" : "no") << "\n";
    OrientedMatroid om = gen_z_window(k, session.limits);
    for (const SignedSet& d : r.positive_cocircuits)
        std::cout << "CERT positive-cocircuit: " << render_signed_set(om.ground(), d) << "\n";
    bool all_good = r.orthogonality_clean && !r.positive_circuit_exists && r.farkas_all_positive_cocircuit &&
                    r.positives_boundary_only;
    return all_good ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circuitry: circuits, cocircuits, orientations, and circuit partitions of finite matroids"};
    app.require_subcommand(1);

    Session session;
    if (const char* cap = std::getenv("CIRCUITRY_CAP")) {
        try {
            session.limits.ground_cap = std::stoi(cap);
        } catch (...) {
            std::cerr << "error: CIRCUITRY_CAP is not a number\n";
            return kExitError;
        }
    }
    app.add_option("--output", session.output, "output mode: human or machine")
        ->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--format", session.expected_format,
                   "expected instance format: circuits, scircuits, gf2, graph, digraph");
    app.add_option("--max-ground", session.limits.ground_cap, "enumeration cap on ground-set size");
    app.add_option("--max-kernel", session.limits.kernel_cap, "cap on the GF(2) kernel dimension");
    app.add_option("--max-circuits", session.limits.circuit_cap, "cap on enumerated (co)circuits");
    app.add_option("--max-matchings", session.limits.matching_cap, "cap on enumerated matchings");

    std::string op = "delete", set_csv, element, x_csv, family = "uniform";
    int gen_r = 2, gen_n = 4, gen_rows = 3, gen_cols = 6, gen_vertices = 4, gen_arcs = 8, window_k = 1;
    std::uint64_t seed = 1;
    long long matching_cap = 0;

    auto add_file = [&](CLI::App* cmd) { cmd->add_option("file", session.file, "instance file")->required(); };

    add_file(app.add_subcommand("check-axioms", "validate the circuit axioms"));
    add_file(app.add_subcommand("cocircuits", "list all cocircuits"));
    add_file(app.add_subcommand("is-binary", "even circuit-cocircuit intersection test"));

    CLI::App* minors = app.add_subcommand("minors", "delete or contract a set of elements");
    add_file(minors);
    minors->add_option("--op", op, "delete, contract, restrict, or dot-restrict");
    minors->add_option("--set", set_csv, "comma-separated element names")->required();

    CLI::App* paint_cmd = app.add_subcommand("paint", "circuit through the X side or cocircuit through the Y side");
    add_file(paint_cmd);
    paint_cmd->add_option("--element", element, "the distinguished element")->required();
    paint_cmd->add_option("--x-side", x_csv, "comma-separated X side (Y is the rest)");

    CLI::App* farkas_cmd = app.add_subcommand("farkas", "positive circuit or positive cocircuit through an element");
    add_file(farkas_cmd);
    farkas_cmd->add_option("--element", element, "the element")->required();

    add_file(app.add_subcommand("balanced", "every signed cocircuit splits evenly"));
    add_file(app.add_subcommand("partition", "exact partition into circuits"));
    add_file(app.add_subcommand("partition-directed", "greedy partition into directed circuits"));

    CLI::App* fme_cmd = app.add_subcommand("fme", "finite matching extendability");
    add_file(fme_cmd);
    fme_cmd->add_option("--matching-cap", matching_cap, "override the matching enumeration cap");

    add_file(app.add_subcommand("welsh", "odd-cocircuit status versus exact partition"));

    CLI::App* gen_cmd = app.add_subcommand("gen", "emit a generated instance");
    gen_cmd->add_option("--family", family, "uniform, fano, k4, gf2, eulerian, digraph, zwindow")->required();
    gen_cmd->add_option("--r", gen_r, "uniform rank");
    gen_cmd->add_option("--n", gen_n, "uniform ground size");
    gen_cmd->add_option("--rows", gen_rows, "gf2 rows");
    gen_cmd->add_option("--cols", gen_cols, "gf2 columns");
    gen_cmd->add_option("--vertices", gen_vertices, "digraph vertices");
    gen_cmd->add_option("--arcs", gen_arcs, "digraph arcs");
    gen_cmd->add_option("--seed", seed, "generator seed");
    gen_cmd->add_option("--k", window_k, "window radius");

    CLI::App* zreport_cmd = app.add_subcommand("z-report", "window findings for the signed 3-subset family");
    zreport_cmd->add_option("--k", window_k, "window radius")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("check-axioms")) return cmd_check_axioms(session);
        if (app.got_subcommand("cocircuits")) return cmd_cocircuits(session);
        if (app.got_subcommand("is-binary")) return cmd_is_binary(session);
        if (app.got_subcommand("minors")) return cmd_minors(session, op, set_csv);
        if (app.got_subcommand("paint")) return cmd_paint(session, element, x_csv);
        if (app.got_subcommand("farkas")) return cmd_farkas(session, element);
        if (app.got_subcommand("balanced")) return cmd_balanced(session);
        if (app.got_subcommand("partition")) return cmd_partition(session);
        if (app.got_subcommand("partition-directed")) return cmd_partition_directed(session);
        if (app.got_subcommand("fme")) return cmd_fme(session, matching_cap);
        if (app.got_subcommand("welsh")) return cmd_welsh(session);
        if (app.got_subcommand("gen"))
            return cmd_gen(session, family, gen_r, gen_n, gen_rows, gen_cols, gen_vertices, gen_arcs, seed,
                           window_k);
        if (app.got_subcommand("z-report")) return cmd_z_report(session, window_k);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    std::cerr << "error: no subcommand\n";
    return kExitError;
}

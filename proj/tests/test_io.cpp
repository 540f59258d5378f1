#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "circuitry/instances.hpp"
#include "circuitry/io.hpp"
#include "common.hpp"
#include "doctest.h"

using namespace circuitry;

TEST_CASE("parsing the line formats") {
    SUBCASE("circuits") {
        Instance inst = parse_instance_text("# a comment\nelements a b c\ncircuit a b c\n");
        CHECK(inst.format == InstanceFormat::Circuits);
        CHECK(inst.ground.size() == 3);
        REQUIRE(inst.circuits.size() == 1);
        CHECK(inst.circuits.front() == EdgeSet{0, 1, 2});
        Matroid m = to_matroid(inst);
        CHECK(m.circuits() == named::triangle().circuits());
    }
    SUBCASE("signed circuits with a supplied cocircuit signature") {
        Instance inst = parse_instance_text(
            "elements a b c\n"
            "scircuit +a -b +c\n"
            "scocircuit +a +b\n"
            "scocircuit +a -c\n"
            "scocircuit +b +c\n");
        CHECK(inst.format == InstanceFormat::SignedCircuits);
        CHECK(inst.has_cocircuit_lines);
        OrientedMatroid om = to_oriented(inst);
        CHECK(om.circuit_signature().front().sign(1) == -1);
        CHECK(om.has_cocircuit_signature());
    }
    SUBCASE("gf2 block") {
        Instance inst = parse_instance_text("gf2 2 3\n1 0 1\n0 1 1\n");
        CHECK(inst.format == InstanceFormat::Gf2);
        CHECK(inst.ground.label(0) == "e0");
        Matroid m = to_matroid(inst);
        CHECK(m.circuits() == std::vector<EdgeSet>{EdgeSet{0, 1, 2}});
    }
    SUBCASE("graphs and digraphs") {
        Instance undirected = parse_instance_text("edge x u v\nedge y v u\n");
        CHECK(undirected.format == InstanceFormat::Graph);
        CHECK(to_matroid(undirected).circuits() == std::vector<EdgeSet>{EdgeSet{0, 1}});
        CHECK_THROWS_AS(to_oriented(undirected), Error);

        Instance directed = parse_instance_text("arc x u v\narc y v u\n");
        CHECK(directed.format == InstanceFormat::Digraph);
        OrientedMatroid om = to_oriented(directed);
        CHECK(om.circuit_signature().front().is_positive());
    }
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_instance_text(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("elements a b\ncircuit a z\n") == 2);
    CHECK(line_of("elements a b\nelements c\n") == 2);
    CHECK(line_of("nonsense\n") == 1);
    CHECK(line_of("gf2 2 2\n1 0\n") == 2);          // block ended early
    CHECK(line_of("gf2 1 2\n1 2\n") == 2);          // bad entry
    CHECK(line_of("edge x u v\narc y u v\n") == 2);  // mixed kinds
    CHECK(line_of("elements a\ncircuit a\ngf2 1 1\n1\n") == 4);
    CHECK(line_of("elements a a\n") == 1);
}

TEST_CASE("serialization round-trips") {
    std::vector<Instance> pool;
    pool.push_back(instance_from_matroid(gen_uniform(2, 4)));
    pool.push_back(instance_from_matroid(gen_fano()));
    pool.push_back(instance_from_graph(k4_graph(), false));
    pool.push_back(instance_from_graph(random_eulerian_arcs(4, 7, 3), true));
    pool.push_back(instance_from_graph(named::tournament3(), true));
    pool.push_back(instance_from_oriented(gen_z_window(2)));
    pool.push_back(instance_from_oriented(oriented_from_digraph(named::two_digons())));

    // a digraph with an isolated vertex survives the trip
    Graph lonely;
    lonely.vertex("alone");
    lonely.add_arc("a0", "u", "v");
    pool.push_back(instance_from_graph(lonely, true));

    for (const Instance& inst : pool) {
        Instance reparsed = parse_instance_text(serialize_instance(inst));
        CHECK(reparsed == inst);
    }
}

TEST_CASE("oriented loading derives or verifies the cocircuit signature") {
    SUBCASE("binary signed circuits derive on load") {
        Instance inst = parse_instance_text("elements a b c\nscircuit +a +b +c\n");
        OrientedMatroid om = to_oriented(inst);
        CHECK(om.has_cocircuit_signature());
    }
    SUBCASE("non-binary signed circuits need explicit cocircuit lines") {
        Instance window = instance_from_oriented(gen_z_window(2));
        std::string text = serialize_instance(window);
        CHECK_NOTHROW(to_oriented(parse_instance_text(text)));

        // strip the scocircuit lines: derivation must refuse
        std::string stripped;
        for (std::size_t pos = 0; pos < text.size();) {
            std::size_t end = text.find('\n', pos);
            std::string line = text.substr(pos, end - pos);
            if (line.rfind("scocircuit", 0) != 0) stripped += line + "\n";
            pos = end + 1;
        }
        CHECK_THROWS_AS(to_oriented(parse_instance_text(stripped)), NotBinary);
    }
    SUBCASE("window instance reloads identically") {
        OrientedMatroid om = gen_z_window(2);
        OrientedMatroid reloaded = to_oriented(parse_instance_text(serialize_instance(instance_from_oriented(om))));
        CHECK(reloaded.matroid() == om.matroid());
        CHECK(reloaded.circuit_signature() == om.circuit_signature());
        CHECK(reloaded.cocircuit_signature() == om.cocircuit_signature());
    }
    SUBCASE("tampered cocircuit lines are rejected") {
        CHECK_THROWS_AS(to_oriented(parse_instance_text("elements a b c\n"
                                                        "scircuit +a +b +c\n"
                                                        "scocircuit +a +b\n"
                                                        "scocircuit +a +c\n"
                                                        "scocircuit +b +c\n")),
                        InconsistentSignature);
    }
}

TEST_CASE("certificate verification rejects tampered witnesses") {
    Matroid triangle = named::triangle();
    // not a circuit
    CHECK_FALSE(verify_certificate(triangle, Certificate::circuit(EdgeSet{0, 1}, 0)));
    // a circuit, but not through the claimed element is fine to claim -1
    CHECK(verify_certificate(triangle, Certificate::circuit(EdgeSet{0, 1, 2}, -1)));
    // not a cocircuit
    CHECK_FALSE(verify_certificate(triangle, Certificate::cocircuit(EdgeSet{0}, 0)));
    // even cocircuit is not an odd-cocircuit witness
    CHECK_FALSE(verify_certificate(triangle, Certificate::odd_cocircuit(EdgeSet{0, 1})));
    // overlapping parts are not a partition
    CHECK_FALSE(verify_certificate(named::u24(),
                                   Certificate::partition({EdgeSet{0, 1, 2}, EdgeSet{0, 1, 3}})));
    // incomplete cover is not a partition
    CHECK_FALSE(verify_certificate(named::u24(), Certificate::partition({EdgeSet{0, 1, 2}})));
    // a matching that does extend is not a counterexample
    CHECK_FALSE(verify_certificate(triangle, Certificate::counterexample_matching(Matching{}, 0)));

    OrientedMatroid om = oriented_from_digraph(named::tournament3());
    // the triangle is a circuit but its signature is not constant
    CHECK_FALSE(verify_certificate(om, Certificate::positive_circuit(SignedSet(EdgeSet{0, 1, 2}, EdgeSet{}), 0)));
    // an unbalanced witness must match the stored signing
    const SignedSet& cut = om.cocircuit_signature().front();
    CHECK(verify_certificate(om, Certificate::unbalanced_cocircuit(cut)) ==
          (cut.positives.size() != cut.negatives.size()));
    // balanced cocircuits are never unbalanced witnesses
    OrientedMatroid balanced = oriented_from_digraph(named::triangle_digraph());
    CHECK_FALSE(
        verify_certificate(balanced, Certificate::unbalanced_cocircuit(balanced.cocircuit_signature().front())));
}

TEST_CASE("certificate rendering") {
    Matroid m = named::triangle();
    CHECK(render_certificate(m.ground(), Certificate::odd_cocircuit(EdgeSet{0, 1})) ==
          std::vector<std::string>{"CERT odd-cocircuit: e0 e1"});
    CHECK(render_certificate(m.ground(), Certificate::positive_circuit(SignedSet(EdgeSet{0, 2}, EdgeSet{}))) ==
          std::vector<std::string>{"CERT positive-circuit: +e0 +e2"});
    CHECK(render_certificate(m.ground(),
                             Certificate::counterexample_matching(Matching{{EdgeSet{0, 1, 2}}}, 0)) ==
          std::vector<std::string>{"CERT counterexample-matching: e0 | e0 e1 e2"});
    Certificate part = Certificate::directed_partition({SignedSet(EdgeSet{0, 1, 2}, EdgeSet{})});
    CHECK(render_certificate(m.ground(), part) == std::vector<std::string>{"PART: +e0 +e1 +e2"});
}

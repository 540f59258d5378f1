#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "circuitry/decompose.hpp"
#include "circuitry/instances.hpp"
#include "circuitry/oriented.hpp"
#include "common.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace circuitry;

namespace {

SignedSet in_parent(const SignedSet& s, const GroundSet& child, const GroundSet& parent) {
    EdgeSet pos, neg;
    for (int e : s.positives.members) pos.members.push_back(parent.index_of(child.label(e)));
    for (int e : s.negatives.members) neg.members.push_back(parent.index_of(child.label(e)));
    return SignedSet(EdgeSet(std::move(pos.members)), EdgeSet(std::move(neg.members))).canonical();
}

std::vector<SignedSet> signature_in_parent(const std::vector<SignedSet>& sig, const GroundSet& child,
                                           const GroundSet& parent) {
    std::vector<SignedSet> out;
    out.reserve(sig.size());
    for (const SignedSet& s : sig) out.push_back(in_parent(s, child, parent));
    std::sort(out.begin(), out.end(), SignedSupportLess{});
    return out;
}

std::vector<SignedSet> canonical_sorted(std::vector<SignedSet> sig) {
    for (SignedSet& s : sig) s = s.canonical();
    std::sort(sig.begin(), sig.end(), SignedSupportLess{});
    return sig;
}

IntMatrix fano_int_matrix() {
    IntMatrix a(3, 7);
    for (int c = 0; c < 7; ++c) {
        int value = c + 1;
        for (int r = 0; r < 3; ++r) a.set(r, c, (value >> r) & 1);
    }
    return a;
}

}  // namespace

TEST_CASE("digraph orientation: frozen small cases") {
    SUBCASE("directed triangle: one all-positive circuit, cuts split 1/1") {
        OrientedMatroid om = oriented_from_digraph(named::triangle_digraph());
        REQUIRE(om.circuit_signature().size() == 1);
        const SignedSet& c = om.circuit_signature().front();
        CHECK(c.is_positive());
        CHECK(c.support() == EdgeSet{0, 1, 2});
        REQUIRE(om.has_cocircuit_signature());
        for (const SignedSet& d : om.cocircuit_signature()) {
            CHECK(d.positives.size() == 1);
            CHECK(d.negatives.size() == 1);
        }
        bool found = false;
        for (const SignedSet& d : om.cocircuit_signature()) {
            if (d.support() == EdgeSet{0, 1}) {
                found = true;
                CHECK(d.sign(0) == 1);
                CHECK(d.sign(1) == -1);
            }
        }
        CHECK(found);
    }
    SUBCASE("digon: both arcs positive in the circuit, cuts mixed") {
        OrientedMatroid om = oriented_from_digraph(named::digon());
        REQUIRE(om.circuit_signature().size() == 1);
        CHECK(om.circuit_signature().front() == SignedSet(EdgeSet{0, 1}, EdgeSet{}));
        for (const SignedSet& d : om.cocircuit_signature()) {
            CHECK(d.positives.size() == 1);
            CHECK(d.negatives.size() == 1);
        }
    }
    SUBCASE("single arc: no circuits, one positive singleton cocircuit") {
        OrientedMatroid om = oriented_from_digraph(named::single_arc());
        CHECK(om.circuit_signature().empty());
        REQUIRE(om.cocircuit_signature().size() == 1);
        CHECK(om.cocircuit_signature().front() == SignedSet(EdgeSet{0}, EdgeSet{}));
    }
    SUBCASE("tournament: triangle circuit is not constant-sign") {
        OrientedMatroid om = oriented_from_digraph(named::tournament3());
        REQUIRE(om.circuit_signature().size() == 1);
        CHECK_FALSE(om.circuit_signature().front().is_directed());
    }
}

TEST_CASE("integer matrix orientation") {
    SUBCASE("two proportional columns") {
        IntMatrix a(1, 2);
        a.set(0, 0, 1);
        a.set(0, 1, -1);
        OrientedMatroid om = oriented_from_integer_matrix(a);
        REQUIRE(om.circuit_signature().size() == 1);
        CHECK(om.circuit_signature().front() == SignedSet(EdgeSet{0, 1}, EdgeSet{}));
    }
    SUBCASE("rank-2 rational pattern is a valid non-binary orientation") {
        IntMatrix a(2, 4);
        a.set(0, 0, 1);
        a.set(1, 1, 1);
        a.set(0, 2, 1);
        a.set(1, 2, 1);
        a.set(0, 3, 1);
        a.set(1, 3, -1);
        OrientedMatroid om = oriented_from_integer_matrix(a);
        CHECK(om.matroid().circuits().size() == 4);
        CHECK_FALSE(is_binary(om.matroid()).binary);
        CHECK(verify_orthogonality(om).ok());
    }
    SUBCASE("network matrix of a digraph equals the digraph construction") {
        std::vector<Graph> pool{named::triangle_digraph(), named::digon(), named::tournament3(),
                                named::two_digons(), named::two_triangles(), named::single_arc(),
                                named::self_loop()};
        for (std::uint64_t seed = 1; seed <= 10; ++seed) pool.push_back(random_digraph_arcs(4, 6, seed));
        for (const Graph& g : pool) {
            OrientedMatroid from_graph = oriented_from_digraph(g);
            OrientedMatroid from_matrix = oriented_from_integer_matrix(incidence_signed(g), g.arc_ground());
            CHECK(from_graph.matroid() == from_matrix.matroid());
            CHECK(from_graph.circuit_signature() == from_matrix.circuit_signature());
            CHECK(from_graph.cocircuit_signature() == from_matrix.cocircuit_signature());
        }
    }
    SUBCASE("integer Fano matrix does not represent the Fano matroid") {
        OrientedMatroid om = oriented_from_integer_matrix(fano_int_matrix());
        CHECK(verify_orthogonality(om).ok());
        CHECK_FALSE(om.matroid() == gen_fano());
        CHECK_FALSE(is_binary(om.matroid()).binary);
    }
}

TEST_CASE("orthogonality verification") {
    SUBCASE("constructed instances are clean") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            OrientedMatroid om = gen_random_eulerian_digraph(4, 7, seed);
            OrthogonalityReport report = verify_orthogonality(om);
            CHECK(report.ok());
            CHECK(report.binary);
        }
    }
    SUBCASE("a flipped sign is caught") {
        OrientedMatroid om = oriented_from_digraph(named::tournament3());
        std::vector<SignedSet> tampered{SignedSet(EdgeSet{0, 1, 2}, EdgeSet{})};
        CHECK_THROWS_AS(oriented_from_signature(om.matroid(), tampered, om.cocircuit_signature()),
                        InconsistentSignature);
    }
    SUBCASE("no circuits means vacuously clean") {
        OrientedMatroid om = oriented_from_digraph(named::path4());
        CHECK(om.circuit_signature().empty());
        CHECK(verify_orthogonality(om).ok());
    }
}

TEST_CASE("cocircuit signature derivation") {
    SUBCASE("derivation reproduces the digraph cut signature exactly") {
        std::vector<Graph> pool{named::triangle_digraph(), named::digon(), named::two_digons(),
                                named::two_triangles(), named::tournament3(), k4_graph()};
        for (std::uint64_t seed = 1; seed <= 10; ++seed) pool.push_back(random_digraph_arcs(4, 7, seed));
        for (const Graph& g : pool) {
            OrientedMatroid om = oriented_from_digraph(g);
            OrientedMatroid derived = derive_cocircuit_signature(om);
            CHECK(derived.cocircuit_signature() == om.cocircuit_signature());
            CHECK(derive_cocircuit_signature(derived).cocircuit_signature() == derived.cocircuit_signature());
        }
    }
    SUBCASE("triangle: anchored cut forces the second sign") {
        OrientedMatroid om = oriented_from_digraph(named::triangle_digraph());
        OrientedMatroid derived = derive_cocircuit_signature(om);
        for (const SignedSet& d : derived.cocircuit_signature()) {
            if (d.support() == EdgeSet{0, 1}) {
                CHECK(d.sign(0) == 1);
                CHECK(d.sign(1) == -1);
            }
        }
    }
    SUBCASE("no circuits: every singleton cocircuit anchors at +1") {
        OrientedMatroid om = oriented_from_signature(named::two_coloops(), {});
        OrientedMatroid derived = derive_cocircuit_signature(om);
        REQUIRE(derived.cocircuit_signature().size() == 2);
        for (const SignedSet& d : derived.cocircuit_signature()) CHECK(d.is_positive());
    }
    SUBCASE("representative choice does not matter") {
        OrientedMatroid om = oriented_from_digraph(named::two_digons());
        std::vector<SignedSet> reference = derive_cocircuit_signature(om).cocircuit_signature();
        const std::size_t k = om.circuit_signature().size();
        for (std::uint64_t flip = 0; flip < (std::uint64_t{1} << k); ++flip) {
            std::vector<SignedSet> sig;
            for (std::size_t i = 0; i < k; ++i) {
                const SignedSet& rep = om.circuit_signature()[i];
                sig.push_back((flip & (std::uint64_t{1} << i)) ? rep.negated() : rep);
            }
            OrientedMatroid again = oriented_from_signature(om.matroid(), std::move(sig));
            CHECK(derive_cocircuit_signature(again).cocircuit_signature() == reference);
        }
    }
    SUBCASE("non-binary input is rejected") {
        // the k=1 window is binary (it is the triangle); k=2 is not
        OrientedMatroid window = gen_z_window(2);
        CHECK_THROWS_AS(derive_cocircuit_signature(window), NotBinary);
    }
    SUBCASE("no canonical signing of the Fano circuits survives verification") {
        Matroid fano = gen_fano();
        std::vector<std::pair<int, int>> slots;  // (circuit index, free element)
        for (std::size_t i = 0; i < fano.circuits().size() && slots.size() < 13; ++i) {
            const EdgeSet& c = fano.circuits()[i];
            for (std::size_t j = 1; j < c.members.size() && slots.size() < 13; ++j)
                slots.push_back({static_cast<int>(i), c.members[j]});
        }
        REQUIRE(slots.size() == 13);
        int rejected = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << 13); ++bits) {
            std::vector<SignedSet> sig;
            for (const EdgeSet& c : fano.circuits()) sig.push_back(SignedSet(c, EdgeSet{}));
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if (!(bits & (std::uint64_t{1} << s))) continue;
                auto [ci, e] = slots[s];
                SignedSet& rep = sig[static_cast<std::size_t>(ci)];
                rep = SignedSet(edge_minus(rep.positives, EdgeSet{e}), edge_union(rep.negatives, EdgeSet{e}));
            }
            OrientedMatroid claim = oriented_from_signature(fano, std::move(sig));
            try {
                derive_cocircuit_signature(claim);
            } catch (const InconsistentSignature&) {
                ++rejected;
            }
        }
        CHECK(rejected == (1 << 13));
    }
}

TEST_CASE("balance") {
    CHECK(is_balanced(oriented_from_digraph(named::triangle_digraph())).balanced);
    CHECK(is_balanced(oriented_from_digraph(named::two_digons())).balanced);

    BalanceResult single = is_balanced(oriented_from_digraph(named::single_arc()));
    CHECK_FALSE(single.balanced);
    REQUIRE(single.witness.has_value());
    CHECK(single.witness->kind == Certificate::Kind::UnbalancedCocircuit);
    CHECK(single.witness->signed_witness == SignedSet(EdgeSet{0}, EdgeSet{}));

    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        OrientedMatroid om = gen_random_eulerian_digraph(5, 9, seed);
        CHECK(is_balanced(om).balanced);
    }
}

TEST_CASE("farkas dichotomy") {
    SUBCASE("directed triangle: the circuit wins everywhere") {
        OrientedMatroid om = oriented_from_digraph(named::triangle_digraph());
        for (int e = 0; e < 3; ++e) {
            Certificate cert = farkas(om, e);
            CHECK(cert.kind == Certificate::Kind::PositiveCircuit);
            CHECK(cert.signed_witness.support() == EdgeSet{0, 1, 2});
            CHECK(verify_certificate(om, cert));
        }
    }
    SUBCASE("tournament: the source out-cut wins for its arcs") {
        OrientedMatroid om = oriented_from_digraph(named::tournament3());
        Certificate cert = farkas(om, 0);  // a01
        CHECK(cert.kind == Certificate::Kind::PositiveCocircuit);
        CHECK(cert.signed_witness.support() == EdgeSet{0, 2});  // {a01, a02}
        CHECK(cert.signed_witness.is_positive());
        CHECK(verify_certificate(om, cert));
    }
    SUBCASE("single arc: the bridge cut") {
        OrientedMatroid om = oriented_from_digraph(named::single_arc());
        Certificate cert = farkas(om, 0);
        CHECK(cert.kind == Certificate::Kind::PositiveCocircuit);
        CHECK(cert.signed_witness.support() == EdgeSet{0});
    }
    SUBCASE("exactly one kind for every element, every instance") {
        std::vector<OrientedMatroid> pool;
        for (const Graph& g : {named::triangle_digraph(), named::digon(), named::two_digons(),
                               named::two_triangles(), named::tournament3(), named::path4(), k4_graph()})
            pool.push_back(oriented_from_digraph(g));
        for (std::uint64_t seed = 1; seed <= 20; ++seed)
            pool.push_back(oriented_from_digraph(random_digraph_arcs(4, 8, seed)));
        pool.push_back(gen_z_window(2));
        pool.push_back(gen_z_window(3));
        for (const OrientedMatroid& om : pool)
            for (int e = 0; e < om.size(); ++e) CHECK_NOTHROW(farkas(om, e));
    }
}

TEST_CASE("oriented minors") {
    SUBCASE("deleting nothing is the identity") {
        OrientedMatroid om = oriented_from_digraph(named::triangle_digraph());
        OrientedMatroid same = oriented_deletion(om, EdgeSet{});
        CHECK(same.circuit_signature() == om.circuit_signature());
        CHECK(same.cocircuit_signature() == om.cocircuit_signature());
    }
    SUBCASE("contracting one triangle arc leaves an all-positive digon") {
        OrientedMatroid om = oriented_from_digraph(named::triangle_digraph());
        OrientedMatroid minor = oriented_contraction(om, EdgeSet{0});
        REQUIRE(minor.circuit_signature().size() == 1);
        CHECK(minor.circuit_signature().front().is_positive());
        CHECK(minor.circuit_signature().front().support() == EdgeSet{0, 1});
    }
    SUBCASE("deleting one triangle arc leaves two singleton cocircuits") {
        OrientedMatroid om = oriented_from_digraph(named::triangle_digraph());
        OrientedMatroid minor = oriented_deletion(om, EdgeSet{0});
        CHECK(minor.circuit_signature().empty());
        CHECK(minor.cocircuit_signature().size() == 2);
        for (const SignedSet& d : minor.cocircuit_signature()) CHECK(d.size() == 1);
    }
    SUBCASE("restriction formulas hold for every subset") {
        std::vector<OrientedMatroid> pool{oriented_from_digraph(named::triangle_digraph()),
                                          oriented_from_digraph(named::two_digons()),
                                          oriented_from_digraph(named::tournament3()),
                                          gen_z_window(1), gen_z_window(2)};
        for (std::uint64_t seed = 1; seed <= 6; ++seed)
            pool.push_back(oriented_from_digraph(random_digraph_arcs(3, 6, seed)));
        for (const OrientedMatroid& om : pool) {
            const int n = om.size();
            if (n > 7) continue;
            std::vector<EdgeSet> parent_cocirc_supports;
            for (const SignedSet& d : om.cocircuit_signature()) parent_cocirc_supports.push_back(d.support());
            std::vector<EdgeSet> parent_circ_supports;
            for (const SignedSet& c : om.circuit_signature()) parent_circ_supports.push_back(c.support());

            for (std::uint64_t fmask = 0; fmask < (std::uint64_t{1} << n); ++fmask) {
                EdgeSet f = EdgeSet::from_mask(fmask);
                OrientedMatroid del = oriented_deletion(om, f);
                OrientedMatroid con = oriented_contraction(om, f);

                std::vector<SignedSet> expected_del;
                for (const SignedSet& c : om.circuit_signature())
                    if (!c.support().intersects(f)) expected_del.push_back(c);
                CHECK(signature_in_parent(del.circuit_signature(), del.ground(), om.ground()) ==
                      canonical_sorted(expected_del));

                std::vector<EdgeSet> minimal = oracles::naive_contract_circuits(parent_circ_supports, f);
                std::vector<SignedSet> expected_con;
                for (const SignedSet& c : om.circuit_signature()) {
                    EdgeSet rest = edge_minus(c.support(), f);
                    if (rest.empty() || !std::binary_search(minimal.begin(), minimal.end(), rest)) continue;
                    expected_con.push_back(c.restricted(rest).canonical());
                }
                std::sort(expected_con.begin(), expected_con.end(), SignedSupportLess{});
                expected_con.erase(std::unique(expected_con.begin(), expected_con.end()), expected_con.end());
                CHECK(signature_in_parent(con.circuit_signature(), con.ground(), om.ground()) == expected_con);

                std::vector<EdgeSet> minimal_d = oracles::naive_contract_circuits(parent_cocirc_supports, f);
                std::vector<SignedSet> expected_del_cocirc;
                for (const SignedSet& d : om.cocircuit_signature()) {
                    EdgeSet rest = edge_minus(d.support(), f);
                    if (rest.empty() || !std::binary_search(minimal_d.begin(), minimal_d.end(), rest)) continue;
                    expected_del_cocirc.push_back(d.restricted(rest).canonical());
                }
                std::sort(expected_del_cocirc.begin(), expected_del_cocirc.end(), SignedSupportLess{});
                expected_del_cocirc.erase(std::unique(expected_del_cocirc.begin(), expected_del_cocirc.end()),
                                          expected_del_cocirc.end());
                CHECK(signature_in_parent(del.cocircuit_signature(), del.ground(), om.ground()) ==
                      expected_del_cocirc);

                std::vector<SignedSet> expected_con_cocirc;
                for (const SignedSet& d : om.cocircuit_signature())
                    if (!d.support().intersects(f)) expected_con_cocirc.push_back(d);
                CHECK(signature_in_parent(con.cocircuit_signature(), con.ground(), om.ground()) ==
                      canonical_sorted(expected_con_cocirc));
            }
        }
    }
}

TEST_CASE("balance is preserved by deleting disjoint positive circuits") {
    std::vector<OrientedMatroid> pool{oriented_from_digraph(named::triangle_digraph()),
                                      oriented_from_digraph(named::two_digons()),
                                      oriented_from_digraph(named::two_triangles())};
    for (std::uint64_t seed = 1; seed <= 8; ++seed) pool.push_back(gen_random_eulerian_digraph(4, 8, seed));

    for (const OrientedMatroid& om : pool) {
        if (om.size() > 10) continue;
        REQUIRE(is_balanced(om).balanced);
        std::vector<EdgeSet> positive_supports;
        for (const SignedSet& c : om.circuit_signature())
            if (c.is_directed()) positive_supports.push_back(c.support());

        std::vector<std::vector<int>> stack{{}};
        while (!stack.empty()) {
            std::vector<int> chosen = stack.back();
            stack.pop_back();
            EdgeSet covered;
            for (int i : chosen) covered = edge_union(covered, positive_supports[static_cast<std::size_t>(i)]);
            CHECK(is_balanced(oriented_deletion(om, covered)).balanced);
            int next_start = chosen.empty() ? 0 : chosen.back() + 1;
            for (int i = next_start; i < static_cast<int>(positive_supports.size()); ++i) {
                if (covered.intersects(positive_supports[static_cast<std::size_t>(i)])) continue;
                std::vector<int> extended = chosen;
                extended.push_back(i);
                stack.push_back(std::move(extended));
            }
        }
    }
}

TEST_CASE("balanced binary instances cover every element with a positive circuit") {
    std::vector<OrientedMatroid> pool{oriented_from_digraph(named::triangle_digraph()),
                                      oriented_from_digraph(named::two_digons())};
    for (std::uint64_t seed = 1; seed <= 15; ++seed) pool.push_back(gen_random_eulerian_digraph(4, 9, seed));
    for (const OrientedMatroid& om : pool) {
        REQUIRE(is_binary(om.matroid()).binary);
        REQUIRE(is_balanced(om).balanced);
        for (int e = 0; e < om.size(); ++e) {
            Certificate cert = farkas(om, e);
            CHECK(cert.kind == Certificate::Kind::PositiveCircuit);
        }
    }
}

#include "circuitry/certificate.hpp"

#include <algorithm>

#include "circuitry/matroid.hpp"
#include "circuitry/oriented.hpp"

namespace circuitry {

EdgeSet Matching::covered() const {
    EdgeSet all;
    for (const EdgeSet& c : circuits) all = edge_union(all, c);
    return all;
}

Certificate Certificate::circuit(EdgeSet c, int through) {
    Certificate cert;
    cert.kind = Kind::Circuit;
    cert.set_witness = std::move(c);
    cert.element = through;
    return cert;
}

Certificate Certificate::cocircuit(EdgeSet d, int through) {
    Certificate cert;
    cert.kind = Kind::Cocircuit;
    cert.set_witness = std::move(d);
    cert.element = through;
    return cert;
}

Certificate Certificate::positive_circuit(SignedSet c, int through) {
    Certificate cert;
    cert.kind = Kind::PositiveCircuit;
    cert.signed_witness = std::move(c);
    cert.element = through;
    return cert;
}

Certificate Certificate::positive_cocircuit(SignedSet d, int through) {
    Certificate cert;
    cert.kind = Kind::PositiveCocircuit;
    cert.signed_witness = std::move(d);
    cert.element = through;
    return cert;
}

Certificate Certificate::odd_cocircuit(EdgeSet d) {
    Certificate cert;
    cert.kind = Kind::OddCocircuit;
    cert.set_witness = std::move(d);
    return cert;
}

Certificate Certificate::unbalanced_cocircuit(SignedSet d) {
    Certificate cert;
    cert.kind = Kind::UnbalancedCocircuit;
    cert.signed_witness = std::move(d);
    return cert;
}

Certificate Certificate::counterexample_matching(Matching a, int uncovered) {
    Certificate cert;
    cert.kind = Kind::CounterexampleMatching;
    cert.matching = std::move(a);
    cert.element = uncovered;
    return cert;
}

Certificate Certificate::partition(std::vector<EdgeSet> circuits) {
    Certificate cert;
    cert.kind = Kind::Partition;
    cert.parts.reserve(circuits.size());
    for (EdgeSet& c : circuits) cert.parts.emplace_back(std::move(c), EdgeSet{});
    cert.directed_parts = false;
    return cert;
}

Certificate Certificate::directed_partition(std::vector<SignedSet> circuits) {
    Certificate cert;
    cert.kind = Kind::Partition;
    cert.parts = std::move(circuits);
    cert.directed_parts = true;
    return cert;
}

namespace {

bool is_circuit_of(const Matroid& m, const EdgeSet& s) {
    return std::binary_search(m.circuits().begin(), m.circuits().end(), s);
}

bool is_cocircuit_of(const Matroid& m, const EdgeSet& s, const EnumLimits& limits) {
    std::vector<EdgeSet> cocircs = cocircuits(m, limits);
    return std::binary_search(cocircs.begin(), cocircs.end(), s);
}

bool through_ok(const Certificate& cert, const EdgeSet& support) {
    return cert.element < 0 || support.contains(cert.element);
}

bool partition_covers(const Certificate& cert, const Matroid& m) {
    EdgeSet covered;
    for (const SignedSet& part : cert.parts) {
        EdgeSet s = part.support();
        if (s.empty() || covered.intersects(s)) return false;
        if (!is_circuit_of(m, s)) return false;
        covered = edge_union(covered, s);
    }
    return covered.size() == m.size();
}

}  // namespace

bool verify_certificate(const Matroid& m, const Certificate& cert, const EnumLimits& limits) {
    switch (cert.kind) {
        case Certificate::Kind::Circuit:
            return is_circuit_of(m, cert.set_witness) && through_ok(cert, cert.set_witness);
        case Certificate::Kind::Cocircuit:
            return is_cocircuit_of(m, cert.set_witness, limits) && through_ok(cert, cert.set_witness);
        case Certificate::Kind::OddCocircuit:
            return cert.set_witness.size() % 2 == 1 && is_cocircuit_of(m, cert.set_witness, limits);
        case Certificate::Kind::CounterexampleMatching: {
            EdgeSet covered;
            for (const EdgeSet& c : cert.matching.circuits) {
                if (!is_circuit_of(m, c) || covered.intersects(c)) return false;
                covered = edge_union(covered, c);
            }
            int e = cert.element;
            if (e < 0 || e >= m.size() || covered.contains(e)) return false;
            for (const EdgeSet& c : m.circuits())
                if (c.contains(e) && !c.intersects(covered)) return false;
            return true;
        }
        case Certificate::Kind::Partition:
            return partition_covers(cert, m);
        default:
            return false;  // signed kinds need the oriented overload
    }
}

bool verify_certificate(const OrientedMatroid& om, const Certificate& cert, const EnumLimits& limits) {
    const Matroid& m = om.matroid();
    auto signature_rep = [&](const std::vector<SignedSet>& sig, const EdgeSet& support) -> const SignedSet* {
        for (const SignedSet& s : sig)
            if (s.support() == support) return &s;
        return nullptr;
    };
    switch (cert.kind) {
        case Certificate::Kind::PositiveCircuit: {
            const SignedSet& w = cert.signed_witness;
            if (!w.is_positive() || !through_ok(cert, w.support())) return false;
            const SignedSet* rep = signature_rep(om.circuit_signature(), w.support());
            return rep != nullptr && rep->is_directed() && w.canonical() == rep->canonical();
        }
        case Certificate::Kind::PositiveCocircuit: {
            if (!om.has_cocircuit_signature()) return false;
            const SignedSet& w = cert.signed_witness;
            if (!w.is_positive() || !through_ok(cert, w.support())) return false;
            const SignedSet* rep = signature_rep(om.cocircuit_signature(), w.support());
            return rep != nullptr && rep->is_directed() && w.canonical() == rep->canonical();
        }
        case Certificate::Kind::UnbalancedCocircuit: {
            if (!om.has_cocircuit_signature()) return false;
            const SignedSet& w = cert.signed_witness;
            if (w.positives.size() == w.negatives.size()) return false;
            const SignedSet* rep = signature_rep(om.cocircuit_signature(), w.support());
            return rep != nullptr && w.canonical() == rep->canonical();
        }
        case Certificate::Kind::Partition: {
            if (!partition_covers(cert, m)) return false;
            if (!cert.directed_parts) return true;
            for (const SignedSet& part : cert.parts) {
                if (!part.is_positive()) return false;
                const SignedSet* rep = signature_rep(om.circuit_signature(), part.support());
                if (rep == nullptr || !rep->is_directed()) return false;
            }
            return true;
        }
        default:
            return verify_certificate(m, cert, limits);
    }
}

}  // namespace circuitry

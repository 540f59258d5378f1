#pragma once

#include <string>
#include <vector>

#include "circuitry/signed_set.hpp"
#include "circuitry/types.hpp"

namespace circuitry {

class Matroid;
class OrientedMatroid;

/// A set of pairwise disjoint circuits.
struct Matching {
    std::vector<EdgeSet> circuits;

    EdgeSet covered() const;
    bool operator==(const Matching&) const = default;
};

/// Uniform re-checkable witness carrier. Every certificate an operation
/// returns can be validated from scratch against the instance it is about
/// (see verify_certificate).
struct Certificate {
    enum class Kind {
        Circuit,                 // plain circuit (paint)
        Cocircuit,               // plain cocircuit (paint)
        PositiveCircuit,         // farkas / directed partitions
        PositiveCocircuit,       // farkas
        OddCocircuit,            // Welsh criterion
        UnbalancedCocircuit,     // balance criterion
        CounterexampleMatching,  // f.m.e. failure
        Partition,               // partition into circuits
    };

    Kind kind = Kind::Circuit;
    EdgeSet set_witness;             // Circuit / Cocircuit / OddCocircuit
    SignedSet signed_witness;        // Positive* / UnbalancedCocircuit
    Matching matching;               // CounterexampleMatching
    int element = -1;                // "through" element, where one applies
    std::vector<SignedSet> parts;    // Partition
    bool directed_parts = false;     // parts carry meaningful signs

    static Certificate circuit(EdgeSet c, int through);
    static Certificate cocircuit(EdgeSet d, int through);
    static Certificate positive_circuit(SignedSet c, int through = -1);
    static Certificate positive_cocircuit(SignedSet d, int through = -1);
    static Certificate odd_cocircuit(EdgeSet d);
    static Certificate unbalanced_cocircuit(SignedSet d);
    static Certificate counterexample_matching(Matching a, int uncovered);
    static Certificate partition(std::vector<EdgeSet> circuits);
    static Certificate directed_partition(std::vector<SignedSet> circuits);

    bool operator==(const Certificate&) const = default;
};

/// Re-checks a certificate against a plain matroid. Signed kinds are not
/// valid here and return false.
bool verify_certificate(const Matroid& m, const Certificate& cert, const EnumLimits& limits = {});

/// Re-checks a certificate against an oriented matroid (plain kinds are
/// checked against the underlying matroid).
bool verify_certificate(const OrientedMatroid& om, const Certificate& cert, const EnumLimits& limits = {});

}  // namespace circuitry

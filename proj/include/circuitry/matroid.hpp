#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circuitry/types.hpp"

namespace circuitry {

struct Certificate;

/// A finite matroid given by its circuit family. Instances are immutable
/// after construction and safe to share across threads.
///
/// Invariants (enforced by matroid_from_circuits, preserved by every
/// factory and minor operation): circuits are nonempty, pairwise
/// incomparable under inclusion, and satisfy circuit elimination.
class Matroid {
public:
    Matroid() = default;

    const GroundSet& ground() const { return ground_; }
    int size() const { return ground_.size(); }
    /// Circuits in canonical order (lexicographic on sorted member lists).
    const std::vector<EdgeSet>& circuits() const { return circuits_; }
    const std::optional<BinaryMatrix>& representation() const { return rep_; }

    /// Structural identity: same labels in the same order, same circuits.
    bool operator==(const Matroid& o) const {
        return ground_ == o.ground_ && circuits_ == o.circuits_;
    }

private:
    Matroid(GroundSet g, std::vector<EdgeSet> c, std::optional<BinaryMatrix> rep)
        : ground_(std::move(g)), circuits_(std::move(c)), rep_(std::move(rep)) {}

    GroundSet ground_;
    std::vector<EdgeSet> circuits_;
    std::optional<BinaryMatrix> rep_;

    friend Matroid matroid_from_circuits(GroundSet ground, std::vector<EdgeSet> circuits);
    friend Matroid matroid_from_gf2(const BinaryMatrix& matrix, GroundSet ground, const EnumLimits& limits);
    friend Matroid deletion(const Matroid& m, const EdgeSet& f);
    friend Matroid contraction(const Matroid& m, const EdgeSet& f);
};

/// Validates the circuit axioms (nonempty members, incomparability, weak
/// elimination, checked exhaustively over all pairs and common elements)
/// and returns the matroid. Throws AxiomViolation naming the failed check
/// and a witness.
Matroid matroid_from_circuits(GroundSet ground, std::vector<EdgeSet> circuits);

/// Circuits = minimal column subsets with zero GF(2) sum, found by walking
/// the span of a kernel basis; the representation is retained.
Matroid matroid_from_gf2(const BinaryMatrix& matrix, const EnumLimits& limits = {});
Matroid matroid_from_gf2(const BinaryMatrix& matrix, GroundSet ground, const EnumLimits& limits = {});

/// True iff X contains no circuit.
bool independent(const Matroid& m, const EdgeSet& x);

/// Size of the greedy maximal circuit-free subset of X, taken in canonical
/// element order. Exchange-consistency is covered by the test suite.
int rank(const Matroid& m, const EdgeSet& x);
int rank(const Matroid& m);

/// Minimal nonempty sets meeting no circuit in exactly one element,
/// by direct search over all subsets, in canonical order.
std::vector<EdgeSet> cocircuits(const Matroid& m, const EnumLimits& limits = {});

/// Independent route to the same family: complements of hyperplanes
/// (maximal sets of rank r-1). Used for cross-validation.
std::vector<EdgeSet> cocircuits_dual_rank(const Matroid& m, const EnumLimits& limits = {});

/// Minors. F may contain out-of-range indices; they are ignored.
Matroid deletion(const Matroid& m, const EdgeSet& f);
Matroid contraction(const Matroid& m, const EdgeSet& f);
Matroid restriction(const Matroid& m, const EdgeSet& f);      // M|F
Matroid dot_restriction(const Matroid& m, const EdgeSet& f);  // M.F

struct BinaryWitness {
    bool binary = true;
    EdgeSet circuit;    // set only when binary == false
    EdgeSet cocircuit;  // |circuit ∩ cocircuit| is odd
};

/// Even-intersection characterization: binary iff every circuit meets every
/// cocircuit in an even number of elements. Returns the first odd pair in
/// canonical order as witness.
BinaryWitness is_binary(const Matroid& m, const EnumLimits& limits = {});

struct StrongEliminationViolation {
    EdgeSet c0, c1;
    int keep = -1;    // element that must stay in the witness circuit
    int drop = -1;    // element that must leave
};

struct StrongEliminationReport {
    std::vector<StrongEliminationViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Exhaustively confirms strong circuit elimination: for every ordered pair
/// C0, C1, every e in C0∖C1 and f in C0∩C1 there is a circuit C with
/// e ∈ C ⊆ (C0∪C1)∖{f}.
StrongEliminationReport verify_strong_elimination(const Matroid& m);

/// For a partition {X, Y} of E∖{e}: returns the circuit through e inside
/// X∪{e} or the cocircuit through e inside Y∪{e}. Exactly one branch exists;
/// both are searched and exclusivity is asserted.
Certificate paint(const Matroid& m, int e, const EdgeSet& x, const EdgeSet& y, const EnumLimits& limits = {});
Certificate paint(const Matroid& m, int e, const EdgeSet& x, const EdgeSet& y,
                  const std::vector<EdgeSet>& cocircuit_list);

/// The canonically least circuit C with C ∩ D = {e, f}, for a cocircuit D
/// and distinct e, f in D. Existence is guaranteed; an empty search means
/// the preconditions were violated and throws InternalInvariantBroken.
EdgeSet circuit_through_pair(const Matroid& m, const EdgeSet& d, int e, int f);

}  // namespace circuitry

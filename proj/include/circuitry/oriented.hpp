#pragma once

#include <optional>
#include <vector>

#include "circuitry/certificate.hpp"
#include "circuitry/graph.hpp"
#include "circuitry/matroid.hpp"
#include "circuitry/signed_set.hpp"

namespace circuitry {

/// A matroid together with a circuit signature (one canonical
/// representative per circuit; the opposite signing is implicit) and,
/// when available, the matching cocircuit signature.
class OrientedMatroid {
public:
    OrientedMatroid() = default;

    const Matroid& matroid() const { return matroid_; }
    int size() const { return matroid_.size(); }
    const GroundSet& ground() const { return matroid_.ground(); }

    /// Aligned with matroid().circuits(): signature[i] signs circuits()[i].
    const std::vector<SignedSet>& circuit_signature() const { return circuit_signature_; }

    bool has_cocircuit_signature() const { return cocircuit_signature_.has_value(); }
    const std::vector<SignedSet>& cocircuit_signature() const;

private:
    Matroid matroid_;
    std::vector<SignedSet> circuit_signature_;
    std::optional<std::vector<SignedSet>> cocircuit_signature_;

    friend OrientedMatroid oriented_from_signature(Matroid m, std::vector<SignedSet> circuit_signature,
                                                   std::optional<std::vector<SignedSet>> cocircuit_signature,
                                                   const EnumLimits& limits);
};

/// Canonicalizes the representatives, checks that the supports are exactly
/// the circuits (and cocircuits, when supplied), and verifies orthogonality
/// when both signatures are present. Throws InconsistentSignature.
OrientedMatroid oriented_from_signature(Matroid m, std::vector<SignedSet> circuit_signature,
                                        std::optional<std::vector<SignedSet>> cocircuit_signature = std::nullopt,
                                        const EnumLimits& limits = {});

/// Cycle matroid of the digraph; circuits signed by traversal direction,
/// bonds by crossing direction between the two sides. Orthogonality is
/// verified before returning.
OrientedMatroid oriented_from_digraph(const Graph& g, const EnumLimits& limits = {});

/// Circuits = minimal supports of rational kernel vectors of A, signed by
/// the (unique up to negation) kernel vector entries; cocircuits analogously
/// from the row space. Exact integer arithmetic throughout.
OrientedMatroid oriented_from_integer_matrix(const IntMatrix& a, const EnumLimits& limits = {});
OrientedMatroid oriented_from_integer_matrix(const IntMatrix& a, GroundSet ground, const EnumLimits& limits = {});

struct OrthogonalityViolation {
    int circuit_index = -1;
    int cocircuit_index = -1;
    bool zero_sum = false;  // true: the binary zero-sum identity failed
};

struct OrthogonalityReport {
    std::vector<OrthogonalityViolation> violations;
    bool binary = false;  // whether the zero-sum identity was also checked
    bool ok() const { return violations.empty(); }
};

/// Checks, for every circuit/cocircuit pair with intersecting supports,
/// that the restrictions are neither equal nor opposite; on binary
/// instances additionally checks the signed zero-sum identity.
OrthogonalityReport verify_orthogonality(const OrientedMatroid& om);

/// Completes a binary oriented matroid with its cocircuit signature: the
/// least element of each cocircuit anchors at +1 and every other sign is
/// forced through a circuit meeting the cocircuit in exactly the pair.
/// Full orthogonality is verified afterwards.
OrientedMatroid derive_cocircuit_signature(const OrientedMatroid& om, const EnumLimits& limits = {});

struct BalanceResult {
    bool balanced = true;
    std::optional<Certificate> witness;  // UnbalancedCocircuit when false
};

/// Balanced iff every signed cocircuit has equally many positive and
/// negative elements. Requires the cocircuit signature.
BalanceResult is_balanced(const OrientedMatroid& om);

/// The positive circuit or positive cocircuit through e. Exactly one kind
/// exists on valid finite data; zero or two throws InternalInvariantBroken.
Certificate farkas(const OrientedMatroid& om, int e);

/// Signed minors; signatures restricted per the deletion/contraction
/// formulas, re-canonicalized, and re-verified.
OrientedMatroid oriented_deletion(const OrientedMatroid& om, const EdgeSet& f, const EnumLimits& limits = {});
OrientedMatroid oriented_contraction(const OrientedMatroid& om, const EdgeSet& f, const EnumLimits& limits = {});

}  // namespace circuitry

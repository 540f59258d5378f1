#pragma once

#include <compare>

#include "circuitry/types.hpp"

namespace circuitry {

/// A ±1 signing of its support, stored as the two disjoint sign classes.
struct SignedSet {
    EdgeSet positives;
    EdgeSet negatives;

    SignedSet() = default;
    SignedSet(EdgeSet pos, EdgeSet neg);

    EdgeSet support() const { return edge_union(positives, negatives); }
    int size() const { return positives.size() + negatives.size(); }
    bool empty() const { return positives.empty() && negatives.empty(); }

    /// +1, -1, or 0 when e is outside the support.
    int sign(int e) const;

    SignedSet negated() const { return SignedSet(negatives, positives); }
    bool is_positive() const { return !positives.empty() && negatives.empty(); }
    bool is_negative() const { return positives.empty() && !negatives.empty(); }
    /// Constant sign up to negation (a "directed" member of a signature).
    bool is_directed() const { return !empty() && (positives.empty() || negatives.empty()); }

    /// Representative with the least support element signed +1.
    SignedSet canonical() const;
    /// Restriction to `keep` (signs kept, support intersected).
    SignedSet restricted(const EdgeSet& keep) const;

    auto operator<=>(const SignedSet&) const = default;
};

/// Order signed sets by support first; used to keep signatures canonical.
struct SignedSupportLess {
    bool operator()(const SignedSet& a, const SignedSet& b) const {
        EdgeSet sa = a.support(), sb = b.support();
        if (sa != sb) return sa < sb;
        return a.positives < b.positives;
    }
};

}  // namespace circuitry

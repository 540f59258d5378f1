#pragma once

#include <optional>

#include "circuitry/certificate.hpp"
#include "circuitry/matroid.hpp"
#include "circuitry/oriented.hpp"

namespace circuitry {

struct FmeResult {
    enum class Status {
        Extendable,     // every (matching, uncovered element) pair extends
        NotExtendable,  // witness carries the failing pair
        NotFalsified,   // enumeration truncated by the matching cap
    };
    Status status = Status::Extendable;
    std::optional<Certificate> witness;  // CounterexampleMatching when NotExtendable
    bool exhaustive = true;
    long long matchings_visited = 0;
};

/// Finite matching extendability, decided by enumerating every matching
/// (set of pairwise disjoint circuits) up to `matching_cap` and checking
/// each uncovered element for a disjoint circuit through it.
FmeResult is_fme(const Matroid& m, long long matching_cap = EnumLimits{}.matching_cap);

/// The well-order recursion: repeatedly take the canonically least circuit
/// through the least uncovered element that avoids everything chosen so
/// far. Returns a Partition, or the CounterexampleMatching at the stuck
/// step (which certifies the matroid is not f.m.e.).
Certificate greedy_fme_partition(const Matroid& m);

/// Exact-cover backtracking over all circuits. nullopt means no partition
/// into circuits exists.
std::optional<Certificate> exact_partition(const Matroid& m, const EnumLimits& limits = {});

/// First odd cocircuit in canonical order, if any.
std::optional<Certificate> has_odd_cocircuit(const Matroid& m, const EnumLimits& limits = {});

/// The directed recursion: repeatedly delete the canonically least positive
/// circuit through the least uncovered element. Requires a binary instance
/// with both signatures. On a balanced input this produces a Partition; a
/// stuck step yields the positive cocircuit of the minor (via farkas),
/// lifted to an unbalanced cocircuit of the original instance.
Certificate greedy_directed_partition(const OrientedMatroid& om, const EnumLimits& limits = {});

/// Exact cover restricted to the positive circuits.
std::optional<Certificate> exact_directed_partition(const OrientedMatroid& om, const EnumLimits& limits = {});

}  // namespace circuitry

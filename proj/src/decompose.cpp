#include "circuitry/decompose.hpp"

#include <algorithm>
#include <cstdint>

namespace circuitry {

namespace {

void require_mask_size(int n, const EnumLimits& limits) {
    if (n > limits.ground_cap)
        throw SizeLimit("ground set of " + std::to_string(n) + " elements exceeds the enumeration cap of " +
                        std::to_string(limits.ground_cap));
    if (n > 62) throw SizeLimit("subset enumeration is limited to 62 elements");
}

std::vector<std::uint64_t> circuit_masks(const std::vector<EdgeSet>& circuits) {
    std::vector<std::uint64_t> masks;
    masks.reserve(circuits.size());
    for (const EdgeSet& c : circuits) masks.push_back(c.mask());
    return masks;
}

struct FmeSearch {
    const std::vector<EdgeSet>& circuits;
    const std::vector<std::uint64_t>& masks;
    std::uint64_t full = 0;
    long long cap = 0;
    long long visited = 0;
    std::vector<int> chosen;
    std::optional<Certificate> witness;

    // Visits every matching once (circuits picked in increasing index
    // order) and checks extendability at each node. Returns false to stop.
    bool visit(std::uint64_t covered, std::size_t first) {
        if (++visited > cap) return false;
        std::uint64_t uncovered = full & ~covered;
        while (uncovered) {
            int e = __builtin_ctzll(uncovered);
            uncovered &= uncovered - 1;
            bool extends = false;
            for (std::size_t i = 0; i < masks.size(); ++i) {
                if ((masks[i] & (std::uint64_t{1} << e)) && (masks[i] & covered) == 0) {
                    extends = true;
                    break;
                }
            }
            if (!extends) {
                Matching a;
                for (int idx : chosen) a.circuits.push_back(circuits[static_cast<std::size_t>(idx)]);
                witness = Certificate::counterexample_matching(std::move(a), e);
                return false;
            }
        }
        for (std::size_t i = first; i < masks.size(); ++i) {
            if (masks[i] & covered) continue;
            chosen.push_back(static_cast<int>(i));
            bool keep_going = visit(covered | masks[i], i + 1);
            chosen.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

FmeResult is_fme(const Matroid& m, long long matching_cap) {
    EnumLimits limits;
    require_mask_size(m.size(), limits);
    std::vector<std::uint64_t> masks = circuit_masks(m.circuits());
    FmeSearch search{m.circuits(), masks, m.size() == 0 ? 0 : (std::uint64_t{1} << m.size()) - 1,
                     matching_cap, 0, {}, std::nullopt};

    bool completed = search.visit(0, 0);
    FmeResult result;
    result.matchings_visited = search.visited;
    if (search.witness) {
        result.status = FmeResult::Status::NotExtendable;
        result.witness = std::move(search.witness);
        result.exhaustive = true;
        return result;
    }
    if (!completed) {
        result.status = FmeResult::Status::NotFalsified;
        result.exhaustive = false;
        return result;
    }
    result.status = FmeResult::Status::Extendable;
    return result;
}

Certificate greedy_fme_partition(const Matroid& m) {
    EnumLimits limits;
    require_mask_size(m.size(), limits);
    std::vector<std::uint64_t> masks = circuit_masks(m.circuits());
    const std::uint64_t full = m.size() == 0 ? 0 : (std::uint64_t{1} << m.size()) - 1;

    std::uint64_t covered = 0;
    std::vector<EdgeSet> parts;
    while (covered != full) {
        int e = __builtin_ctzll(full & ~covered);
        int pick = -1;
        for (std::size_t i = 0; i < masks.size(); ++i) {
            if ((masks[i] & (std::uint64_t{1} << e)) && (masks[i] & covered) == 0) {
                pick = static_cast<int>(i);
                break;
            }
        }
        if (pick < 0) return Certificate::counterexample_matching(Matching{parts}, e);
        parts.push_back(m.circuits()[static_cast<std::size_t>(pick)]);
        covered |= masks[static_cast<std::size_t>(pick)];
    }
    return Certificate::partition(std::move(parts));
}

namespace {

bool cover_search(const std::vector<std::uint64_t>& masks, std::uint64_t covered, std::uint64_t full,
                  std::vector<int>& picked) {
    if (covered == full) return true;
    int e = __builtin_ctzll(full & ~covered);
    for (std::size_t i = 0; i < masks.size(); ++i) {
        if ((masks[i] & (std::uint64_t{1} << e)) == 0 || (masks[i] & covered)) continue;
        picked.push_back(static_cast<int>(i));
        if (cover_search(masks, covered | masks[i], full, picked)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Certificate> exact_partition(const Matroid& m, const EnumLimits& limits) {
    require_mask_size(m.size(), limits);
    std::vector<std::uint64_t> masks = circuit_masks(m.circuits());
    const std::uint64_t full = m.size() == 0 ? 0 : (std::uint64_t{1} << m.size()) - 1;
    std::vector<int> picked;
    if (!cover_search(masks, 0, full, picked)) return std::nullopt;
    std::vector<EdgeSet> parts;
    parts.reserve(picked.size());
    for (int i : picked) parts.push_back(m.circuits()[static_cast<std::size_t>(i)]);
    return Certificate::partition(std::move(parts));
}

std::optional<Certificate> has_odd_cocircuit(const Matroid& m, const EnumLimits& limits) {
    for (const EdgeSet& d : cocircuits(m, limits)) {
        if (d.size() % 2 == 1) return Certificate::odd_cocircuit(d);
    }
    return std::nullopt;
}

Certificate greedy_directed_partition(const OrientedMatroid& om, const EnumLimits& limits) {
    {
        BinaryWitness bw = is_binary(om.matroid(), limits);
        if (!bw.binary) throw NotBinary("directed partition needs a binary instance");
    }
    OrientedMatroid current = om.has_cocircuit_signature() ? om : derive_cocircuit_signature(om, limits);
    const OrientedMatroid original = current;

    EdgeSet deleted;  // original indices
    std::vector<SignedSet> parts;
    while (current.size() > 0) {
        // least uncovered element, by original label order
        int e_cur = 0;
        const SignedSet* pick = nullptr;
        for (const SignedSet& c : current.circuit_signature()) {
            if (c.is_directed() && c.support().contains(e_cur)) {
                pick = &c;
                break;
            }
        }
        if (pick == nullptr) {
            Certificate stuck = farkas(current, e_cur);
            if (stuck.kind != Certificate::Kind::PositiveCocircuit)
                throw InternalInvariantBroken("stuck step produced no positive cocircuit");
            // Lift the minor's positive cocircuit to an unbalanced cocircuit
            // of the original instance: deleted parts are positive circuits,
            // so they meet any original cocircuit in equally many + and -.
            EdgeSet minor_support;
            for (int e : stuck.signed_witness.support().members)
                minor_support.members.push_back(original.ground().index_of(current.ground().label(e)));
            minor_support = EdgeSet(std::move(minor_support.members));
            for (const SignedSet& d : original.cocircuit_signature()) {
                if (edge_minus(d.support(), deleted) != minor_support) continue;
                SignedSet rest = d.restricted(minor_support);
                SignedSet target;
                for (int e : stuck.signed_witness.support().members) {
                    int orig = original.ground().index_of(current.ground().label(e));
                    if (stuck.signed_witness.sign(e) > 0)
                        target.positives.members.push_back(orig);
                    else
                        target.negatives.members.push_back(orig);
                }
                target = SignedSet(EdgeSet(std::move(target.positives.members)),
                                   EdgeSet(std::move(target.negatives.members)));
                if (rest != target && rest != target.negated()) continue;
                if (d.positives.size() == d.negatives.size())
                    throw InternalInvariantBroken("lifted cocircuit is balanced");
                return Certificate::unbalanced_cocircuit(d);
            }
            throw InternalInvariantBroken("stuck step's cocircuit does not lift to the original instance");
        }
        SignedSet part;
        for (int e : pick->support().members) {
            int orig = original.ground().index_of(current.ground().label(e));
            part.positives.members.push_back(orig);
        }
        part = SignedSet(EdgeSet(std::move(part.positives.members)), EdgeSet{});
        parts.push_back(part);
        deleted = edge_union(deleted, part.support());

        EdgeSet to_remove;  // indices of the current minor
        for (int e : pick->support().members) to_remove.members.push_back(e);
        to_remove = EdgeSet(std::move(to_remove.members));
        current = oriented_deletion(current, to_remove, limits);
    }
    return Certificate::directed_partition(std::move(parts));
}

std::optional<Certificate> exact_directed_partition(const OrientedMatroid& om, const EnumLimits& limits) {
    require_mask_size(om.size(), limits);
    std::vector<std::uint64_t> masks;
    std::vector<const SignedSet*> positive;
    for (const SignedSet& c : om.circuit_signature()) {
        if (!c.is_directed()) continue;
        positive.push_back(&c);
        masks.push_back(c.support().mask());
    }
    const std::uint64_t full = om.size() == 0 ? 0 : (std::uint64_t{1} << om.size()) - 1;
    std::vector<int> picked;
    if (!cover_search(masks, 0, full, picked)) return std::nullopt;
    std::vector<SignedSet> parts;
    parts.reserve(picked.size());
    for (int i : picked) {
        const SignedSet& rep = *positive[static_cast<std::size_t>(i)];
        parts.push_back(rep.is_positive() ? rep : rep.negated());
    }
    return Certificate::directed_partition(std::move(parts));
}

}  // namespace circuitry

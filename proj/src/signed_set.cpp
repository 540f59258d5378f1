#include "circuitry/signed_set.hpp"

namespace circuitry {

SignedSet::SignedSet(EdgeSet pos, EdgeSet neg) : positives(std::move(pos)), negatives(std::move(neg)) {
    if (positives.intersects(negatives)) throw Error("signed set: sign classes overlap");
}

int SignedSet::sign(int e) const {
    if (positives.contains(e)) return 1;
    if (negatives.contains(e)) return -1;
    return 0;
}

SignedSet SignedSet::canonical() const {
    if (empty()) return *this;
    int least_pos = positives.empty() ? -1 : positives.members.front();
    int least_neg = negatives.empty() ? -1 : negatives.members.front();
    if (least_pos == -1) return negated();
    if (least_neg == -1) return *this;
    return least_neg < least_pos ? negated() : *this;
}

SignedSet SignedSet::restricted(const EdgeSet& keep) const {
    return SignedSet(edge_intersect(positives, keep), edge_intersect(negatives, keep));
}

}  // namespace circuitry

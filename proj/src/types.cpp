#include "circuitry/types.hpp"

#include <algorithm>

namespace circuitry {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    index_.reserve(labels_.size());
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        auto [it, fresh] = index_.emplace(labels_[static_cast<std::size_t>(i)], i);
        (void)it;
        if (!fresh) throw Error("duplicate element label: " + labels_[static_cast<std::size_t>(i)]);
    }
}

int GroundSet::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
}

EdgeSet::EdgeSet(std::vector<int> m) : members(std::move(m)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool EdgeSet::contains(int e) const {
    return std::binary_search(members.begin(), members.end(), e);
}

bool EdgeSet::subset_of(const EdgeSet& o) const {
    return std::includes(o.members.begin(), o.members.end(), members.begin(), members.end());
}

int EdgeSet::intersection_size(const EdgeSet& o) const {
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < members.size() && j < o.members.size()) {
        if (members[i] < o.members[j]) {
            ++i;
        } else if (members[i] > o.members[j]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

bool EdgeSet::intersects(const EdgeSet& o) const { return intersection_size(o) > 0; }

std::uint64_t EdgeSet::mask() const {
    std::uint64_t m = 0;
    for (int e : members) {
        if (e < 0 || e >= 63) throw SizeLimit("element index " + std::to_string(e) + " does not fit a 63-bit mask");
        m |= std::uint64_t{1} << e;
    }
    return m;
}

EdgeSet EdgeSet::from_mask(std::uint64_t mask) {
    EdgeSet s;
    while (mask) {
        int e = __builtin_ctzll(mask);
        s.members.push_back(e);
        mask &= mask - 1;
    }
    return s;
}

EdgeSet edge_union(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet r;
    std::set_union(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                   std::back_inserter(r.members));
    return r;
}

EdgeSet edge_minus(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet r;
    std::set_difference(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(r.members));
    return r;
}

EdgeSet edge_intersect(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet r;
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                          std::back_inserter(r.members));
    return r;
}

std::uint64_t BinaryMatrix::column_mask(int c) const {
    std::uint64_t m = 0;
    for (int r = 0; r < rows; ++r)
        if (at(r, c)) m |= std::uint64_t{1} << r;
    return m;
}

}  // namespace circuitry

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "circuitry/errors.hpp"

namespace circuitry {

/// Caps for the exhaustive enumerations. All searches are exact below the
/// caps and throw SizeLimit above them.
struct EnumLimits {
    int ground_cap = 24;             // max elements for subset enumeration
    int kernel_cap = 20;             // max GF(2) kernel dimension walked
    long long circuit_cap = 100000;  // max (co)circuits collected
    long long matching_cap = 1000000;  // max matchings visited by is_fme
};

/// Ordered universe of named elements. The index order is the canonical
/// well-order used by every greedy procedure and tie-break in the library.
class GroundSet {
public:
    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Index of `name`, or -1 if not an element.
    int index_of(std::string_view name) const;

    bool operator==(const GroundSet& o) const { return labels_ == o.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

/// Canonical finite subset of a ground set: sorted, duplicate-free indices.
/// operator< is lexicographic on the sorted member list, which is the
/// library-wide canonical order on circuits and cocircuits.
struct EdgeSet {
    std::vector<int> members;

    EdgeSet() = default;
    explicit EdgeSet(std::vector<int> m);
    EdgeSet(std::initializer_list<int> m) : EdgeSet(std::vector<int>(m)) {}

    int size() const { return static_cast<int>(members.size()); }
    bool empty() const { return members.empty(); }
    bool contains(int e) const;
    bool subset_of(const EdgeSet& o) const;
    int intersection_size(const EdgeSet& o) const;
    bool intersects(const EdgeSet& o) const;

    /// Bitmask over indices; members must fit in 63 bits.
    std::uint64_t mask() const;
    static EdgeSet from_mask(std::uint64_t mask);

    auto operator<=>(const EdgeSet&) const = default;
};

EdgeSet edge_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet edge_minus(const EdgeSet& a, const EdgeSet& b);
EdgeSet edge_intersect(const EdgeSet& a, const EdgeSet& b);

/// Dense 0/1 matrix over GF(2), row-major. Columns index ground elements.
struct BinaryMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> bits;  // rows*cols entries, each 0 or 1

    BinaryMatrix() = default;
    BinaryMatrix(int r, int c) : rows(r), cols(c), bits(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

    std::uint8_t at(int r, int c) const { return bits[static_cast<std::size_t>(r) * cols + c]; }
    void set(int r, int c, std::uint8_t v) { bits[static_cast<std::size_t>(r) * cols + c] = v; }

    /// Column as a bitmask over rows; needs rows <= 63.
    std::uint64_t column_mask(int c) const;

    bool operator==(const BinaryMatrix&) const = default;
};

/// Small exact integer matrix (entries stay well inside 64 bits; internal
/// elimination uses 128-bit products).
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

    long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    void set(int r, int c, long long v) { a[static_cast<std::size_t>(r) * cols + c] = v; }

    bool operator==(const IntMatrix&) const = default;
};

}  // namespace circuitry

#include "circuitry/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

#include "circuitry/certificate.hpp"

namespace circuitry {

namespace {

std::string describe(const GroundSet& ground, const EdgeSet& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int e : s.members) {
        if (!first) os << " ";
        first = false;
        if (e >= 0 && e < ground.size())
            os << ground.label(e);
        else
            os << "#" << e;
    }
    os << "}";
    return os.str();
}

void check_enumeration_size(const GroundSet& ground, const EnumLimits& limits) {
    int n = ground.size();
    if (n > limits.ground_cap)
        throw SizeLimit("ground set of " + std::to_string(n) + " elements exceeds the enumeration cap of " +
                        std::to_string(limits.ground_cap));
    if (n > 62) throw SizeLimit("subset enumeration is limited to 62 elements");
}

std::vector<std::uint64_t> circuit_masks(const Matroid& m) {
    std::vector<std::uint64_t> masks;
    masks.reserve(m.circuits().size());
    for (const EdgeSet& c : m.circuits()) masks.push_back(c.mask());
    return masks;
}

// Next bitmask with the same popcount (Gosper).
std::uint64_t next_combination(std::uint64_t v) {
    std::uint64_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

// Greedy rank of the subset `x` (as mask) against circuit masks.
int mask_rank(std::uint64_t x, const std::vector<std::uint64_t>& cmasks) {
    std::uint64_t indep = 0;
    int r = 0;
    std::uint64_t rest = x;
    while (rest) {
        std::uint64_t bit = rest & (~rest + 1);
        rest &= rest - 1;
        std::uint64_t cand = indep | bit;
        bool dependent = false;
        for (std::uint64_t cm : cmasks) {
            if ((cm & bit) && (cm & ~cand) == 0) {
                dependent = true;
                break;
            }
        }
        if (!dependent) {
            indep = cand;
            ++r;
        }
    }
    return r;
}

}  // namespace

Matroid matroid_from_circuits(GroundSet ground, std::vector<EdgeSet> circuits) {
    const int n = ground.size();
    for (EdgeSet& c : circuits) {
        c = EdgeSet(std::move(c.members));  // normalize: sorted, unique
        if (c.empty()) throw AxiomViolation("empty-circuit", "{}");
        for (int e : c.members)
            if (e < 0 || e >= n)
                throw AxiomViolation("member-out-of-range", describe(ground, c));
    }
    std::sort(circuits.begin(), circuits.end());

    const std::size_t k = circuits.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (circuits[i].subset_of(circuits[j]) || circuits[j].subset_of(circuits[i]))
                throw AxiomViolation("incomparable",
                                     describe(ground, circuits[i]) + ", " + describe(ground, circuits[j]));
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            EdgeSet common = edge_intersect(circuits[i], circuits[j]);
            if (common.empty()) continue;
            EdgeSet both = edge_union(circuits[i], circuits[j]);
            for (int e : common.members) {
                EdgeSet allowed = edge_minus(both, EdgeSet{e});
                bool found = false;
                for (const EdgeSet& c : circuits) {
                    if (c.subset_of(allowed)) {
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw AxiomViolation("elimination", describe(ground, circuits[i]) + ", " +
                                                            describe(ground, circuits[j]) + " at " +
                                                            ground.label(e));
            }
        }
    }
    return Matroid(std::move(ground), std::move(circuits), std::nullopt);
}

Matroid matroid_from_gf2(const BinaryMatrix& matrix, const EnumLimits& limits) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(matrix.cols));
    for (int c = 0; c < matrix.cols; ++c) labels.push_back("e" + std::to_string(c));
    return matroid_from_gf2(matrix, GroundSet(std::move(labels)), limits);
}

Matroid matroid_from_gf2(const BinaryMatrix& matrix, GroundSet ground, const EnumLimits& limits) {
    if (matrix.rows <= 0 || matrix.cols <= 0) throw Error("matrix must be nonempty");
    if (matrix.cols != ground.size()) throw Error("label count does not match matrix columns");
    check_enumeration_size(ground, limits);
    const int n = matrix.cols;

    // Row-echelon form on rows stored as column bitmasks.
    std::vector<std::uint64_t> rows;
    for (int r = 0; r < matrix.rows; ++r) {
        std::uint64_t row = 0;
        for (int c = 0; c < n; ++c)
            if (matrix.at(r, c)) row |= std::uint64_t{1} << c;
        rows.push_back(row);
    }
    std::vector<int> pivot_col;
    for (int c = 0; c < n; ++c) {
        std::size_t src = pivot_col.size();
        std::size_t found = rows.size();
        for (std::size_t r = src; r < rows.size(); ++r) {
            if (rows[r] & (std::uint64_t{1} << c)) {
                found = r;
                break;
            }
        }
        if (found == rows.size()) continue;
        std::swap(rows[src], rows[found]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != src && (rows[r] & (std::uint64_t{1} << c))) rows[r] ^= rows[src];
        pivot_col.push_back(c);
    }
    // Kernel basis: one vector per free column, read off the reduced rows.
    std::vector<std::uint64_t> basis;
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int p : pivot_col) is_pivot[static_cast<std::size_t>(p)] = true;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        std::uint64_t v = std::uint64_t{1} << c;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            if (rows[i] & (std::uint64_t{1} << c)) v |= std::uint64_t{1} << pivot_col[i];
        basis.push_back(v);
    }
    const int k = static_cast<int>(basis.size());
    if (k > limits.kernel_cap)
        throw SizeLimit("GF(2) kernel dimension " + std::to_string(k) + " exceeds the cap of " +
                        std::to_string(limits.kernel_cap));

    // Every nonzero kernel vector equals its support mask over GF(2);
    // circuits are the inclusion-minimal supports.
    std::vector<std::uint64_t> supports;
    supports.reserve((std::size_t{1} << k) - 1);
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); ++s) {
        std::uint64_t v = 0;
        for (int b = 0; b < k; ++b)
            if (s & (std::uint64_t{1} << b)) v ^= basis[static_cast<std::size_t>(b)];
        supports.push_back(v);
    }
    std::sort(supports.begin(), supports.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t s : supports) {
        bool has_smaller = false;
        for (std::uint64_t msk : minimal) {
            if ((msk & s) == msk) {
                has_smaller = true;
                break;
            }
        }
        if (!has_smaller) {
            minimal.push_back(s);
            if (static_cast<long long>(minimal.size()) > limits.circuit_cap)
                throw SizeLimit("circuit count exceeds the cap of " + std::to_string(limits.circuit_cap));
        }
    }
    std::vector<EdgeSet> circuits;
    circuits.reserve(minimal.size());
    for (std::uint64_t msk : minimal) circuits.push_back(EdgeSet::from_mask(msk));
    std::sort(circuits.begin(), circuits.end());
    return Matroid(std::move(ground), std::move(circuits), matrix);
}

bool independent(const Matroid& m, const EdgeSet& x) {
    for (const EdgeSet& c : m.circuits())
        if (c.subset_of(x)) return false;
    return true;
}

int rank(const Matroid& m, const EdgeSet& x) {
    EdgeSet indep;
    for (int e : x.members) {
        if (e < 0 || e >= m.size()) throw Error("rank: element out of range");
        EdgeSet cand = edge_union(indep, EdgeSet{e});
        bool dependent = false;
        for (const EdgeSet& c : m.circuits()) {
            if (c.contains(e) && c.subset_of(cand)) {
                dependent = true;
                break;
            }
        }
        if (!dependent) indep = std::move(cand);
    }
    return indep.size();
}

int rank(const Matroid& m) {
    std::vector<int> all(static_cast<std::size_t>(m.size()));
    for (int i = 0; i < m.size(); ++i) all[static_cast<std::size_t>(i)] = i;
    return rank(m, EdgeSet(std::move(all)));
}

std::vector<EdgeSet> cocircuits(const Matroid& m, const EnumLimits& limits) {
    const int n = m.size();
    if (n == 0) return {};
    check_enumeration_size(m.ground(), limits);
    std::vector<std::uint64_t> cmasks = circuit_masks(m);
    const std::uint64_t full = (n == 63) ? ~std::uint64_t{0} >> 1 : (std::uint64_t{1} << n) - 1;

    std::vector<std::uint64_t> found;
    for (int size = 1; size <= n; ++size) {
        std::uint64_t d = (std::uint64_t{1} << size) - 1;
        while (d <= full) {
            bool minimal_candidate = true;
            for (std::uint64_t msk : found) {
                if ((msk & d) == msk) {
                    minimal_candidate = false;
                    break;
                }
            }
            if (minimal_candidate) {
                bool ok = true;
                for (std::uint64_t cm : cmasks) {
                    if (std::popcount(cm & d) == 1) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    found.push_back(d);
                    if (static_cast<long long>(found.size()) > limits.circuit_cap)
                        throw SizeLimit("cocircuit count exceeds the cap of " + std::to_string(limits.circuit_cap));
                }
            }
            if (d == full) break;
            std::uint64_t next = next_combination(d);
            if (next <= d || next > full) break;
            d = next;
        }
    }
    std::vector<EdgeSet> result;
    result.reserve(found.size());
    for (std::uint64_t msk : found) result.push_back(EdgeSet::from_mask(msk));
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<EdgeSet> cocircuits_dual_rank(const Matroid& m, const EnumLimits& limits) {
    const int n = m.size();
    if (n == 0) return {};
    check_enumeration_size(m.ground(), limits);
    std::vector<std::uint64_t> cmasks = circuit_masks(m);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    const int r = mask_rank(full, cmasks);
    std::vector<EdgeSet> result;
    if (r == 0) return result;

    for (std::uint64_t h = 0; h <= full; ++h) {
        if (mask_rank(h, cmasks) != r - 1) continue;
        bool maximal = true;
        std::uint64_t outside = full & ~h;
        while (outside) {
            std::uint64_t bit = outside & (~outside + 1);
            outside &= outside - 1;
            if (mask_rank(h | bit, cmasks) == r - 1) {
                maximal = false;
                break;
            }
        }
        if (maximal) result.push_back(EdgeSet::from_mask(full & ~h));
    }
    std::sort(result.begin(), result.end());
    return result;
}

Matroid deletion(const Matroid& m, const EdgeSet& f) {
    const int n = m.size();
    EdgeSet gone;
    for (int e : f.members)
        if (e >= 0 && e < n) gone.members.push_back(e);
    if (gone.empty()) return m;

    std::vector<int> old_of_new;
    std::vector<std::string> labels;
    for (int e = 0; e < n; ++e) {
        if (!gone.contains(e)) {
            old_of_new.push_back(e);
            labels.push_back(m.ground().label(e));
        }
    }
    std::vector<int> new_of_old(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < static_cast<int>(old_of_new.size()); ++i)
        new_of_old[static_cast<std::size_t>(old_of_new[static_cast<std::size_t>(i)])] = i;

    std::vector<EdgeSet> kept;
    for (const EdgeSet& c : m.circuits()) {
        if (c.intersects(gone)) continue;
        EdgeSet mapped;
        for (int e : c.members) mapped.members.push_back(new_of_old[static_cast<std::size_t>(e)]);
        kept.push_back(std::move(mapped));
    }
    std::sort(kept.begin(), kept.end());

    std::optional<BinaryMatrix> rep;
    if (m.representation()) {
        const BinaryMatrix& a = *m.representation();
        BinaryMatrix b(a.rows, static_cast<int>(old_of_new.size()));
        for (int r = 0; r < a.rows; ++r)
            for (int c = 0; c < b.cols; ++c) b.set(r, c, a.at(r, old_of_new[static_cast<std::size_t>(c)]));
        rep = std::move(b);
    }
    return Matroid(GroundSet(std::move(labels)), std::move(kept), std::move(rep));
}

Matroid contraction(const Matroid& m, const EdgeSet& f) {
    const int n = m.size();
    EdgeSet gone;
    for (int e : f.members)
        if (e >= 0 && e < n) gone.members.push_back(e);
    if (gone.empty()) return m;

    std::vector<int> old_of_new;
    std::vector<std::string> labels;
    for (int e = 0; e < n; ++e) {
        if (!gone.contains(e)) {
            old_of_new.push_back(e);
            labels.push_back(m.ground().label(e));
        }
    }
    std::vector<int> new_of_old(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < static_cast<int>(old_of_new.size()); ++i)
        new_of_old[static_cast<std::size_t>(old_of_new[static_cast<std::size_t>(i)])] = i;

    // Minimal nonempty truncations C∖F.
    std::vector<EdgeSet> truncated;
    for (const EdgeSet& c : m.circuits()) {
        EdgeSet t = edge_minus(c, gone);
        if (!t.empty()) truncated.push_back(std::move(t));
    }
    std::sort(truncated.begin(), truncated.end());
    truncated.erase(std::unique(truncated.begin(), truncated.end()), truncated.end());
    std::vector<EdgeSet> minimal;
    for (const EdgeSet& t : truncated) {
        bool has_smaller = false;
        for (const EdgeSet& s : truncated) {
            if (s.size() < t.size() && s.subset_of(t)) {
                has_smaller = true;
                break;
            }
        }
        if (!has_smaller) minimal.push_back(t);
    }
    std::vector<EdgeSet> mapped;
    for (const EdgeSet& t : minimal) {
        EdgeSet c;
        for (int e : t.members) c.members.push_back(new_of_old[static_cast<std::size_t>(e)]);
        mapped.push_back(std::move(c));
    }
    std::sort(mapped.begin(), mapped.end());
    return Matroid(GroundSet(std::move(labels)), std::move(mapped), std::nullopt);
}

Matroid restriction(const Matroid& m, const EdgeSet& f) {
    EdgeSet complement;
    for (int e = 0; e < m.size(); ++e)
        if (!f.contains(e)) complement.members.push_back(e);
    return deletion(m, complement);
}

Matroid dot_restriction(const Matroid& m, const EdgeSet& f) {
    EdgeSet complement;
    for (int e = 0; e < m.size(); ++e)
        if (!f.contains(e)) complement.members.push_back(e);
    return contraction(m, complement);
}

BinaryWitness is_binary(const Matroid& m, const EnumLimits& limits) {
    std::vector<EdgeSet> cocircs = cocircuits(m, limits);
    for (const EdgeSet& c : m.circuits()) {
        for (const EdgeSet& d : cocircs) {
            if (c.intersection_size(d) % 2 != 0) return BinaryWitness{false, c, d};
        }
    }
    return BinaryWitness{};
}

StrongEliminationReport verify_strong_elimination(const Matroid& m) {
    StrongEliminationReport report;
    const auto& circuits = m.circuits();
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        for (std::size_t j = 0; j < circuits.size(); ++j) {
            if (i == j) continue;
            const EdgeSet& c0 = circuits[i];
            const EdgeSet& c1 = circuits[j];
            EdgeSet only0 = edge_minus(c0, c1);
            EdgeSet common = edge_intersect(c0, c1);
            if (only0.empty() || common.empty()) continue;
            EdgeSet both = edge_union(c0, c1);
            for (int e : only0.members) {
                for (int f : common.members) {
                    EdgeSet allowed = edge_minus(both, EdgeSet{f});
                    bool found = false;
                    for (const EdgeSet& c : circuits) {
                        if (c.contains(e) && c.subset_of(allowed)) {
                            found = true;
                            break;
                        }
                    }
                    if (!found) {
                        report.violations.push_back({c0, c1, e, f});
                        if (report.violations.size() >= 64) return report;
                    }
                }
            }
        }
    }
    return report;
}

Certificate paint(const Matroid& m, int e, const EdgeSet& x, const EdgeSet& y, const EnumLimits& limits) {
    return paint(m, e, x, y, cocircuits(m, limits));
}

Certificate paint(const Matroid& m, int e, const EdgeSet& x, const EdgeSet& y,
                  const std::vector<EdgeSet>& cocircuit_list) {
    const int n = m.size();
    if (e < 0 || e >= n) throw BadPartition("paint: element out of range");
    if (x.intersects(y) || x.contains(e) || y.contains(e))
        throw BadPartition("paint: sides overlap or contain the element");
    if (x.size() + y.size() != n - 1)
        throw BadPartition("paint: sides do not cover the remaining elements");

    EdgeSet x_side = edge_union(x, EdgeSet{e});
    EdgeSet y_side = edge_union(y, EdgeSet{e});
    const EdgeSet* circuit_hit = nullptr;
    for (const EdgeSet& c : m.circuits()) {
        if (c.contains(e) && c.subset_of(x_side)) {
            circuit_hit = &c;
            break;
        }
    }
    const EdgeSet* cocircuit_hit = nullptr;
    for (const EdgeSet& d : cocircuit_list) {
        if (d.contains(e) && d.subset_of(y_side)) {
            cocircuit_hit = &d;
            break;
        }
    }
    if (circuit_hit && cocircuit_hit)
        throw InternalInvariantBroken("paint: both a circuit and a cocircuit branch exist");
    if (!circuit_hit && !cocircuit_hit)
        throw InternalInvariantBroken("paint: neither a circuit nor a cocircuit branch exists");
    if (circuit_hit) return Certificate::circuit(*circuit_hit, e);
    return Certificate::cocircuit(*cocircuit_hit, e);
}

EdgeSet circuit_through_pair(const Matroid& m, const EdgeSet& d, int e, int f) {
    if (e == f || !d.contains(e) || !d.contains(f))
        throw Error("circuit_through_pair: e, f must be distinct elements of the cocircuit");
    EdgeSet pair{e, f};
    for (const EdgeSet& c : m.circuits()) {
        if (edge_intersect(c, d) == pair) return c;
    }
    throw InternalInvariantBroken("circuit_through_pair: no circuit meets the cocircuit in exactly the pair");
}

}  // namespace circuitry

#include "circuitry/oriented.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>

namespace circuitry {

const std::vector<SignedSet>& OrientedMatroid::cocircuit_signature() const {
    if (!cocircuit_signature_) throw Error("cocircuit signature is not present; derive or supply it first");
    return *cocircuit_signature_;
}

namespace {

void check_enumeration_size(int n, const EnumLimits& limits) {
    if (n > limits.ground_cap)
        throw SizeLimit("ground set of " + std::to_string(n) + " elements exceeds the enumeration cap of " +
                        std::to_string(limits.ground_cap));
    if (n > 62) throw SizeLimit("subset enumeration is limited to 62 elements");
}

std::uint64_t next_combination(std::uint64_t v) {
    std::uint64_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

std::string label_list(const GroundSet& ground, const EdgeSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        if (i) out += " ";
        out += ground.label(s.members[i]);
    }
    return out + "}";
}

// --- exact rational arithmetic for the integer-matrix construction ---

struct Rat {
    long long num = 0;
    long long den = 1;
};

Rat make_rat(long long n, long long d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rat{n, d};
}

Rat rat_of(long long n) { return Rat{n, 1}; }

Rat rat_mul(const Rat& a, const Rat& b) {
    // Cross-reduce first so the products stay inside 64 bits.
    long long g_a = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    long long g_b = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    if (g_a == 0) g_a = 1;
    if (g_b == 0) g_b = 1;
    __int128 n = static_cast<__int128>(a.num / g_a) * (b.num / g_b);
    __int128 d = static_cast<__int128>(a.den / g_b) * (b.den / g_a);
    long long nn = static_cast<long long>(n);
    long long dd = static_cast<long long>(d);
    if (static_cast<__int128>(nn) != n || static_cast<__int128>(dd) != d)
        throw Error("rational overflow in exact elimination");
    return make_rat(nn, dd);
}

Rat rat_sub(const Rat& a, const Rat& b) {
    __int128 n = static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den;
    __int128 d = static_cast<__int128>(a.den) * b.den;
    long long nn = static_cast<long long>(n);
    long long dd = static_cast<long long>(d);
    if (static_cast<__int128>(nn) != n || static_cast<__int128>(dd) != d)
        throw Error("rational overflow in exact elimination");
    return make_rat(nn, dd);
}

bool rat_zero(const Rat& a) { return a.num == 0; }

Rat rat_div(const Rat& a, const Rat& b) {
    if (b.num == 0) throw Error("rational division by zero");
    return rat_mul(a, make_rat(b.den, b.num));
}

using RatMatrix = std::vector<std::vector<Rat>>;

// Row echelon in place; returns pivot column per pivot row.
std::vector<int> rat_eliminate(RatMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!rat_zero(m[i][c])) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || rat_zero(m[i][c])) continue;
            Rat factor = rat_div(m[i][c], m[r][c]);
            for (std::size_t j = c; j < cols; ++j) m[i][j] = rat_sub(m[i][j], rat_mul(factor, m[r][j]));
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rat_rank(RatMatrix m) { return static_cast<int>(rat_eliminate(m).size()); }

// Basis of {x : m x = 0}; each vector scaled to a primitive integer vector.
std::vector<std::vector<long long>> rat_kernel_basis(RatMatrix m, int cols) {
    std::vector<int> pivots = rat_eliminate(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<std::vector<long long>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rat> x(static_cast<std::size_t>(cols), rat_of(0));
        x[static_cast<std::size_t>(free)] = rat_of(1);
        for (std::size_t pr = pivots.size(); pr-- > 0;) {
            int pc = pivots[pr];
            Rat sum = rat_of(0);
            for (int j = pc + 1; j < cols; ++j)
                if (!rat_zero(x[static_cast<std::size_t>(j)]))
                    sum = rat_sub(sum, rat_mul(m[pr][static_cast<std::size_t>(j)], x[static_cast<std::size_t>(j)]));
            x[static_cast<std::size_t>(pc)] = rat_div(sum, m[pr][static_cast<std::size_t>(pc)]);
        }
        long long lcm = 1;
        for (const Rat& v : x) lcm = std::lcm(lcm, v.den);
        std::vector<long long> xi(static_cast<std::size_t>(cols));
        long long g = 0;
        for (int j = 0; j < cols; ++j) {
            xi[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)].num * (lcm / x[static_cast<std::size_t>(j)].den);
            g = std::gcd(g, xi[static_cast<std::size_t>(j)] < 0 ? -xi[static_cast<std::size_t>(j)] : xi[static_cast<std::size_t>(j)]);
        }
        if (g > 1)
            for (long long& v : xi) v /= g;
        basis.push_back(std::move(xi));
    }
    return basis;
}

RatMatrix columns_of(const IntMatrix& a, const EdgeSet& cols) {
    RatMatrix m(static_cast<std::size_t>(a.rows), std::vector<Rat>(cols.members.size()));
    for (int r = 0; r < a.rows; ++r)
        for (std::size_t j = 0; j < cols.members.size(); ++j)
            m[static_cast<std::size_t>(r)][j] = rat_of(a.at(r, cols.members[j]));
    return m;
}

RatMatrix transpose_columns_of(const IntMatrix& a, const EdgeSet& cols) {
    RatMatrix m(cols.members.size(), std::vector<Rat>(static_cast<std::size_t>(a.rows)));
    for (std::size_t j = 0; j < cols.members.size(); ++j)
        for (int r = 0; r < a.rows; ++r) m[j][static_cast<std::size_t>(r)] = rat_of(a.at(r, cols.members[j]));
    return m;
}

SignedSet signed_from_values(const EdgeSet& support, const std::vector<long long>& values) {
    EdgeSet pos, neg;
    for (std::size_t j = 0; j < support.members.size(); ++j) {
        if (values[j] > 0)
            pos.members.push_back(support.members[j]);
        else if (values[j] < 0)
            neg.members.push_back(support.members[j]);
        else
            throw NotOrientable("kernel vector vanishes inside its own support");
    }
    return SignedSet(std::move(pos), std::move(neg)).canonical();
}

}  // namespace

OrientedMatroid oriented_from_signature(Matroid m, std::vector<SignedSet> circuit_signature,
                                        std::optional<std::vector<SignedSet>> cocircuit_signature,
                                        const EnumLimits& limits) {
    for (SignedSet& s : circuit_signature) s = s.canonical();
    std::sort(circuit_signature.begin(), circuit_signature.end(), SignedSupportLess{});
    circuit_signature.erase(std::unique(circuit_signature.begin(), circuit_signature.end()),
                            circuit_signature.end());
    if (circuit_signature.size() != m.circuits().size())
        throw InconsistentSignature("signature has " + std::to_string(circuit_signature.size()) +
                                    " representatives for " + std::to_string(m.circuits().size()) + " circuits");
    for (std::size_t i = 0; i < circuit_signature.size(); ++i) {
        if (circuit_signature[i].support() != m.circuits()[i])
            throw InconsistentSignature("signature supports do not match the circuits (" +
                                        label_list(m.ground(), circuit_signature[i].support()) + ")");
    }

    if (cocircuit_signature) {
        for (SignedSet& s : *cocircuit_signature) s = s.canonical();
        std::sort(cocircuit_signature->begin(), cocircuit_signature->end(), SignedSupportLess{});
        cocircuit_signature->erase(std::unique(cocircuit_signature->begin(), cocircuit_signature->end()),
                                   cocircuit_signature->end());
        std::vector<EdgeSet> expected = cocircuits(m, limits);
        if (cocircuit_signature->size() != expected.size())
            throw InconsistentSignature("cocircuit signature size does not match the cocircuit count");
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if ((*cocircuit_signature)[i].support() != expected[i])
                throw InconsistentSignature("cocircuit signature supports do not match the cocircuits (" +
                                            label_list(m.ground(), (*cocircuit_signature)[i].support()) + ")");
        }
    }

    OrientedMatroid om;
    om.matroid_ = std::move(m);
    om.circuit_signature_ = std::move(circuit_signature);
    om.cocircuit_signature_ = std::move(cocircuit_signature);
    if (om.cocircuit_signature_) {
        OrthogonalityReport report = verify_orthogonality(om);
        if (!report.ok()) {
            const OrthogonalityViolation& v = report.violations.front();
            throw InconsistentSignature(
                std::string("orthogonality fails (") + (v.zero_sum ? "zero-sum" : "restriction") +
                ") for circuit " + label_list(om.ground(), om.circuit_signature_[static_cast<std::size_t>(v.circuit_index)].support()) +
                " and cocircuit " +
                label_list(om.ground(), (*om.cocircuit_signature_)[static_cast<std::size_t>(v.cocircuit_index)].support()));
        }
    }
    return om;
}

OrthogonalityReport verify_orthogonality(const OrientedMatroid& om) {
    const std::vector<SignedSet>& circs = om.circuit_signature();
    const std::vector<SignedSet>& cocircs = om.cocircuit_signature();
    OrthogonalityReport report;

    report.binary = true;
    for (const SignedSet& c : circs) {
        EdgeSet cs = c.support();
        for (const SignedSet& d : cocircs) {
            if (cs.intersection_size(d.support()) % 2 != 0) {
                report.binary = false;
                break;
            }
        }
        if (!report.binary) break;
    }

    for (std::size_t i = 0; i < circs.size(); ++i) {
        EdgeSet cs = circs[i].support();
        for (std::size_t j = 0; j < cocircs.size(); ++j) {
            EdgeSet common = edge_intersect(cs, cocircs[j].support());
            if (common.empty()) continue;
            bool all_equal = true, all_opposite = true;
            long long sum = 0;
            for (int e : common.members) {
                int sc = circs[i].sign(e);
                int sd = cocircs[j].sign(e);
                if (sc == sd) all_opposite = false;
                if (sc != sd) all_equal = false;
                sum += sc * sd;
            }
            if (all_equal || all_opposite)
                report.violations.push_back({static_cast<int>(i), static_cast<int>(j), false});
            else if (report.binary && sum != 0)
                report.violations.push_back({static_cast<int>(i), static_cast<int>(j), true});
        }
    }
    return report;
}

OrientedMatroid oriented_from_digraph(const Graph& g, const EnumLimits& limits) {
    Matroid m = cycle_matroid(g, limits);

    std::vector<SignedSet> circuit_sigs;
    circuit_sigs.reserve(m.circuits().size());
    for (const EdgeSet& circuit : m.circuits()) {
        if (circuit.size() == 1) {
            circuit_sigs.push_back(SignedSet(circuit, EdgeSet{}));
            continue;
        }
        EdgeSet pos, neg;
        std::vector<bool> used(static_cast<std::size_t>(g.arc_count()), false);
        int a0 = circuit.members.front();
        used[static_cast<std::size_t>(a0)] = true;
        pos.members.push_back(a0);
        int start = g.arcs[static_cast<std::size_t>(a0)].tail;
        int v = g.arcs[static_cast<std::size_t>(a0)].head;
        int steps = circuit.size() - 1;
        while (steps-- > 0) {
            int next = -1;
            for (int a : circuit.members) {
                if (used[static_cast<std::size_t>(a)]) continue;
                const Graph::Arc& arc = g.arcs[static_cast<std::size_t>(a)];
                if (arc.tail == v || arc.head == v) {
                    next = a;
                    break;
                }
            }
            if (next < 0) throw InternalInvariantBroken("cycle traversal stalled");
            used[static_cast<std::size_t>(next)] = true;
            const Graph::Arc& arc = g.arcs[static_cast<std::size_t>(next)];
            if (arc.tail == v) {
                pos.members.push_back(next);
                v = arc.head;
            } else {
                neg.members.push_back(next);
                v = arc.tail;
            }
        }
        if (v != start) throw InternalInvariantBroken("cycle traversal did not close");
        circuit_sigs.push_back(SignedSet(EdgeSet(std::move(pos.members)), EdgeSet(std::move(neg.members))).canonical());
    }

    std::vector<SignedSet> cocircuit_sigs;
    for (const EdgeSet& bond : cocircuits(m, limits)) {
        std::vector<int> comp = g.components_without(bond);
        int ref = comp[static_cast<std::size_t>(g.arcs[static_cast<std::size_t>(bond.members.front())].tail)];
        int other = -1;
        EdgeSet pos, neg;
        for (int a : bond.members) {
            const Graph::Arc& arc = g.arcs[static_cast<std::size_t>(a)];
            int ct = comp[static_cast<std::size_t>(arc.tail)];
            int ch = comp[static_cast<std::size_t>(arc.head)];
            if (ct == ch) throw InternalInvariantBroken("bond arc does not cross the split");
            int far = (ct == ref) ? ch : ct;
            if (other == -1) other = far;
            if ((ct != ref && ct != other) || (ch != ref && ch != other))
                throw InternalInvariantBroken("bond does not split into two sides");
            if (ct == ref)
                pos.members.push_back(a);
            else
                neg.members.push_back(a);
        }
        cocircuit_sigs.push_back(SignedSet(EdgeSet(std::move(pos.members)), EdgeSet(std::move(neg.members))).canonical());
    }

    try {
        return oriented_from_signature(std::move(m), std::move(circuit_sigs), std::move(cocircuit_sigs), limits);
    } catch (const InconsistentSignature& e) {
        throw InternalInvariantBroken(std::string("digraph orientation failed verification: ") + e.what());
    }
}

OrientedMatroid oriented_from_integer_matrix(const IntMatrix& a, const EnumLimits& limits) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(a.cols));
    for (int c = 0; c < a.cols; ++c) labels.push_back("e" + std::to_string(c));
    return oriented_from_integer_matrix(a, GroundSet(std::move(labels)), limits);
}

OrientedMatroid oriented_from_integer_matrix(const IntMatrix& a, GroundSet ground, const EnumLimits& limits) {
    if (a.rows <= 0 || a.cols <= 0) throw Error("matrix must be nonempty");
    if (a.cols != ground.size()) throw Error("label count does not match matrix columns");
    const int n = a.cols;
    check_enumeration_size(n, limits);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;

    std::vector<std::uint64_t> accepted;
    std::vector<EdgeSet> supports;
    std::vector<SignedSet> circuit_sigs;
    for (int size = 1; size <= n; ++size) {
        std::uint64_t s = (std::uint64_t{1} << size) - 1;
        while (s <= full) {
            bool contains_circuit = false;
            for (std::uint64_t msk : accepted) {
                if ((msk & s) == msk) {
                    contains_circuit = true;
                    break;
                }
            }
            if (!contains_circuit) {
                EdgeSet cols = EdgeSet::from_mask(s);
                if (rat_rank(columns_of(a, cols)) < size) {
                    // minimal dependent: the kernel on these columns is a line
                    auto basis = rat_kernel_basis(columns_of(a, cols), size);
                    if (basis.size() != 1)
                        throw NotOrientable("kernel on a minimal dependent support is not a line at " +
                                            label_list(ground, cols));
                    circuit_sigs.push_back(signed_from_values(cols, basis.front()));
                    supports.push_back(std::move(cols));
                    accepted.push_back(s);
                    if (static_cast<long long>(accepted.size()) > limits.circuit_cap)
                        throw SizeLimit("circuit count exceeds the cap of " + std::to_string(limits.circuit_cap));
                }
            }
            if (s == full) break;
            std::uint64_t next = next_combination(s);
            if (next <= s || next > full) break;
            s = next;
        }
    }

    Matroid m = matroid_from_circuits(std::move(ground), std::move(supports));

    std::vector<SignedSet> cocircuit_sigs;
    for (const EdgeSet& d : cocircuits(m, limits)) {
        EdgeSet hyperplane;
        for (int e = 0; e < n; ++e)
            if (!d.contains(e)) hyperplane.members.push_back(e);
        // functional vanishing exactly on the hyperplane's span
        auto basis = rat_kernel_basis(transpose_columns_of(a, hyperplane), a.rows);
        std::vector<long long> values(d.members.size(), 0);
        bool found = false;
        for (const auto& y : basis) {
            bool nonzero = false;
            for (std::size_t j = 0; j < d.members.size(); ++j) {
                __int128 v = 0;
                for (int r = 0; r < a.rows; ++r)
                    v += static_cast<__int128>(y[static_cast<std::size_t>(r)]) * a.at(r, d.members[j]);
                values[j] = static_cast<long long>(v);
                if (v != 0) nonzero = true;
            }
            if (nonzero) {
                found = true;
                break;
            }
        }
        if (!found) throw NotOrientable("no functional separates cocircuit " + label_list(m.ground(), d));
        cocircuit_sigs.push_back(signed_from_values(d, values));
    }

    try {
        return oriented_from_signature(std::move(m), std::move(circuit_sigs), std::move(cocircuit_sigs), limits);
    } catch (const InconsistentSignature& e) {
        throw NotOrientable(std::string("sign data failed orthogonality verification: ") + e.what());
    }
}

OrientedMatroid derive_cocircuit_signature(const OrientedMatroid& om, const EnumLimits& limits) {
    const Matroid& m = om.matroid();
    std::vector<EdgeSet> cocircs = cocircuits(m, limits);
    for (const EdgeSet& c : m.circuits())
        for (const EdgeSet& d : cocircs)
            if (c.intersection_size(d) % 2 != 0)
                throw NotBinary("cocircuit signature derivation needs a binary matroid; odd pair " +
                                label_list(m.ground(), c) + ", " + label_list(m.ground(), d));

    std::vector<SignedSet> derived;
    derived.reserve(cocircs.size());
    for (const EdgeSet& d : cocircs) {
        int anchor = d.members.front();
        EdgeSet pos{anchor}, neg;
        for (int f : d.members) {
            if (f == anchor) continue;
            EdgeSet c = circuit_through_pair(m, d, anchor, f);
            int idx = static_cast<int>(std::lower_bound(m.circuits().begin(), m.circuits().end(), c) -
                                       m.circuits().begin());
            const SignedSet& rep = om.circuit_signature()[static_cast<std::size_t>(idx)];
            int sign = -rep.sign(anchor) * rep.sign(f);
            if (sign > 0)
                pos.members.push_back(f);
            else
                neg.members.push_back(f);
        }
        derived.push_back(SignedSet(EdgeSet(std::move(pos.members)), EdgeSet(std::move(neg.members))).canonical());
    }
    return oriented_from_signature(m, om.circuit_signature(), std::move(derived), limits);
}

BalanceResult is_balanced(const OrientedMatroid& om) {
    for (const SignedSet& d : om.cocircuit_signature()) {
        if (d.positives.size() != d.negatives.size())
            return BalanceResult{false, Certificate::unbalanced_cocircuit(d)};
    }
    return BalanceResult{true, std::nullopt};
}

Certificate farkas(const OrientedMatroid& om, int e) {
    if (e < 0 || e >= om.size()) throw Error("farkas: element out of range");
    const SignedSet* circuit_hit = nullptr;
    for (const SignedSet& c : om.circuit_signature()) {
        if (c.is_directed() && c.support().contains(e)) {
            circuit_hit = &c;
            break;
        }
    }
    const SignedSet* cocircuit_hit = nullptr;
    for (const SignedSet& d : om.cocircuit_signature()) {
        if (d.is_directed() && d.support().contains(e)) {
            cocircuit_hit = &d;
            break;
        }
    }
    if (circuit_hit && cocircuit_hit)
        throw InternalInvariantBroken("both a positive circuit and a positive cocircuit pass through " +
                                      om.ground().label(e));
    if (!circuit_hit && !cocircuit_hit)
        throw InternalInvariantBroken("neither a positive circuit nor a positive cocircuit passes through " +
                                      om.ground().label(e));
    if (circuit_hit) {
        SignedSet c = circuit_hit->is_positive() ? *circuit_hit : circuit_hit->negated();
        return Certificate::positive_circuit(std::move(c), e);
    }
    SignedSet d = cocircuit_hit->is_positive() ? *cocircuit_hit : cocircuit_hit->negated();
    return Certificate::positive_cocircuit(std::move(d), e);
}

namespace {

std::vector<int> new_index_map(const GroundSet& old_ground, const GroundSet& new_ground) {
    std::vector<int> map(static_cast<std::size_t>(old_ground.size()), -1);
    for (int e = 0; e < old_ground.size(); ++e) map[static_cast<std::size_t>(e)] = new_ground.index_of(old_ground.label(e));
    return map;
}

SignedSet remap(const SignedSet& s, const std::vector<int>& new_of_old) {
    EdgeSet pos, neg;
    for (int e : s.positives.members) pos.members.push_back(new_of_old[static_cast<std::size_t>(e)]);
    for (int e : s.negatives.members) neg.members.push_back(new_of_old[static_cast<std::size_t>(e)]);
    return SignedSet(EdgeSet(std::move(pos.members)), EdgeSet(std::move(neg.members)));
}

EdgeSet remap_set(const EdgeSet& s, const std::vector<int>& new_of_old) {
    EdgeSet out;
    for (int e : s.members) out.members.push_back(new_of_old[static_cast<std::size_t>(e)]);
    return EdgeSet(std::move(out.members));
}

}  // namespace

OrientedMatroid oriented_deletion(const OrientedMatroid& om, const EdgeSet& f, const EnumLimits& limits) {
    const Matroid& m = om.matroid();
    Matroid reduced = deletion(m, f);
    if (reduced == m) return om;
    std::vector<int> map = new_index_map(m.ground(), reduced.ground());

    std::vector<SignedSet> circ;
    for (const SignedSet& c : om.circuit_signature()) {
        if (!c.support().intersects(f)) circ.push_back(remap(c, map));
    }

    std::optional<std::vector<SignedSet>> cocirc;
    if (om.has_cocircuit_signature()) {
        std::vector<EdgeSet> reduced_cocircs = cocircuits(reduced, limits);
        std::vector<SignedSet> kept;
        for (const SignedSet& d : om.cocircuit_signature()) {
            EdgeSet rest = edge_minus(d.support(), f);
            if (rest.empty()) continue;
            EdgeSet mapped = remap_set(rest, map);
            if (!std::binary_search(reduced_cocircs.begin(), reduced_cocircs.end(), mapped)) continue;
            kept.push_back(remap(d.restricted(rest), map).canonical());
        }
        std::sort(kept.begin(), kept.end(), SignedSupportLess{});
        kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
        cocirc = std::move(kept);
    }
    return oriented_from_signature(std::move(reduced), std::move(circ), std::move(cocirc), limits);
}

OrientedMatroid oriented_contraction(const OrientedMatroid& om, const EdgeSet& f, const EnumLimits& limits) {
    const Matroid& m = om.matroid();
    Matroid reduced = contraction(m, f);
    if (reduced == m) return om;
    std::vector<int> map = new_index_map(m.ground(), reduced.ground());

    std::vector<SignedSet> circ;
    for (const SignedSet& c : om.circuit_signature()) {
        EdgeSet rest = edge_minus(c.support(), f);
        if (rest.empty()) continue;
        EdgeSet mapped = remap_set(rest, map);
        if (!std::binary_search(reduced.circuits().begin(), reduced.circuits().end(), mapped)) continue;
        circ.push_back(remap(c.restricted(rest), map).canonical());
    }
    std::sort(circ.begin(), circ.end(), SignedSupportLess{});
    circ.erase(std::unique(circ.begin(), circ.end()), circ.end());

    std::optional<std::vector<SignedSet>> cocirc;
    if (om.has_cocircuit_signature()) {
        std::vector<SignedSet> kept;
        for (const SignedSet& d : om.cocircuit_signature()) {
            if (!d.support().intersects(f)) kept.push_back(remap(d, map));
        }
        cocirc = std::move(kept);
    }
    return oriented_from_signature(std::move(reduced), std::move(circ), std::move(cocirc), limits);
}

}  // namespace circuitry

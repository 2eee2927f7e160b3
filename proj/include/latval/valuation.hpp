#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latval/birkhoff.hpp"
#include "latval/bitset.hpp"
#include "latval/error.hpp"
#include "latval/poset.hpp"

namespace latval {

/// Natural-number weight per poset element, indexed canonically.
using WeightFunction = std::vector<std::uint64_t>;

/// Natural-number value per lattice element, indexed by downset ordinal.
using Valuation = std::vector<std::uint64_t>;

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    if (s < a) raise(errc::arithmetic_overflow, "weight sum exceeds 64 bits");
    return s;
}

inline std::uint64_t weight_of_subset(const Bitset& s, const WeightFunction& w) {
    std::uint64_t total = 0;
    for (std::size_t x = s.find_first(); x != Bitset::npos; x = s.find_next(x))
        total = checked_add(total, w[x]);
    return total;
}

} // namespace detail

/// v(s) = sum of the weights over the members of s. The result satisfies
/// all three valuation axioms by construction.
inline Valuation valuation_from_weights(const DownsetLattice& l, const WeightFunction& w) {
    if (w.size() != l.poset().size())
        raise(errc::domain_mismatch, "weight function does not match the poset elements");
    Valuation v(l.size());
    for (std::size_t s = 0; s < l.size(); ++s) v[s] = detail::weight_of_subset(l.downset(s), w);
    return v;
}

/// Dual valuation on upsets, with the same weight function: entry s holds
/// v'(delta(s)), the weight of the upset complementary to downset s.
inline Valuation dual_valuation(const DownsetLattice& l, const WeightFunction& w) {
    if (w.size() != l.poset().size())
        raise(errc::domain_mismatch, "weight function does not match the poset elements");
    Valuation v(l.size());
    for (std::size_t s = 0; s < l.size(); ++s) v[s] = detail::weight_of_subset(l.delta(s), w);
    return v;
}

/// Outcome of checking the three valuation axioms on an arbitrary value
/// table. Witnesses are ordinal pairs found first in canonical scan order.
struct AxiomReport {
    bool bottom_zero = true;
    bool monotone = true;
    bool additive = true;
    std::optional<std::pair<std::size_t, std::size_t>> monotone_witness;
    std::optional<std::pair<std::size_t, std::size_t>> additive_witness;

    bool ok() const { return bottom_zero && monotone && additive; }
};

inline AxiomReport check_valuation_axioms(const DownsetLattice& l, const Valuation& v) {
    if (v.size() != l.size()) raise(errc::domain_mismatch, "value table does not match the lattice");
    AxiomReport report;
    if (l.size() == 0) return report;
    report.bottom_zero = v[l.bottom()] == 0;
    for (std::size_t s = 0; s < l.size() && report.monotone; ++s)
        for (std::size_t t = 0; t < l.size(); ++t) {
            if (s == t || !l.downset(s).is_subset_of(l.downset(t))) continue;
            if (v[s] > v[t]) {
                report.monotone = false;
                report.monotone_witness = {s, t};
                break;
            }
        }
    for (std::size_t s = 0; s < l.size() && report.additive; ++s)
        for (std::size_t t = s + 1; t < l.size(); ++t) {
            if (v[l.join(s, t)] + v[l.meet(s, t)] != v[s] + v[t]) {
                report.additive = false;
                report.additive_witness = {s, t};
                break;
            }
        }
    return report;
}

/// True iff the values are exactly {0, ..., n-1}, each hit once.
inline bool is_bijective(const DownsetLattice& l, const Valuation& v) {
    if (v.size() != l.size()) raise(errc::domain_mismatch, "value table does not match the lattice");
    std::vector<bool> seen(l.size(), false);
    for (auto value : v) {
        if (value >= l.size() || seen[value]) return false;
        seen[value] = true;
    }
    return true;
}

namespace detail {

/// Closure of the ordinals in t under the binary op (join or meet). By
/// associativity this is the set of all op-combinations of nonempty subsets
/// of t. Returns sorted ordinals.
template <typename Op>
std::vector<std::size_t> closure_under(const DownsetLattice& l, std::span<const std::size_t> t,
                                       Op op) {
    if (t.empty()) raise(errc::empty_input, "closure of an empty collection");
    std::vector<bool> in(l.size(), false);
    std::vector<std::size_t> members;
    auto add = [&](std::size_t s) {
        if (s >= l.size()) raise(errc::unknown_downset, "ordinal " + std::to_string(s));
        if (!in[s]) {
            in[s] = true;
            members.push_back(s);
        }
    };
    for (auto s : t) add(s);
    // Fixpoint: combine every pair once; newly added members join the queue.
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) add(op(members[i], members[j]));
    std::sort(members.begin(), members.end());
    return members;
}

} // namespace detail

/// All joins of nonempty subsets of t (closure under binary join).
inline std::vector<std::size_t> join_set(const DownsetLattice& l, std::span<const std::size_t> t) {
    return detail::closure_under(l, t, [&](std::size_t a, std::size_t b) { return l.join(a, b); });
}

/// All meets of nonempty subsets of t (closure under binary meet).
inline std::vector<std::size_t> meet_set(const DownsetLattice& l, std::span<const std::size_t> t) {
    return detail::closure_under(l, t, [&](std::size_t a, std::size_t b) { return l.meet(a, b); });
}

/// Verdict of the completeness check. On failure the witness names the
/// offending segment: the direction, the value threshold j (lower: segment
/// holds values < j; upper: values >= j), and the sorted value set of the
/// segment's closure, which is not a contiguous run.
struct SegmentWitness {
    enum class Direction { lower, upper };
    Direction direction;
    std::size_t threshold;
    std::vector<std::uint64_t> closure_values;
};

struct SegmentVerdict {
    bool ok = true;
    std::optional<SegmentWitness> witness;
};

/// Checks both halves of completeness for a bijective valuation: every
/// initial segment (elements valued 0..j-1) must have a join closure whose
/// values again form a prefix 0..m, and dually every final segment's meet
/// closure must form a suffix. Segments are scanned lower j=1..n first,
/// then upper j=n-1..0, and the first failure is reported.
inline SegmentVerdict is_complete(const DownsetLattice& l, const Valuation& v) {
    if (!is_bijective(l, v)) raise(errc::not_bijective, "completeness is defined over bijective valuations");
    const std::size_t n = l.size();
    std::vector<std::size_t> by_value(n);
    for (std::size_t s = 0; s < n; ++s) by_value[v[s]] = s;

    auto scan = [&](bool lower) -> std::optional<SegmentWitness> {
        // Incremental closure: adding one generator a to a closed set C
        // closes again after adding a and a*c for every c in C.
        std::vector<bool> in(n, false);
        std::vector<std::size_t> members;
        std::uint64_t extreme = 0; // running max (lower) / min (upper) of closure values
        auto add = [&](std::size_t s) {
            if (in[s]) return;
            in[s] = true;
            members.push_back(s);
            if (members.size() == 1)
                extreme = v[s];
            else
                extreme = lower ? std::max(extreme, v[s]) : std::min(extreme, v[s]);
        };
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t a = by_value[lower ? step : n - 1 - step];
            std::size_t before = members.size();
            add(a);
            for (std::size_t i = 0; i < before; ++i)
                add(lower ? l.join(a, members[i]) : l.meet(a, members[i]));
            bool contiguous = lower ? members.size() == extreme + 1
                                    : members.size() == n - extreme;
            if (!contiguous) {
                std::vector<std::uint64_t> values;
                values.reserve(members.size());
                for (auto s : members) values.push_back(v[s]);
                std::sort(values.begin(), values.end());
                std::size_t threshold = lower ? step + 1 : n - 1 - step;
                return SegmentWitness{lower ? SegmentWitness::Direction::lower
                                            : SegmentWitness::Direction::upper,
                                      threshold, std::move(values)};
            }
        }
        return std::nullopt;
    };

    SegmentVerdict verdict;
    auto witness = scan(true);
    if (!witness) witness = scan(false);
    if (witness) {
        verdict.ok = false;
        verdict.witness = std::move(witness);
    }
    return verdict;
}

/// Characteristic bits of the downset reindexed by lambda1 position: bit
/// j-1 is set iff the element at position j lies in the downset. Numeric
/// comparison of the results realizes the lexicographic order on downsets
/// in which the highest lambda1 position is most significant.
inline Bitset omega_encode(const Bitset& downset, const LinearExtension& lambda1) {
    Bitset code(lambda1.size());
    for (std::size_t j = 1; j <= lambda1.size(); ++j)
        if (downset.test(lambda1.at(j))) code.set(j - 1);
    return code;
}

/// Recovers the weight function of a valuation: w(x) is the value jump
/// between the lower cone of x and the cone with x removed (also a
/// downset). Inverse of valuation_from_weights.
inline WeightFunction weights_from_valuation(const DownsetLattice& l, const Valuation& v) {
    if (!check_valuation_axioms(l, v).ok())
        raise(errc::not_a_valuation, "value table violates the valuation axioms");
    const Poset& p = l.poset();
    WeightFunction w(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
        auto cone = l.index_of(p.down(x));
        auto below = l.index_of(p.down_strict(x));
        if (!cone || !below) raise(errc::unknown_downset, "cone of " + p.name(x));
        w[x] = v[*cone] - v[*below];
    }
    return w;
}

} // namespace latval

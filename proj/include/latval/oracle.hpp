#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "latval/birkhoff.hpp"
#include "latval/bitset.hpp"
#include "latval/error.hpp"
#include "latval/poset.hpp"
#include "latval/valuation.hpp"

namespace latval {
namespace oracle {

/// Ground-truth implementations, deliberately naive and kept free of the
/// fast paths they are used to check.

inline constexpr std::size_t kNaiveElementCap = 24;
inline constexpr std::uint64_t kDefaultCandidateBudget = 1'000'000;

/// Every downset of p, found by filtering all 2^|P| subsets for downward
/// closure. Canonical order (cardinality, then characteristic number).
inline std::vector<Bitset> downsets_naive(const Poset& p) {
    const std::size_t k = p.size();
    if (k > kNaiveElementCap)
        raise(errc::size_limit_exceeded, "naive subset filter capped at 24 elements");
    std::vector<Bitset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Bitset s(k);
        for (std::size_t x = 0; x < k; ++x)
            if ((mask >> x) & 1) s.set(x);
        bool closed = true;
        for (std::size_t x = s.find_first(); x != Bitset::npos && closed; x = s.find_next(x))
            closed = p.down(x).is_subset_of(s);
        if (closed) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
        std::size_t ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return Bitset::compare(a, b) < 0;
    });
    return out;
}

/// Every antichain of p, by the same subset filter.
inline std::vector<Bitset> antichains_naive(const Poset& p) {
    const std::size_t k = p.size();
    if (k > kNaiveElementCap)
        raise(errc::size_limit_exceeded, "naive subset filter capped at 24 elements");
    std::vector<Bitset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Bitset s(k);
        for (std::size_t x = 0; x < k; ++x)
            if ((mask >> x) & 1) s.set(x);
        bool anti = true;
        for (std::size_t x = s.find_first(); x != Bitset::npos && anti; x = s.find_next(x))
            anti = !p.up_strict(x).intersects(s) && !p.down_strict(x).intersects(s);
        if (anti) out.push_back(std::move(s));
    }
    return out;
}

/// Nonempty sequence of elements strictly increasing in the ambient order.
struct Chain {
    std::vector<std::size_t> members;

    bool operator==(const Chain& o) const { return members == o.members; }
};

/// All chains of q with maximum y, by explicit backtracking over strict
/// predecessors. The singleton (y) is always included.
inline std::vector<Chain> chains_ending_at(const Poset& q, std::size_t y) {
    std::vector<Chain> out;
    std::vector<std::size_t> stack{y};
    std::function<void(std::size_t)> grow = [&](std::size_t top) {
        Chain c;
        c.members.assign(stack.rbegin(), stack.rend());
        out.push_back(std::move(c));
        Bitset below = q.down_strict(top);
        for (std::size_t x = below.find_first(); x != Bitset::npos; x = below.find_next(x)) {
            stack.push_back(x);
            grow(x);
            stack.pop_back();
        }
    };
    grow(y);
    return out;
}

/// Search outcome: the surviving weight functions in lexicographic order,
/// plus how many candidates were examined.
struct WeightSearchResult {
    std::vector<WeightFunction> found;
    std::uint64_t candidates = 0;
};

namespace detail {

/// Enumerates the compositions of total into parts positive summands, in
/// lexicographic order. Only weight functions with every weight >= 1 and
/// total sum n-1 can induce bijective valuations, so the search space is
/// exactly these compositions.
inline void for_each_composition(std::uint64_t total, std::size_t parts,
                                 const std::function<void(const WeightFunction&)>& fn) {
    WeightFunction w(parts);
    std::function<void(std::size_t, std::uint64_t)> go = [&](std::size_t i, std::uint64_t left) {
        if (i + 1 == parts) {
            w[i] = left;
            fn(w);
            return;
        }
        std::uint64_t slack = left - (parts - i - 1); // keep 1 for each later part
        for (std::uint64_t v = 1; v <= slack; ++v) {
            w[i] = v;
            go(i + 1, left - v);
        }
    };
    if (parts == 0) return;
    if (total < parts) return;
    go(0, total);
}

inline std::uint64_t composition_count(std::uint64_t total, std::size_t parts) {
    // C(total-1, parts-1), saturating at uint64 max.
    if (parts == 0 || total < parts) return 0;
    std::uint64_t n = total - 1, r = parts - 1, out = 1;
    r = std::min(r, n - r);
    for (std::uint64_t i = 1; i <= r; ++i) {
        if (out > (~std::uint64_t{0}) / (n - r + i)) return ~std::uint64_t{0};
        out = out * (n - r + i) / i;
    }
    return out;
}

} // namespace detail

/// All weight functions whose induced valuation hits {0..n-1} bijectively.
/// Candidates are the compositions of n-1 into |P| positive parts.
inline WeightSearchResult search_bijective_valuations(
    const Poset& p, std::uint64_t candidate_budget = kDefaultCandidateBudget,
    std::size_t lattice_limit = kDefaultLatticeLimit) {
    DownsetLattice l = downset_lattice(p, lattice_limit);
    const std::uint64_t space = detail::composition_count(l.size() - 1, p.size());
    if (space > candidate_budget)
        raise(errc::size_limit_exceeded,
              std::to_string(space) + " candidate weight functions exceed the budget");
    WeightSearchResult result;
    detail::for_each_composition(l.size() - 1, p.size(), [&](const WeightFunction& w) {
        ++result.candidates;
        if (is_bijective(l, valuation_from_weights(l, w))) result.found.push_back(w);
    });
    return result;
}

/// As search_bijective_valuations, further filtered by the completeness
/// checker.
inline WeightSearchResult search_complete_valuations(
    const Poset& p, std::uint64_t candidate_budget = kDefaultCandidateBudget,
    std::size_t lattice_limit = kDefaultLatticeLimit) {
    DownsetLattice l = downset_lattice(p, lattice_limit);
    const std::uint64_t space = detail::composition_count(l.size() - 1, p.size());
    if (space > candidate_budget)
        raise(errc::size_limit_exceeded,
              std::to_string(space) + " candidate weight functions exceed the budget");
    WeightSearchResult result;
    detail::for_each_composition(l.size() - 1, p.size(), [&](const WeightFunction& w) {
        ++result.candidates;
        Valuation v = valuation_from_weights(l, w);
        if (is_bijective(l, v) && is_complete(l, v).ok) result.found.push_back(w);
    });
    return result;
}

} // namespace oracle
} // namespace latval

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latval/birkhoff.hpp"
#include "latval/bitset.hpp"
#include "latval/error.hpp"
#include "latval/poset.hpp"
#include "latval/valuation.hpp"

namespace latval {

inline constexpr std::uint64_t kDefaultExtensionBudget = 1'000'000;

namespace detail {

/// Given lambda1, the only possible partner orders comparable pairs by the
/// poset and incomparable pairs opposite to lambda1. Returns that order if
/// the resulting tournament is transitive, i.e. a linear order.
inline std::optional<std::vector<std::size_t>> conjugate_extension(
    const Poset& p, const std::vector<std::size_t>& lambda1) {
    const std::size_t k = p.size();
    std::vector<std::size_t> pos(k);
    for (std::size_t r = 0; r < k; ++r) pos[lambda1[r]] = r;
    std::vector<Bitset> succ(k, Bitset(k));
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            if (x == y) continue;
            if (p.lt(x, y) || (p.incomparable(x, y) && pos[y] < pos[x])) succ[x].set(y);
        }
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = succ[x].find_first(); y != Bitset::npos; y = succ[x].find_next(y))
            if (!succ[y].is_subset_of(succ[x])) return std::nullopt;
    // Transitive tournament: ranking by successor count is the order.
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return succ[a].count() > succ[b].count(); });
    return order;
}

/// Chain counts of an arbitrary finite poset: out[y] = number of chains
/// with maximum y, via w(y) = 1 + sum of w over strict predecessors,
/// evaluated in any topological order.
inline std::vector<std::uint64_t> chain_counts(const Poset& q) {
    std::vector<std::size_t> topo;
    enumerate_linear_extensions(q, [&](const std::vector<std::size_t>& order) {
        topo = order;
        return false;
    });
    std::vector<std::uint64_t> w(q.size(), 0);
    for (auto y : topo) {
        std::uint64_t total = 1;
        Bitset preds = q.down_strict(y);
        for (std::size_t x = preds.find_first(); x != Bitset::npos; x = preds.find_next(x))
            total = checked_add(total, w[x]);
        w[y] = total;
    }
    return w;
}

} // namespace detail

/// Up to max_results realizers of p, ordered by lexicographic lambda1 over
/// the canonical element indices. Each linear extension is tested against
/// its unique candidate partner, so the search also decides whether the
/// poset has order dimension at most two (empty result = dimension >= 3).
inline std::vector<Realizer> find_realizers(const Poset& p, std::size_t max_results,
                                            std::uint64_t budget = kDefaultExtensionBudget) {
    std::vector<Realizer> found;
    if (max_results == 0) return found;
    enumerate_linear_extensions(
        p,
        [&](const std::vector<std::size_t>& lambda1) {
            if (auto lambda2 = detail::conjugate_extension(p, lambda1)) {
                found.push_back(Realizer::unchecked(LinearExtension::unchecked(lambda1),
                                                    LinearExtension::unchecked(*lambda2)));
                if (found.size() == max_results) return false;
            }
            return true;
        },
        budget);
    return found;
}

/// First realizer in the find_realizers order, or nullopt when the poset
/// has dimension >= 3.
inline std::optional<Realizer> find_realizer(const Poset& p,
                                             std::uint64_t budget = kDefaultExtensionBudget) {
    auto found = find_realizers(p, 1, budget);
    if (found.empty()) return std::nullopt;
    return found.front();
}

/// w(x) = number of chains of the complementary poset Q with maximum x.
inline WeightFunction chain_count_weights(const Poset& p, const Realizer& r) {
    return detail::chain_counts(complementary_poset(p, r, ComplementVariant::Q));
}

/// How much verification complete_valuation performs on its result.
enum class VerifyMode {
    automatic, ///< verify completeness when the lattice is small (n <= 4096)
    always,
    never,
};

struct ValuedLattice {
    DownsetLattice lattice;
    Valuation valuation;
    WeightFunction weights;
};

inline constexpr std::size_t kAutoVerifyBound = 4096;

/// Builds the downset lattice and the valuation induced by the chain-count
/// weights of the realizer. Bijectivity is always asserted; completeness is
/// verified per the mode.
inline ValuedLattice complete_valuation(const Poset& p, const Realizer& r,
                                        VerifyMode mode = VerifyMode::automatic,
                                        std::size_t lattice_limit = kDefaultLatticeLimit) {
    WeightFunction w = chain_count_weights(p, r);
    DownsetLattice l = downset_lattice(p, lattice_limit);
    Valuation v = valuation_from_weights(l, w);
    if (!is_bijective(l, v))
        raise(errc::not_bijective, "chain-count valuation failed the bijectivity assertion");
    bool verify = mode == VerifyMode::always ||
                  (mode == VerifyMode::automatic && l.size() <= kAutoVerifyBound);
    if (verify && !is_complete(l, v).ok)
        raise(errc::not_complete, "chain-count valuation failed the completeness assertion");
    return ValuedLattice{std::move(l), std::move(v), std::move(w)};
}

/// One step of the successor construction: from the downset valued i to the
/// unique downset valued i+1, without searching the lattice.
struct SuccessorStep {
    std::size_t next;        ///< ordinal of the value-(i+1) downset
    std::size_t added;       ///< the element y brought in
    Bitset removed;          ///< strict Q-predecessors of y taken out
    bool complement_chain;   ///< whether the whole complement was a Q-chain
};

namespace detail {

/// Recovers lambda1/lambda2 positions from a bijective chain-count
/// valuation: lambda1 ranks elements by the value of their lower cone,
/// lambda2 by decreasing weight of their upper cone.
struct ConeOrders {
    std::vector<std::size_t> pos1;
    std::vector<std::size_t> pos2;

    bool q_before(std::size_t x, std::size_t y) const {
        return pos1[x] < pos1[y] && pos2[y] < pos2[x];
    }
};

inline ConeOrders cone_orders(const DownsetLattice& l, const Valuation& v) {
    const Poset& p = l.poset();
    const std::size_t k = p.size();
    std::vector<std::uint64_t> down_value(k), up_value(k);
    for (std::size_t x = 0; x < k; ++x) {
        auto cone = l.index_of(p.down(x));
        auto co_cone = l.index_of(p.up(x).complement());
        if (!cone || !co_cone) raise(errc::unknown_downset, "cone of " + p.name(x));
        down_value[x] = v[*cone];
        up_value[x] = v[l.top()] - v[*co_cone];
    }
    auto ranks = [&](const std::vector<std::uint64_t>& key, bool decreasing) {
        std::vector<std::size_t> order(k);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return decreasing ? key[a] > key[b] : key[a] < key[b];
        });
        for (std::size_t r = 1; r < k; ++r)
            if (key[order[r]] == key[order[r - 1]])
                raise(errc::duplicate_cone_value,
                      p.name(order[r - 1]) + " and " + p.name(order[r]));
        std::vector<std::size_t> pos(k);
        for (std::size_t r = 0; r < k; ++r) pos[order[r]] = r;
        return pos;
    };
    return ConeOrders{ranks(down_value, false), ranks(up_value, true)};
}

} // namespace detail

/// Computes the successor of the downset valued i under a chain-count
/// valuation: the unique complement element that is minimal in the
/// complementary order and keeps the result downward closed is added, and
/// its strict Q-predecessors (all inside the current downset) drop out.
/// Uniqueness and the value increment are asserted, not assumed; the step
/// also records whether the full complement formed a Q-chain.
inline SuccessorStep successor_step(const DownsetLattice& l, const Valuation& v,
                                    std::size_t current) {
    if (!is_bijective(l, v)) raise(errc::not_bijective, "successor needs a bijective valuation");
    if (current >= l.size()) raise(errc::unknown_downset, std::to_string(current));
    if (v[current] + 1 == l.size()) raise(errc::at_top, "the top downset has no successor");

    const Poset& p = l.poset();
    auto orders = detail::cone_orders(l, v);
    Bitset complement = l.delta(current);

    auto q_pred_in = [&](std::size_t y, const Bitset& scope) {
        Bitset preds(p.size());
        for (std::size_t x = scope.find_first(); x != Bitset::npos; x = scope.find_next(x))
            if (x != y && orders.q_before(x, y)) preds.set(x);
        return preds;
    };

    bool complement_chain = true;
    for (std::size_t x = complement.find_first(); x != Bitset::npos; x = complement.find_next(x))
        for (std::size_t y = complement.find_next(x); y != Bitset::npos; y = complement.find_next(y))
            if (!orders.q_before(x, y) && !orders.q_before(y, x)) complement_chain = false;

    std::optional<SuccessorStep> step;
    for (std::size_t y = complement.find_first(); y != Bitset::npos; y = complement.find_next(y)) {
        if (q_pred_in(y, complement).any()) continue; // not Q-minimal in the complement
        Bitset removed = q_pred_in(y, l.downset(current));
        Bitset candidate = l.downset(current);
        candidate.set(y);
        candidate -= removed;
        auto next = l.index_of(candidate);
        if (!next || v[*next] != v[current] + 1) continue;
        if (step)
            raise(errc::no_unique_successor,
                  "both " + p.name(step->added) + " and " + p.name(y) + " advance the value");
        step = SuccessorStep{*next, y, std::move(removed), complement_chain};
    }
    if (!step)
        raise(errc::no_unique_successor, "no complement element advances the value by one");
    return *step;
}

/// Ordinal of the downset valued one higher than the current one.
inline std::size_t successor(const DownsetLattice& l, const Valuation& v, std::size_t current) {
    return successor_step(l, v, current).next;
}

/// Recovers the realizer of a complete valuation: lambda1 sorts elements by
/// increasing value of their lower cones, lambda2 by decreasing dual value
/// of their upper cones. The result is asserted to realize the poset.
inline Realizer extract_realizer(const DownsetLattice& l, const Valuation& v) {
    if (!check_valuation_axioms(l, v).ok())
        raise(errc::not_a_valuation, "value table violates the valuation axioms");
    if (!is_bijective(l, v)) raise(errc::not_bijective, "valuation is not bijective");
    if (!is_complete(l, v).ok) raise(errc::not_complete, "valuation is not complete");

    auto orders = detail::cone_orders(l, v);
    const std::size_t k = l.poset().size();
    std::vector<std::size_t> lambda1(k), lambda2(k);
    for (std::size_t x = 0; x < k; ++x) {
        lambda1[orders.pos1[x]] = x;
        lambda2[orders.pos2[x]] = x;
    }
    if (!is_realizer(l.poset(), lambda1, lambda2))
        raise(errc::invalid_realizer, "extracted orders do not realize the poset");
    return Realizer::unchecked(LinearExtension::unchecked(std::move(lambda1)),
                               LinearExtension::unchecked(std::move(lambda2)));
}

/// Checks both trips of the correspondence: realizer -> complete valuation
/// -> extracted realizer must reproduce the input pair, and the chain-count
/// valuation of the extracted realizer must reproduce the value table.
inline bool round_trip_check(const Poset& p, const Realizer& r,
                             std::size_t lattice_limit = kDefaultLatticeLimit) {
    ValuedLattice built = complete_valuation(p, r, VerifyMode::automatic, lattice_limit);
    Realizer extracted = extract_realizer(built.lattice, built.valuation);
    if (!(extracted == r)) return false;
    Valuation again = valuation_from_weights(built.lattice, chain_count_weights(p, extracted));
    return again == built.valuation;
}

} // namespace latval

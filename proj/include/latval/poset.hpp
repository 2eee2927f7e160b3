#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latval/bitset.hpp"
#include "latval/error.hpp"

namespace latval {

/// Finite partially ordered set. Elements are identified by their position
/// in the construction sequence (the canonical order); names are kept for
/// I/O. The relation is stored row-wise as bit vectors: up(x) = {y : x <= y}
/// and the transposed down(x) = {y : y <= x}, both including x itself.
/// Immutable after construction and safe to share across threads.
class Poset {
public:
    /// Builds from an already reflexive-transitive closed relation.
    /// Validates all three order axioms.
    Poset(std::vector<std::string> names, std::vector<Bitset> up_rows)
        : names_(std::move(names)), up_(std::move(up_rows)) {
        const std::size_t k = names_.size();
        if (up_.size() != k) raise(errc::domain_mismatch, "relation rows do not match element count");
        for (std::size_t x = 0; x < k; ++x) {
            if (up_[x].size() != k) raise(errc::domain_mismatch, "relation row of wrong width");
            if (!up_[x].test(x)) raise(errc::domain_mismatch, "relation is not reflexive at " + names_[x]);
        }
        for (std::size_t x = 0; x < k; ++x) {
            for (std::size_t y = up_[x].find_first(); y != Bitset::npos; y = up_[x].find_next(y)) {
                if (y != x && up_[y].test(x))
                    raise(errc::cycle_detected, names_[x] + " <= " + names_[y] + " and " + names_[y] +
                                                    " <= " + names_[x]);
                if (!up_[y].is_subset_of(up_[x]))
                    raise(errc::domain_mismatch, "relation is not transitive at " + names_[x]);
            }
        }
        down_.assign(k, Bitset(k));
        for (std::size_t x = 0; x < k; ++x)
            for (std::size_t y = up_[x].find_first(); y != Bitset::npos; y = up_[x].find_next(y))
                down_[y].set(x);
    }

    std::size_t size() const { return names_.size(); }

    const std::string& name(std::size_t x) const { return names_[x]; }

    const std::vector<std::string>& names() const { return names_; }

    /// Canonical index of a named element, or npos.
    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return Bitset::npos;
    }

    bool le(std::size_t x, std::size_t y) const { return up_[x].test(y); }

    bool lt(std::size_t x, std::size_t y) const { return x != y && le(x, y); }

    bool incomparable(std::size_t x, std::size_t y) const {
        return x != y && !le(x, y) && !le(y, x);
    }

    /// Upper cone {y : x <= y}, including x.
    const Bitset& up(std::size_t x) const { return up_[x]; }

    /// Lower cone {y : y <= x}, including x.
    const Bitset& down(std::size_t x) const { return down_[x]; }

    Bitset up_strict(std::size_t x) const { return Bitset(up_[x]).reset(x); }

    Bitset down_strict(std::size_t x) const { return Bitset(down_[x]).reset(x); }

    Bitset ground_set() const { return Bitset::full(size()); }

    /// True iff the subset is downward closed.
    bool is_downset(const Bitset& s) const {
        for (std::size_t x = s.find_first(); x != Bitset::npos; x = s.find_next(x))
            if (!down_[x].is_subset_of(s)) return false;
        return true;
    }

    bool is_upset(const Bitset& s) const {
        for (std::size_t x = s.find_first(); x != Bitset::npos; x = s.find_next(x))
            if (!up_[x].is_subset_of(s)) return false;
        return true;
    }

    /// Elements of the subset with no strictly smaller element inside it.
    std::vector<std::size_t> minimal_elements(const Bitset& s) const {
        std::vector<std::size_t> out;
        for (std::size_t x = s.find_first(); x != Bitset::npos; x = s.find_next(x))
            if (!down_strict(x).intersects(s)) out.push_back(x);
        return out;
    }

    std::vector<std::size_t> maximal_elements(const Bitset& s) const {
        std::vector<std::size_t> out;
        for (std::size_t x = s.find_first(); x != Bitset::npos; x = s.find_next(x))
            if (!up_strict(x).intersects(s)) out.push_back(x);
        return out;
    }

    /// Cover pairs (x, y): x < y with nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t x = 0; x < size(); ++x) {
            Bitset above = up_strict(x);
            for (std::size_t y = above.find_first(); y != Bitset::npos; y = above.find_next(y)) {
                if (!up_strict(x).intersects(down_strict(y))) out.emplace_back(x, y);
            }
        }
        return out;
    }

    bool same_relation(const Poset& o) const { return names_ == o.names_ && up_ == o.up_; }

private:
    std::vector<std::string> names_;
    std::vector<Bitset> up_;
    std::vector<Bitset> down_;
};

/// Builds the poset generated by arbitrary "x <= y" assertions: the input
/// pairs need not be covers, and the reflexive-transitive closure is always
/// computed. Rejects closures that violate antisymmetry.
inline Poset build_poset(std::vector<std::string> names,
                         const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    const std::size_t k = names.size();
    {
        std::unordered_map<std::string, std::size_t> seen;
        for (std::size_t i = 0; i < k; ++i)
            if (!seen.emplace(names[i], i).second)
                raise(errc::duplicate_element, names[i]);
    }
    std::vector<Bitset> up(k, Bitset(k));
    for (std::size_t x = 0; x < k; ++x) up[x].set(x);
    for (auto [x, y] : pairs) {
        if (x >= k || y >= k) raise(errc::unknown_element, "pair index out of range");
        up[x].set(y);
    }
    // Warshall closure, one bit row at a time.
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i)
            if (up[i].test(j)) up[i] |= up[j];
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = x + 1; y < k; ++y)
            if (up[x].test(y) && up[y].test(x))
                raise(errc::cycle_detected, names[x] + " <= " + names[y] + " and " + names[y] +
                                                " <= " + names[x]);
    return Poset(std::move(names), std::move(up));
}

/// Same, with pairs given by element name.
inline Poset build_poset(const std::vector<std::string>& names,
                         const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::unordered_map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!pos.emplace(names[i], i).second) raise(errc::duplicate_element, names[i]);
    }
    std::vector<std::pair<std::size_t, std::size_t>> ipairs;
    ipairs.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        auto ia = pos.find(a);
        auto ib = pos.find(b);
        if (ia == pos.end()) raise(errc::unknown_element, a);
        if (ib == pos.end()) raise(errc::unknown_element, b);
        ipairs.emplace_back(ia->second, ib->second);
    }
    return build_poset(names, ipairs);
}

/// Reverses the order relation; the element sequence is unchanged.
inline Poset dual_poset(const Poset& p) {
    const std::size_t k = p.size();
    std::vector<Bitset> up(k);
    for (std::size_t x = 0; x < k; ++x) up[x] = p.down(x);
    return Poset(p.names(), std::move(up));
}

/// Unordered pairs {x, y} with neither x <= y nor y <= x, as (min, max).
inline std::vector<std::pair<std::size_t, std::size_t>> incomparable_pairs(const Poset& p) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = x + 1; y < p.size(); ++y)
            if (p.incomparable(x, y)) out.emplace_back(x, y);
    return out;
}

namespace detail {

/// Checks that seq is a permutation of 0..k-1.
inline void require_permutation(std::size_t k, std::span<const std::size_t> seq) {
    if (seq.size() != k) raise(errc::not_a_permutation, "sequence has wrong length");
    std::vector<bool> seen(k, false);
    for (auto x : seq) {
        if (x >= k || seen[x]) raise(errc::not_a_permutation, "sequence is not a permutation");
        seen[x] = true;
    }
}

} // namespace detail

/// True iff the permutation lists the elements in an order compatible with
/// the poset: x <= y implies x appears no later than y.
inline bool is_linear_extension(const Poset& p, std::span<const std::size_t> seq) {
    detail::require_permutation(p.size(), seq);
    Bitset placed(p.size());
    for (auto x : seq) {
        if (!p.down_strict(x).is_subset_of(placed)) return false;
        placed.set(x);
    }
    return true;
}

/// Total order refining the poset order: the permutation plus its inverse
/// (element -> rank, 0-based).
class LinearExtension {
public:
    static LinearExtension checked(const Poset& p, std::span<const std::size_t> seq) {
        if (!is_linear_extension(p, seq))
            raise(errc::not_a_linear_extension, "sequence violates the poset order");
        return LinearExtension(std::vector<std::size_t>(seq.begin(), seq.end()));
    }

    /// For sequences already known to be linear extensions.
    static LinearExtension unchecked(std::vector<std::size_t> seq) {
        return LinearExtension(std::move(seq));
    }

    const std::vector<std::size_t>& order() const { return order_; }

    /// Element at 1-based position j.
    std::size_t at(std::size_t j) const { return order_[j - 1]; }

    /// 0-based rank of element x.
    std::size_t position(std::size_t x) const { return pos_[x]; }

    bool before(std::size_t x, std::size_t y) const { return pos_[x] < pos_[y]; }

    std::size_t size() const { return order_.size(); }

    bool operator==(const LinearExtension& o) const { return order_ == o.order_; }
    bool operator!=(const LinearExtension& o) const { return !(*this == o); }

private:
    explicit LinearExtension(std::vector<std::size_t> seq) : order_(std::move(seq)) {
        pos_.resize(order_.size());
        for (std::size_t r = 0; r < order_.size(); ++r) pos_[order_[r]] = r;
    }

    std::vector<std::size_t> order_;
    std::vector<std::size_t> pos_;
};

/// True iff both sequences are linear extensions of p and every incomparable
/// pair is ordered oppositely by the two.
inline bool is_realizer(const Poset& p, std::span<const std::size_t> seq1,
                        std::span<const std::size_t> seq2) {
    if (!is_linear_extension(p, seq1) || !is_linear_extension(p, seq2)) return false;
    std::vector<std::size_t> pos1(p.size()), pos2(p.size());
    for (std::size_t r = 0; r < seq1.size(); ++r) pos1[seq1[r]] = r;
    for (std::size_t r = 0; r < seq2.size(); ++r) pos2[seq2[r]] = r;
    for (auto [x, y] : incomparable_pairs(p))
        if ((pos1[x] < pos1[y]) == (pos2[x] < pos2[y])) return false;
    return true;
}

/// Ordered pair of linear extensions whose intersection is the poset order.
class Realizer {
public:
    static Realizer checked(const Poset& p, std::span<const std::size_t> seq1,
                            std::span<const std::size_t> seq2) {
        if (!is_realizer(p, seq1, seq2))
            raise(errc::invalid_realizer, "the two orders do not realize the poset");
        return Realizer(LinearExtension::unchecked({seq1.begin(), seq1.end()}),
                        LinearExtension::unchecked({seq2.begin(), seq2.end()}));
    }

    static Realizer unchecked(LinearExtension l1, LinearExtension l2) {
        return Realizer(std::move(l1), std::move(l2));
    }

    const LinearExtension& lambda1() const { return lambda1_; }
    const LinearExtension& lambda2() const { return lambda2_; }

    bool operator==(const Realizer& o) const {
        return lambda1_ == o.lambda1_ && lambda2_ == o.lambda2_;
    }

private:
    Realizer(LinearExtension l1, LinearExtension l2)
        : lambda1_(std::move(l1)), lambda2_(std::move(l2)) {}

    LinearExtension lambda1_;
    LinearExtension lambda2_;
};

enum class ComplementVariant { Q, Qprime };

/// The order complementary to (p, r): for variant Q, x <' y iff x precedes y
/// in lambda1 and y precedes x in lambda2 (realizer {lambda1, reversed
/// lambda2}); Qprime is its dual. Strict pairs of either variant are exactly
/// the incomparable pairs of p.
inline Poset complementary_poset(const Poset& p, const Realizer& r,
                                 ComplementVariant variant = ComplementVariant::Q) {
    if (!is_realizer(p, r.lambda1().order(), r.lambda2().order()))
        raise(errc::invalid_realizer, "realizer does not match the poset");
    const std::size_t k = p.size();
    std::vector<Bitset> up(k, Bitset(k));
    for (std::size_t x = 0; x < k; ++x) {
        up[x].set(x);
        for (std::size_t y = 0; y < k; ++y) {
            if (x == y) continue;
            bool q = r.lambda1().before(x, y) && r.lambda2().before(y, x);
            bool rel = variant == ComplementVariant::Q
                           ? q
                           : (r.lambda1().before(y, x) && r.lambda2().before(x, y));
            if (rel) up[x].set(y);
        }
    }
    return Poset(p.names(), std::move(up));
}

/// Calls fn for each linear extension of p, in lexicographic order of the
/// canonical element indices. fn returns false to stop early. Throws
/// SizeLimitExceeded once more than budget extensions have been produced.
/// Returns false if fn stopped the walk.
inline bool enumerate_linear_extensions(const Poset& p,
                                        const std::function<bool(const std::vector<std::size_t>&)>& fn,
                                        std::uint64_t budget = 1'000'000) {
    const std::size_t k = p.size();
    std::vector<std::size_t> order;
    order.reserve(k);
    Bitset placed(k);
    std::uint64_t produced = 0;
    // DFS over prefixes; every prefix completes to some extension, so the
    // walk is output-linear.
    std::function<bool()> go = [&]() -> bool {
        if (order.size() == k) {
            if (++produced > budget)
                raise(errc::size_limit_exceeded, "linear extension budget exhausted");
            return fn(order);
        }
        for (std::size_t x = 0; x < k; ++x) {
            if (placed.test(x)) continue;
            if (!p.down_strict(x).is_subset_of(placed)) continue;
            placed.set(x);
            order.push_back(x);
            bool keep = go();
            order.pop_back();
            placed.reset(x);
            if (!keep) return false;
        }
        return true;
    };
    return go();
}

} // namespace latval

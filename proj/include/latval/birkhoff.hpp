#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latval/bitset.hpp"
#include "latval/error.hpp"
#include "latval/poset.hpp"

namespace latval {

inline constexpr std::size_t kDefaultLatticeLimit = 1'000'000;

/// Antichain of the underlying poset: pairwise incomparable elements. Each
/// downset is generated by exactly one of these (its maximal elements).
struct Antichain {
    Bitset members;

    bool operator==(const Antichain& o) const { return members == o.members; }
};

/// The lattice of all downsets of a poset, with union as join and
/// intersection as meet. Downsets are listed in a canonical order
/// (cardinality, then characteristic number) and addressed by ordinal;
/// ordinal 0 is the empty set, ordinal size()-1 the full ground set.
/// Immutable after construction.
class DownsetLattice {
public:
    const Poset& poset() const { return poset_; }

    std::size_t size() const { return downsets_.size(); }

    const Bitset& downset(std::size_t s) const {
        check_ordinal(s);
        return downsets_[s];
    }

    const std::vector<Bitset>& downsets() const { return downsets_; }

    std::optional<std::size_t> index_of(const Bitset& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t bottom() const { return 0; }
    std::size_t top() const { return downsets_.size() - 1; }

    /// Join = set union; the result is always present.
    std::size_t join(std::size_t s, std::size_t t) const {
        check_ordinal(s);
        check_ordinal(t);
        return index_.at(downsets_[s] | downsets_[t]);
    }

    /// Meet = set intersection; the result is always present.
    std::size_t meet(std::size_t s, std::size_t t) const {
        check_ordinal(s);
        check_ordinal(t);
        return index_.at(downsets_[s] & downsets_[t]);
    }

    /// The antichain of maximal elements of the downset; generates it back
    /// through downset_of_antichain.
    Antichain antichain_of(std::size_t s) const {
        check_ordinal(s);
        Bitset members(poset_.size());
        for (auto x : poset_.maximal_elements(downsets_[s])) members.set(x);
        return Antichain{std::move(members)};
    }

    /// Union of the lower cones of the antichain's members.
    std::size_t downset_of_antichain(const Antichain& a) const {
        for (std::size_t x = a.members.find_first(); x != Bitset::npos; x = a.members.find_next(x))
            if (poset_.up_strict(x).intersects(a.members))
                raise(errc::not_an_antichain, "members are not pairwise incomparable");
        Bitset s(poset_.size());
        for (std::size_t x = a.members.find_first(); x != Bitset::npos; x = a.members.find_next(x))
            s |= poset_.down(x);
        return index_.at(s);
    }

    /// Complementary upset of the downset, as a subset of the ground set.
    Bitset delta(std::size_t s) const {
        check_ordinal(s);
        return downsets_[s].complement();
    }

    friend DownsetLattice downset_lattice(const Poset& p, std::size_t limit);

private:
    explicit DownsetLattice(Poset p) : poset_(std::move(p)) {}

    void check_ordinal(std::size_t s) const {
        if (s >= downsets_.size()) raise(errc::unknown_downset, "ordinal " + std::to_string(s));
    }

    Poset poset_;
    std::vector<Bitset> downsets_;
    std::unordered_map<Bitset, std::size_t, BitsetHash> index_;
};

/// Enumerates every downset of p exactly once by extending along a linear
/// extension: an element may be added only if all its predecessors are in,
/// so no deduplication pass is needed. Throws SizeLimitExceeded when the
/// lattice would exceed limit elements.
inline DownsetLattice downset_lattice(const Poset& p, std::size_t limit = kDefaultLatticeLimit) {
    DownsetLattice l(p);
    std::vector<std::size_t> ext;
    ext.reserve(p.size());
    enumerate_linear_extensions(p, [&](const std::vector<std::size_t>& order) {
        ext = order;
        return false; // one extension is enough
    });

    std::vector<Bitset>& out = l.downsets_;
    Bitset current(p.size());
    auto emit = [&](const Bitset& s) {
        if (out.size() >= limit)
            raise(errc::size_limit_exceeded,
                  "lattice larger than " + std::to_string(limit) + " downsets");
        out.push_back(s);
    };
    // Along the extension every predecessor of ext[i] is decided before i,
    // so "all predecessors in" is checkable on the spot.
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == ext.size()) {
            emit(current);
            return;
        }
        go(i + 1); // exclude ext[i]
        std::size_t x = ext[i];
        if (p.down_strict(x).is_subset_of(current)) {
            current.set(x);
            go(i + 1);
            current.reset(x);
        }
    };
    go(0);

    std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
        std::size_t ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return Bitset::compare(a, b) < 0;
    });
    l.index_.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) l.index_.emplace(out[i], i);
    return l;
}

} // namespace latval

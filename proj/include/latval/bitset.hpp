#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace latval {

/// Set over a fixed universe {0, ..., size()-1}, stored as 64-bit words.
/// Element i lives in word i/64, bit i%64, so the word sequence read as a
/// little-endian integer is the characteristic number of the set. One word
/// covers universes up to 64; wider universes spill into further words.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;

    explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static Bitset full(std::size_t nbits) {
        Bitset s(nbits);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    Bitset& set(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        return *this;
    }

    Bitset& reset(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
        return *this;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    /// Index of the lowest set bit, or npos.
    std::size_t find_first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return npos;
    }

    /// Index of the lowest set bit above i, or npos.
    std::size_t find_next(std::size_t i) const {
        ++i;
        if (i >= nbits_) return npos;
        std::size_t k = i >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size()) return npos;
            w = words_[k];
        }
    }

    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    /// Set difference.
    Bitset& operator-=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    /// Complement within the universe.
    Bitset complement() const {
        Bitset r(nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
        r.trim();
        return r;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    /// Numeric comparison of the characteristic numbers: -1, 0, or +1.
    static int compare(const Bitset& a, const Bitset& b) {
        assert(a.nbits_ == b.nbits_);
        for (std::size_t k = a.words_.size(); k-- > 0;) {
            if (a.words_[k] != b.words_[k]) return a.words_[k] < b.words_[k] ? -1 : 1;
        }
        return 0;
    }

    bool operator<(const Bitset& o) const { return compare(*this, o) < 0; }

    /// Characteristic number as uint64_t; universe must fit in one word.
    std::uint64_t value_u64() const {
        assert(nbits_ <= 64);
        return words_.empty() ? 0 : words_[0];
    }

    std::size_t hash() const {
        std::size_t h = nbits_;
        for (auto w : words_) {
            h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

private:
    void trim() {
        if (nbits_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (nbits_ & 63));
        if (nbits_ == 0 && !words_.empty()) words_.clear();
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& s) const { return s.hash(); }
};

} // namespace latval

#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "latval/latval.hpp"

namespace fixtures {

/// The N-shaped poset: a < c, b < c, b < d; {a,b}, {a,d}, {c,d} incomparable.
/// Element indices: a=0, b=1, c=2, d=3.
inline latval::Poset n_poset() {
    return latval::build_poset({"a", "b", "c", "d"},
                               std::vector<std::pair<std::string, std::string>>{
                                   {"a", "c"}, {"b", "c"}, {"b", "d"}});
}

/// lambda1 = (b,d,a,c), lambda2 = (a,b,c,d).
inline latval::Realizer n_realizer(const latval::Poset& p) {
    std::vector<std::size_t> l1{1, 3, 0, 2}, l2{0, 1, 2, 3};
    return latval::Realizer::checked(p, l1, l2);
}

/// Three minimal a1,a2,a3 and three maximal b1,b2,b3 with ai < bj iff i != j;
/// the smallest poset of order dimension three.
inline latval::Poset s3() {
    return latval::build_poset(
        {"a1", "a2", "a3", "b1", "b2", "b3"},
        std::vector<std::pair<std::string, std::string>>{
            {"a1", "b2"}, {"a1", "b3"}, {"a2", "b1"}, {"a2", "b3"}, {"a3", "b1"}, {"a3", "b2"}});
}

inline std::vector<std::string> letter_names(std::size_t k) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back(std::string(1, char('a' + i)));
    return names;
}

inline latval::Poset chain(std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i + 1 < k; ++i) pairs.emplace_back(i, i + 1);
    return latval::build_poset(letter_names(k), pairs);
}

inline latval::Poset antichain(std::size_t k) {
    return latval::build_poset(letter_names(k), std::vector<std::pair<std::size_t, std::size_t>>{});
}

/// 3-chain a < b < c with an isolated d: the smallest poset carrying a
/// bijective valuation that is not complete (weights 1,3,1,2).
inline latval::Poset chain3_point() {
    return latval::build_poset({"a", "b", "c", "d"},
                               std::vector<std::pair<std::string, std::string>>{
                                   {"a", "b"}, {"b", "c"}});
}

/// Random poset on k elements: a random strict order on a shuffled index
/// sequence, closed transitively. Deterministic for a given rng state.
inline latval::Poset random_poset(std::mt19937_64& rng, std::size_t k) {
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double density = std::uniform_real_distribution<double>(0.15, 0.6)(rng);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (unif(rng) < density) pairs.emplace_back(perm[i], perm[j]);
    return latval::build_poset(letter_names(k), pairs);
}

} // namespace fixtures

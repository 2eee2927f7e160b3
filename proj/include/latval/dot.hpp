#pragma once

#include <string>

#include "latval/birkhoff.hpp"
#include "latval/io.hpp"
#include "latval/poset.hpp"
#include "latval/valuation.hpp"

namespace latval {

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace detail

/// Hasse diagram of a poset as a DOT digraph: cover relations only, drawn
/// bottom-up. Nodes carry their weight when one is supplied.
inline std::string dot_poset(const Poset& p, const WeightFunction* w = nullptr,
                             const std::string& graph_name = "poset") {
    std::string out = "digraph " + graph_name + " {\n  rankdir=BT;\n";
    for (std::size_t x = 0; x < p.size(); ++x) {
        out += "  " + detail::dot_quote(p.name(x));
        if (w) out += " [label=" + detail::dot_quote(p.name(x) + "\\nw=" + std::to_string((*w)[x])) + "]";
        out += ";\n";
    }
    for (auto [x, y] : p.covers())
        out += "  " + detail::dot_quote(p.name(x)) + " -> " + detail::dot_quote(p.name(y)) + ";\n";
    out += "}\n";
    return out;
}

/// Hasse diagram of the downset lattice. In a lattice of downsets a cover
/// adds exactly one element, so covers are the subset pairs differing in
/// one member. Nodes carry their valuation value when one is supplied.
inline std::string dot_lattice(const DownsetLattice& l, const Valuation* v = nullptr) {
    const Poset& p = l.poset();
    auto label = [&](std::size_t s) {
        const Bitset& d = l.downset(s);
        return d.none() ? std::string("{}") : "{" + subset_label(p, d) + "}";
    };
    std::string out = "digraph lattice {\n  rankdir=BT;\n";
    for (std::size_t s = 0; s < l.size(); ++s) {
        out += "  " + detail::dot_quote(label(s));
        if (v) out += " [label=" + detail::dot_quote(label(s) + "\\nv=" + std::to_string((*v)[s])) + "]";
        out += ";\n";
    }
    for (std::size_t s = 0; s < l.size(); ++s)
        for (std::size_t t = 0; t < l.size(); ++t) {
            if (l.downset(t).count() != l.downset(s).count() + 1) continue;
            if (!l.downset(s).is_subset_of(l.downset(t))) continue;
            out += "  " + detail::dot_quote(label(s)) + " -> " + detail::dot_quote(label(t)) + ";\n";
        }
    out += "}\n";
    return out;
}

} // namespace latval

#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "latval/birkhoff.hpp"
#include "latval/bitset.hpp"
#include "latval/error.hpp"
#include "latval/poset.hpp"
#include "latval/realizer.hpp"
#include "latval/valuation.hpp"

namespace latval {

using json = nlohmann::ordered_json;

/// File schemas:
///   poset     {"elements": ["a", ...], "le": [["a","b"], ...]}
///   realizer  {"lambda1": ["a", ...], "lambda2": ["a", ...]}
///   valuation {"weights": {"a": 1, ...}}

inline json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) raise(errc::parse_error, "invalid JSON");
    return j;
}

inline json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::parse_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

inline Poset poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
        raise(errc::parse_error, "poset file needs an \"elements\" array");
    std::vector<std::string> names;
    for (const auto& e : j["elements"]) {
        if (!e.is_string()) raise(errc::parse_error, "element identifiers must be strings");
        names.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    if (j.contains("le")) {
        if (!j["le"].is_array()) raise(errc::parse_error, "\"le\" must be an array of pairs");
        for (const auto& pr : j["le"]) {
            if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
                raise(errc::parse_error, "\"le\" entries must be [x, y] name pairs");
            pairs.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
        }
    }
    return build_poset(names, pairs);
}

namespace detail {

inline std::vector<std::size_t> sequence_from_json(const Poset& p, const json& j,
                                                   const std::string& key) {
    if (!j.contains(key) || !j[key].is_array())
        raise(errc::parse_error, "realizer file needs a \"" + key + "\" array");
    std::vector<std::size_t> seq;
    for (const auto& e : j[key]) {
        if (!e.is_string()) raise(errc::parse_error, "\"" + key + "\" entries must be strings");
        std::size_t x = p.index_of(e.get<std::string>());
        if (x == Bitset::npos) raise(errc::unknown_element, e.get<std::string>());
        seq.push_back(x);
    }
    return seq;
}

} // namespace detail

inline Realizer realizer_from_json(const Poset& p, const json& j) {
    auto seq1 = detail::sequence_from_json(p, j, "lambda1");
    auto seq2 = detail::sequence_from_json(p, j, "lambda2");
    return Realizer::checked(p, seq1, seq2);
}

inline WeightFunction weights_from_json(const Poset& p, const json& j) {
    if (!j.is_object() || !j.contains("weights") || !j["weights"].is_object())
        raise(errc::parse_error, "valuation file needs a \"weights\" object");
    const auto& obj = j["weights"];
    WeightFunction w(p.size());
    std::vector<bool> seen(p.size(), false);
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        std::size_t x = p.index_of(it.key());
        if (x == Bitset::npos) raise(errc::unknown_element, it.key());
        if (seen[x]) raise(errc::duplicate_element, it.key());
        if (!it.value().is_number_unsigned())
            raise(errc::parse_error, "weight of " + it.key() + " must be a natural number");
        w[x] = it.value().get<std::uint64_t>();
        seen[x] = true;
    }
    for (std::size_t x = 0; x < p.size(); ++x)
        if (!seen[x]) raise(errc::domain_mismatch, "no weight for " + p.name(x));
    return w;
}

inline json weights_to_json(const Poset& p, const WeightFunction& w) {
    json obj = json::object();
    for (std::size_t x = 0; x < p.size(); ++x) obj[p.name(x)] = w[x];
    return json{{"weights", obj}};
}

inline json realizer_to_json(const Poset& p, const Realizer& r) {
    json l1 = json::array(), l2 = json::array();
    for (auto x : r.lambda1().order()) l1.push_back(p.name(x));
    for (auto x : r.lambda2().order()) l2.push_back(p.name(x));
    return json{{"lambda1", l1}, {"lambda2", l2}};
}

/// Comma-joined member names in canonical element order; "-" for the empty
/// set (keeps TSV fields nonempty).
inline std::string subset_label(const Poset& p, const Bitset& s) {
    if (s.none()) return "-";
    std::string out;
    for (std::size_t x = s.find_first(); x != Bitset::npos; x = s.find_next(x)) {
        if (!out.empty()) out += ',';
        out += p.name(x);
    }
    return out;
}

inline std::string omega_label(const Bitset& code) {
    if (code.size() <= 64) return std::to_string(code.value_u64());
    std::string bits;
    for (std::size_t j = code.size(); j-- > 0;) bits += code.test(j) ? '1' : '0';
    return bits;
}

/// TSV listing of the lattice in canonical order: downset and generating
/// antichain per row.
inline std::string format_lattice_table(const DownsetLattice& l) {
    std::string out = "downset\tantichain\n";
    for (std::size_t s = 0; s < l.size(); ++s) {
        out += subset_label(l.poset(), l.downset(s));
        out += '\t';
        out += subset_label(l.poset(), l.antichain_of(s).members);
        out += '\n';
    }
    return out;
}

/// TSV valuation table, one row per lattice element in increasing value
/// order: downset, antichain, value, dual value of the complementary
/// upset, and the lambda1 bit encoding.
inline std::string format_valuation_table(const DownsetLattice& l, const Valuation& v,
                                          const WeightFunction& w, const LinearExtension& lambda1) {
    Valuation dual = dual_valuation(l, w);
    std::vector<std::size_t> rows(l.size());
    for (std::size_t s = 0; s < l.size(); ++s) rows[s] = s;
    std::sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
        if (v[a] != v[b]) return v[a] < v[b];
        return a < b;
    });
    std::string out = "downset\tantichain\tv\tv'\tomega\n";
    for (auto s : rows) {
        out += subset_label(l.poset(), l.downset(s));
        out += '\t';
        out += subset_label(l.poset(), l.antichain_of(s).members);
        out += '\t';
        out += std::to_string(v[s]);
        out += '\t';
        out += std::to_string(dual[s]);
        out += '\t';
        out += omega_label(omega_encode(l.downset(s), lambda1));
        out += '\n';
    }
    return out;
}

} // namespace latval

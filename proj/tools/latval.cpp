#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "latval/latval.hpp"

namespace {

using namespace latval;

struct Options {
    std::string input;
    std::string realizer_file;
    std::string valuation_file;
    std::string output;
    std::optional<std::uint64_t> limit;
    bool unchecked = false;
    bool stats = false;
    std::string mode = "complete";
    std::string target = "poset";
};

std::uint64_t effective_limit(const Options& opt, std::uint64_t fallback) {
    if (opt.limit) return *opt.limit;
    if (const char* env = std::getenv("LATVAL_LIMIT")) {
        char* end = nullptr;
        unsigned long long parsed = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            raise(errc::parse_error, "LATVAL_LIMIT must be a natural number");
        return parsed;
    }
    return fallback;
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) raise(errc::parse_error, "cannot open " + opt.output + " for writing");
    out << text;
}

Poset load_poset(const Options& opt) { return poset_from_json(load_json(opt.input)); }

Realizer load_realizer(const Options& opt, const Poset& p) {
    if (opt.realizer_file.empty()) raise(errc::parse_error, "this command needs -r REALIZER");
    return realizer_from_json(p, load_json(opt.realizer_file));
}

WeightFunction load_weights(const Options& opt, const Poset& p) {
    if (opt.valuation_file.empty()) raise(errc::parse_error, "this command needs -v VALUATION");
    return weights_from_json(p, load_json(opt.valuation_file));
}

std::string weights_line(const Poset& p, const WeightFunction& w) {
    std::string out;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (!out.empty()) out += ',';
        out += p.name(x) + "=" + std::to_string(w[x]);
    }
    return out;
}

int cmd_lattice(const Options& opt) {
    Poset p = load_poset(opt);
    DownsetLattice l = downset_lattice(p, effective_limit(opt, kDefaultLatticeLimit));
    if (opt.stats) {
        std::size_t antichains = p.size() <= oracle::kNaiveElementCap
                                     ? oracle::antichains_naive(p).size()
                                     : l.size();
        write_output(opt, "elements=" + std::to_string(p.size()) +
                              " downsets=" + std::to_string(l.size()) +
                              " antichains=" + std::to_string(antichains) + "\n");
    } else {
        write_output(opt, format_lattice_table(l));
    }
    return 0;
}

int cmd_dim2(const Options& opt) {
    Poset p = load_poset(opt);
    auto r = find_realizer(p, effective_limit(opt, kDefaultExtensionBudget));
    if (!r) {
        write_output(opt, "no realizer: dimension ≥ 3\n");
        return 1;
    }
    write_output(opt, realizer_to_json(p, *r).dump(2) + "\n");
    return 0;
}

int cmd_weights(const Options& opt) {
    Poset p = load_poset(opt);
    Realizer r = load_realizer(opt, p);
    write_output(opt, weights_to_json(p, chain_count_weights(p, r)).dump(2) + "\n");
    return 0;
}

int cmd_valuate(const Options& opt) {
    Poset p = load_poset(opt);
    Realizer r = load_realizer(opt, p);
    ValuedLattice built =
        complete_valuation(p, r, opt.unchecked ? VerifyMode::never : VerifyMode::automatic,
                           effective_limit(opt, kDefaultLatticeLimit));
    write_output(opt, format_valuation_table(built.lattice, built.valuation, built.weights,
                                             r.lambda1()));
    return 0;
}

std::string witness_text(const SegmentWitness& w) {
    std::string values;
    for (auto v : w.closure_values) {
        if (!values.empty()) values += ',';
        values += std::to_string(v);
    }
    if (w.direction == SegmentWitness::Direction::lower)
        return "lower segment below " + std::to_string(w.threshold) + ": closure values " + values;
    return "upper segment from " + std::to_string(w.threshold) + ": closure values " + values;
}

int cmd_check(const Options& opt) {
    Poset p = load_poset(opt);
    DownsetLattice l = downset_lattice(p, effective_limit(opt, kDefaultLatticeLimit));
    Valuation v = valuation_from_weights(l, load_weights(opt, p));

    std::string out;
    AxiomReport axioms = check_valuation_axioms(l, v);
    out += std::string("bottom-zero: ") + (axioms.bottom_zero ? "pass" : "fail") + "\n";
    out += std::string("monotonicity: ") + (axioms.monotone ? "pass" : "fail") + "\n";
    out += std::string("additivity: ") + (axioms.additive ? "pass" : "fail") + "\n";
    bool bijective = axioms.ok() && is_bijective(l, v);
    out += std::string("bijective: ") + (bijective ? "pass" : "fail") + "\n";
    bool complete = false;
    if (bijective) {
        SegmentVerdict verdict = is_complete(l, v);
        complete = verdict.ok;
        out += std::string("complete: ") +
               (complete ? "pass" : "fail (" + witness_text(*verdict.witness) + ")") + "\n";
    } else {
        out += "complete: skipped (requires bijective)\n";
    }
    out += std::string("verdict: ") + (complete ? "complete" : "not complete") + "\n";
    write_output(opt, out);
    return complete ? 0 : 1;
}

int cmd_extract_realizer(const Options& opt) {
    Poset p = load_poset(opt);
    DownsetLattice l = downset_lattice(p, effective_limit(opt, kDefaultLatticeLimit));
    Valuation v = valuation_from_weights(l, load_weights(opt, p));
    try {
        Realizer r = extract_realizer(l, v);
        write_output(opt, realizer_to_json(p, r).dump(2) + "\n");
        return 0;
    } catch (const Error& e) {
        if (e.code() == errc::not_complete || e.code() == errc::not_bijective) {
            write_output(opt, std::string("verdict: not complete (") + errc_name(e.code()) + ")\n");
            return 1;
        }
        throw;
    }
}

int cmd_roundtrip(const Options& opt) {
    Poset p = load_poset(opt);
    Realizer r = load_realizer(opt, p);
    bool ok = round_trip_check(p, r, effective_limit(opt, kDefaultLatticeLimit));
    write_output(opt, ok ? "roundtrip: ok\n" : "roundtrip: failed\n");
    return ok ? 0 : 1;
}

int cmd_search(const Options& opt) {
    Poset p = load_poset(opt);
    std::uint64_t budget = effective_limit(opt, oracle::kDefaultCandidateBudget);
    oracle::WeightSearchResult result = opt.mode == "bijective"
                                            ? oracle::search_bijective_valuations(p, budget)
                                            : oracle::search_complete_valuations(p, budget);
    std::string out;
    for (const auto& w : result.found) out += weights_line(p, w) + "\n";
    out += "candidates=" + std::to_string(result.candidates) +
           " found=" + std::to_string(result.found.size()) + "\n";
    write_output(opt, out);
    return result.found.empty() ? 1 : 0;
}

int cmd_export_dot(const Options& opt) {
    Poset p = load_poset(opt);
    std::optional<Realizer> r;
    if (!opt.realizer_file.empty()) r = realizer_from_json(p, load_json(opt.realizer_file));
    std::optional<WeightFunction> w;
    if (!opt.valuation_file.empty()) {
        if (r) raise(errc::parse_error, "give either -r or -v, not both");
        w = weights_from_json(p, load_json(opt.valuation_file));
    } else if (r) {
        w = chain_count_weights(p, *r);
    }

    if (opt.target == "poset") {
        write_output(opt, dot_poset(p, w ? &*w : nullptr, "poset"));
    } else if (opt.target == "complement") {
        if (!r) raise(errc::parse_error, "--target complement needs -r REALIZER");
        Poset q = complementary_poset(p, *r, ComplementVariant::Q);
        write_output(opt, dot_poset(q, w ? &*w : nullptr, "complement"));
    } else { // lattice
        DownsetLattice l = downset_lattice(p, effective_limit(opt, kDefaultLatticeLimit));
        if (w) {
            Valuation v = valuation_from_weights(l, *w);
            write_output(opt, dot_lattice(l, &v));
        } else {
            write_output(opt, dot_lattice(l));
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"valuations on finite distributive lattices"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool needs_input = true) {
        auto* in = sub->add_option("-i,--input", opt.input, "poset JSON file");
        if (needs_input) in->required();
        sub->add_option("-o,--output", opt.output, "write output to FILE instead of stdout");
        sub->add_option("--limit", opt.limit, "override the size bound for this command");
        return sub;
    };

    auto* lattice = add_common(app.add_subcommand("lattice", "enumerate the downset lattice"));
    lattice->add_flag("--stats", opt.stats, "print counts instead of the table");

    add_common(app.add_subcommand("dim2", "find a realizer (decide dimension <= 2)"));

    auto* weights = add_common(app.add_subcommand("weights", "chain-count weights of a realizer"));
    weights->add_option("-r,--realizer", opt.realizer_file, "realizer JSON file")->required();

    auto* valuate = add_common(app.add_subcommand("valuate", "valuation table from a realizer"));
    valuate->add_option("-r,--realizer", opt.realizer_file, "realizer JSON file")->required();
    valuate->add_flag("--unchecked", opt.unchecked, "skip the completeness verification");

    auto* check = add_common(app.add_subcommand("check", "verify valuation axioms and completeness"));
    check->add_option("-v,--valuation", opt.valuation_file, "valuation (weights) JSON file")->required();

    auto* extract = add_common(
        app.add_subcommand("extract-realizer", "realizer of a complete valuation"));
    extract->add_option("-v,--valuation", opt.valuation_file, "valuation (weights) JSON file")->required();

    auto* roundtrip = add_common(app.add_subcommand("roundtrip", "verify the correspondence both ways"));
    roundtrip->add_option("-r,--realizer", opt.realizer_file, "realizer JSON file")->required();

    auto* search = add_common(app.add_subcommand("search", "exhaustive weight-function search"));
    search->add_option("--mode", opt.mode, "bijective or complete (default complete)")
        ->check(CLI::IsMember({"bijective", "complete"}));

    auto* export_dot = add_common(app.add_subcommand("export-dot", "Hasse diagram as DOT"));
    export_dot->add_option("--target", opt.target, "poset, complement, or lattice")
        ->check(CLI::IsMember({"poset", "complement", "lattice"}));
    export_dot->add_option("-r,--realizer", opt.realizer_file, "realizer JSON file");
    export_dot->add_option("-v,--valuation", opt.valuation_file, "valuation (weights) JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (lattice->parsed()) return cmd_lattice(opt);
        if (app.get_subcommand("dim2")->parsed()) return cmd_dim2(opt);
        if (weights->parsed()) return cmd_weights(opt);
        if (valuate->parsed()) return cmd_valuate(opt);
        if (check->parsed()) return cmd_check(opt);
        if (extract->parsed()) return cmd_extract_realizer(opt);
        if (roundtrip->parsed()) return cmd_roundtrip(opt);
        if (search->parsed()) return cmd_search(opt);
        if (export_dot->parsed()) return cmd_export_dot(opt);
    } catch (const latval::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

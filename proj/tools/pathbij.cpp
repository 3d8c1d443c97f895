// pathbij: enumerate lattice paths and compositions, apply bijections,
// run verification suites and emit sequences.
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pathbij/pathbij.hpp"

namespace {

using namespace pathbij;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

std::pair<int, int> parse_bounds(const std::string& text) {
    auto v = detail::parse_int_list(text);
    if (v.size() != 2 || v[0] > v[1]) throw domain_error("strip must look like lo,hi with lo <= hi");
    return {v[0], v[1]};
}

void print_report(const VerifyReport& rep, const std::string& format) {
    if (format == "json") {
        std::cout << rep.to_json().dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "check,first_size,last_size,passed,counterexample\n";
        for (const auto& c : rep.checks) {
            std::cout << c.name << ',' << (c.sizes.empty() ? 0 : c.sizes.front()) << ','
                      << (c.sizes.empty() ? 0 : c.sizes.back()) << ',' << (c.passed ? "true" : "false") << ",\""
                      << c.counterexample << "\"\n";
        }
    } else {
        std::cout << rep.to_text();
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bijections between lattice paths and integer compositions"};
    app.require_subcommand(1);

    // enumerate
    auto* en = app.add_subcommand("enumerate", "Stream objects of a family as JSON lines");
    std::string family = "paths";
    int en_n = 0;
    std::string en_class = "walk";
    std::string en_stepset = "-1,1";
    std::string en_strip;
    std::string en_prefix;
    std::string en_filter;
    int en_k = 3;
    int en_g = 4;
    int en_r = 0;
    bool count_only = false;
    en->add_option("--family", family, "paths, compositions, pairs, k_compositions, g_compositions, "
                                       "partitions_distinct, hardinian, tuples");
    en->add_option("-n,--size", en_n, "Path length or object size")->required();
    en->add_option("--class", en_class, "Path class: walk, meander, bridge, excursion, ...");
    en->add_option("--stepset", en_stepset, "Comma-separated steps");
    en->add_option("--strip", en_strip, "Altitude bounds lo,hi");
    en->add_option("--prefix", en_prefix, "Fixed first steps (u/d text for Dyck step sets)");
    en->add_option("--filter", en_filter, "Path property, e.g. first_peak_highest or height_at_most:2");
    en->add_option("--k", en_k, "Colors for k_compositions");
    en->add_option("--g", en_g, "g for g_compositions");
    en->add_option("--r", en_r, "Tuples have r+1 entries");
    en->add_flag("--count-only", count_only, "Print only the number of objects");

    // map
    auto* mp = app.add_subcommand("map", "Apply a bijection");
    std::string bij_name;
    std::string direction = "fwd";
    std::string map_in;
    bool map_in_set = false;
    MapOptions map_opts;
    bool list_bijections = false;
    mp->add_option("bijection,--bijection", bij_name, "Bijection name");
    mp->add_option("dir,--dir", direction, "fwd or inv")->check(CLI::IsMember({"fwd", "inv"}));
    mp->add_option("input,--in", map_in, "Input object as text or JSON");
    mp->add_option("--k", map_opts.k, "Number of colors (k-compositions, colored returns)");
    mp->add_option("--g", map_opts.g, "g for g-compositions");
    mp->add_flag("--start-up", map_opts.start_with_up, "Bridges start with u (marked_peak_bridge)");
    mp->add_flag("--list", list_bijections, "List registered bijections");

    // verify
    auto* vf = app.add_subcommand("verify", "Run a verification suite");
    std::string suite = "all";
    int max_size = 8;
    std::string vf_format = "text";
    vf->add_option("suite", suite, "roundtrips, cardinalities, statistics, congruences, sequences, all");
    vf->add_option("max_size", max_size, "Largest size to check");
    vf->add_option("--format", vf_format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

    // seq
    auto* sq = app.add_subcommand("seq", "Emit a sequence in b-file format");
    std::string seq_name;
    int terms = 10;
    std::string sq_format = "bfile";
    bool list_sequences = false;
    sq->add_option("--name", seq_name, "Sequence name or OEIS id");
    sq->add_option("--terms", terms, "Number of terms");
    sq->add_option("--format", sq_format, "bfile or csv")->check(CLI::IsMember({"bfile", "csv"}));
    sq->add_flag("--list", list_sequences, "List named sequences");

    // congruence
    auto* cg = app.add_subcommand("congruence", "Check a congruence claim");
    std::string claim;
    int cg_max = 14;
    cg->add_option("--claim", claim, "rplus1, e1odd, ddelta, narayana, stepdiv, fine, lastpart")->required();
    cg->add_option("--max", cg_max, "Upper size bound");

    // oeis-check
    auto* oc = app.add_subcommand("oeis-check", "Compare a sequence with a local b-file");
    std::string oc_seq;
    std::string bfile_path;
    int oc_terms = 10;
    oc->add_option("--seq", oc_seq, "Sequence name or OEIS id")->required();
    oc->add_option("--bfile", bfile_path, "Path to the b-file")->required();
    oc->add_option("--terms", oc_terms, "Number of terms to compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    map_in_set = mp->count("input") > 0 || mp->count("--in") > 0;

    try {
        if (*en) {
            EnumSpec spec;
            spec.family = parse_family(family);
            spec.n = en_n;
            spec.path_class = parse_path_class(en_class);
            spec.stepset = StepSet(detail::parse_int_list(en_stepset));
            if (!en_strip.empty()) spec.strip = parse_bounds(en_strip);
            if (!en_prefix.empty()) spec.prefix = parse_path(en_prefix, spec.stepset).steps();
            if (!en_filter.empty()) spec.filter = parse_property(en_filter);
            spec.k = en_k;
            spec.g = en_g;
            spec.r = en_r;
            spec.cap = cap_from_env();
            if (count_only) {
                std::cout << json{{"count", count(spec).str()}}.dump() << '\n';
            } else {
                generate(spec, [](const EnumObject& obj) {
                    std::cout << to_json(obj).dump() << '\n';
                    return true;
                });
            }
            return exit_ok;
        }
        if (*mp) {
            if (list_bijections) {
                for (const auto& b : bijection_registry()) {
                    std::cout << b.name << ": " << b.domain << " -> " << b.codomain << '\n';
                }
                return exit_ok;
            }
            if (bij_name.empty()) throw CLI::RequiredError("bijection");
            if (!map_in_set) throw CLI::RequiredError("input");
            std::cout << apply_bijection(bij_name, direction == "fwd", map_in, map_opts).dump() << '\n';
            return exit_ok;
        }
        if (*vf) {
            const auto rep = run_suite(suite, max_size);
            print_report(rep, vf_format);
            return rep.passed() ? exit_ok : exit_failed;
        }
        if (*sq) {
            if (list_sequences) {
                for (const auto& s : named_sequences()) {
                    std::cout << s.name << (s.oeis.empty() ? "" : " (" + s.oeis + ")") << ": " << s.description << '\n';
                }
                return exit_ok;
            }
            if (seq_name.empty()) throw CLI::RequiredError("--name");
            const auto entries = sequence_entries(find_sequence(seq_name), terms);
            if (sq_format == "csv") {
                std::cout << "n,a(n)\n";
                for (const auto& [n, v] : entries) std::cout << n << ',' << v << '\n';
            } else {
                std::cout << format_bfile(entries);
            }
            return exit_ok;
        }
        if (*cg) {
            const auto rep = check_congruence(claim, cg_max);
            std::cout << rep.to_json().dump(2) << '\n';
            return rep.violations.empty() ? exit_ok : exit_failed;
        }
        if (*oc) {
            const auto& s = find_sequence(oc_seq);
            const auto cmp = compare_with_bfile(s, read_bfile(bfile_path, s.oeis), oc_terms);
            std::cout << cmp.to_json().dump(2) << '\n';
            return cmp.match ? exit_ok : exit_failed;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << " (set PATHBIJ_CAP to raise it)\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

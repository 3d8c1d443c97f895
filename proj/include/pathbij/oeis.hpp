#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pathbij/bigint.hpp"
#include "pathbij/enumerate.hpp"
#include "pathbij/error.hpp"
#include "pathbij/io.hpp"
#include "pathbij/profiles.hpp"
#include "pathbij/series.hpp"

namespace pathbij {

struct BFile {
    std::string id;
    std::vector<std::pair<long long, BigInt>> entries;
};

inline BFile parse_bfile(std::istream& in, const std::string& id = "") {
    BFile b{id, {}};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long long idx = 0;
        std::string value;
        std::string extra;
        if (!(ls >> idx >> value) || (ls >> extra)) {
            throw domain_error("b-file line " + std::to_string(lineno) + " is not 'index value'");
        }
        BigInt v;
        try {
            v = BigInt(value);
        } catch (const std::exception&) {
            throw domain_error("b-file line " + std::to_string(lineno) + " has a malformed value");
        }
        if (!b.entries.empty() && idx <= b.entries.back().first) {
            throw domain_error("b-file indices must increase strictly (line " + std::to_string(lineno) + ")");
        }
        b.entries.emplace_back(idx, std::move(v));
    }
    return b;
}

inline BFile read_bfile(const std::string& path, const std::string& id = "") {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot read b-file '" + path + "'");
    return parse_bfile(in, id);
}

inline std::string format_bfile(const std::vector<std::pair<long long, BigInt>>& entries) {
    std::string out;
    for (const auto& [n, v] : entries) out += std::to_string(n) + " " + v.str() + "\n";
    return out;
}

// A library sequence with its (library index -> b-file index) map
// b = index + shift, starting at library index `first`.
struct NamedSequence {
    std::string name;
    std::string oeis;
    std::string description;
    int first = 0;
    int shift = 0;
    std::function<std::vector<BigInt>(int first, int last)> terms;
};

namespace detail {

inline std::vector<BigInt> tail(std::vector<BigInt> v, int first) {
    return std::vector<BigInt>(v.begin() + first, v.end());
}

inline std::vector<BigInt> each(int first, int last, const std::function<BigInt(int)>& f) {
    std::vector<BigInt> out;
    for (int n = first; n <= last; ++n) out.push_back(f(n));
    return out;
}

}  // namespace detail

inline const std::vector<NamedSequence>& named_sequences() {
    static const std::vector<NamedSequence> seqs = [] {
        std::vector<NamedSequence> s;
        s.push_back({"exact_peaks_1", "A287846", "Dyck paths with exactly one peak at every reached height", 0, 0,
                     [](int a, int b) { return detail::tail(exact_per_level_table(b, 1), a); }});
        s.push_back({"exact_peaks_2", "A287845", "Dyck paths with exactly two peaks at every reached height", 0, 0,
                     [](int a, int b) { return detail::tail(exact_per_level_table(b, 2), a); }});
        s.push_back({"atmost_peaks_1", "A281874", "Dyck paths with at most one peak at every height", 0, 0,
                     [](int a, int b) { return detail::tail(atmost_per_level_table(b, 1), a); }});
        s.push_back({"atmost_peaks_2", "A287966", "Dyck paths with at most two peaks at every height", 0, 0,
                     [](int a, int b) { return detail::tail(atmost_per_level_table(b, 2), a); }});
        s.push_back({"atmost_peaks_3", "A287967", "Dyck paths with at most three peaks at every height", 0, 0,
                     [](int a, int b) { return detail::tail(atmost_per_level_table(b, 3), a); }});
        s.push_back({"summit_bridges", "A001519", "Dyck bridges with non-decreasing summits (odd Fibonacci)", 0, 1,
                     [](int a, int b) { return detail::tail(rational_series({1, -1}, {1, -3, 1}, b).coeffs, a); }});
        s.push_back({"summit_bridges_not_below", "A061667", "the same, excluding paths fully below the axis", 1, 0,
                     [](int a, int b) {
                         return detail::each(a, b, [](int n) {
                             return fibonacci(2 * n + 1) - ipow(BigInt(2), static_cast<unsigned>(n - 1));
                         });
                     }});
        s.push_back({"summit_bridges_open_end", "A105693", "the same, with the end point not a summit", 0, 0,
                     [](int a, int b) {
                         return detail::each(a, b, [](int n) {
                             return fibonacci(2 * n + 2) - ipow(BigInt(2), static_cast<unsigned>(n));
                         });
                     }});
        s.push_back({"total_peaks", "A001700", "total number of peaks over Dyck paths of semilength n", 1, -1,
                     [](int a, int b) { return detail::each(a, b, [](int n) { return binomial(2 * n - 1, n); }); }});
        s.push_back({"jacobsthal", "A001045", "Jacobsthal numbers", 0, 0,
                     [](int a, int b) { return detail::each(a, b, jacobsthal); }});
        s.push_back({"little_schroeder", "A001003", "little Schroeder numbers", 0, 0,
                     [](int a, int b) { return detail::each(a, b, schroeder_little); }});
        s.push_back({"decorated_compositions", "A001906", "decorated compositions (even Fibonacci)", 0, 0,
                     [](int a, int b) { return detail::tail(rational_series({0, 1}, {1, -3, 1}, b).coeffs, a); }});
        s.push_back({"distinct_profiles", "A208738", "distinct peak-height multisets of Dyck paths", 1, 0,
                     [](int a, int b) { return detail::each(a, b, distinct_profile_formula); }});
        s.push_back({"irreducible_pairs", "", "irreducible pairs of compositions of n", 0, 0,
                     [](int a, int b) { return detail::tail(irreducible_pair_series(b).coeffs, a); }});
        s.push_back({"peak_ladder", "A287709",
                     "Dyck paths where every peak at height h > 1 follows a peak at height h-1", 1, 0,
                     [](int a, int b) { return detail::each(a, b, [](int n) { return asinowski_check(n).right; }); }});
        s.push_back({"triangle_walks", "", "closed walks on a triangle", 0, 0,
                     [](int a, int b) { return detail::each(a, b, triangle_walks); }});
        s.push_back({"catalan", "A000108", "Catalan numbers", 0, 0,
                     [](int a, int b) { return detail::each(a, b, catalan); }});
        return s;
    }();
    return seqs;
}

inline const NamedSequence& find_sequence(const std::string& key) {
    for (const auto& s : named_sequences()) {
        if (s.name == key || (!s.oeis.empty() && s.oeis == key)) return s;
    }
    throw domain_error("no sequence named '" + key + "'");
}

// Library terms first .. first+count-1, keyed by b-file index.
inline std::vector<std::pair<long long, BigInt>> sequence_entries(const NamedSequence& s, int count) {
    if (count < 0) throw domain_error("term count must be non-negative");
    std::vector<std::pair<long long, BigInt>> out;
    if (count == 0) return out;
    const auto v = s.terms(s.first, s.first + count - 1);
    for (int i = 0; i < count; ++i) out.emplace_back(static_cast<long long>(s.first + i + s.shift), v[i]);
    return out;
}

struct OeisComparison {
    std::string sequence;
    int compared = 0;
    bool match = true;
    std::optional<long long> first_mismatch;  // b-file index
    std::string detail;

    json to_json() const {
        json j{{"sequence", sequence}, {"compared", compared}, {"match", match}};
        if (first_mismatch) j["first_mismatch"] = *first_mismatch;
        if (!detail.empty()) j["detail"] = detail;
        return j;
    }
};

inline OeisComparison compare_with_bfile(const NamedSequence& s, const BFile& b, int terms) {
    if (s.oeis.empty()) throw domain_error("no OEIS offset configured for '" + s.name + "'");
    OeisComparison r{s.name + " / " + s.oeis, 0, true, std::nullopt, {}};
    const auto mine = sequence_entries(s, terms);
    for (const auto& [idx, v] : mine) {
        auto it = std::find_if(b.entries.begin(), b.entries.end(), [&](const auto& e) { return e.first == idx; });
        if (it == b.entries.end()) {
            r.match = false;
            r.first_mismatch = idx;
            r.detail = "b-file has no entry " + std::to_string(idx);
            return r;
        }
        ++r.compared;
        if (it->second != v) {
            r.match = false;
            r.first_mismatch = idx;
            r.detail = "library " + v.str() + ", b-file " + it->second.str();
            return r;
        }
    }
    return r;
}

}  // namespace pathbij

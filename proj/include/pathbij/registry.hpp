#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "pathbij/bijections.hpp"
#include "pathbij/hardinian.hpp"
#include "pathbij/io.hpp"

namespace pathbij {

struct MapOptions {
    int k = 0;  // 0: infer from the input
    int g = 0;
    bool start_with_up = false;
};

struct BijectionEntry {
    std::string name;
    std::string domain;
    std::string codomain;
    std::function<json(const std::string&, const MapOptions&)> fwd;
    std::function<json(const std::string&, const MapOptions&)> inv;
};

// Text forms accepted besides JSON:
//   path "uudd", marked path "uudd@2", labeled peak "uudd@2:1",
//   2-colored bridge "du|ud", colored returns "udud/2", pair "((2,1),(3))",
//   k-composition "6_1+1_2", g-composition "2,0,0,3,1", tuple "((1),())",
//   array "0,0,1;0,1,1;1,1,1", triangle walk "1,2,3,1".
namespace input {

inline bool is_json(const std::string& s) {
    const auto t = detail::strip(s);
    return !t.empty() && (t.front() == '{' || t.front() == '[');
}

inline json parse_json(const std::string& s) {
    try {
        return json::parse(s);
    } catch (const json::parse_error& e) {
        throw domain_error(std::string("invalid JSON input: ") + e.what());
    }
}

inline std::vector<std::string> split_top(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline LatticePath path(const std::string& s) {
    return is_json(s) ? path_from_json(parse_json(s)) : parse_path(detail::strip(s));
}

inline MarkedPath marked(const std::string& s) {
    if (is_json(s)) return marked_from_json(parse_json(s));
    const auto t = detail::strip(s);
    const auto at = t.find('@');
    if (at == std::string::npos) throw domain_error("marked path text must look like 'uudd@2'");
    return MarkedPath{parse_path(t.substr(0, at)), static_cast<std::size_t>(detail::parse_int(t.substr(at + 1)))};
}

inline LabeledPeakPath labeled(const std::string& s) {
    if (is_json(s)) return labeled_from_json(parse_json(s));
    const auto t = detail::strip(s);
    const auto at = t.find('@');
    const auto colon = t.find(':');
    if (at == std::string::npos || colon == std::string::npos || colon < at) {
        throw domain_error("labeled peak text must look like 'uudd@2:1'");
    }
    return LabeledPeakPath{parse_path(t.substr(0, at)),
                           static_cast<std::size_t>(detail::parse_int(t.substr(at + 1, colon - at - 1))),
                           detail::parse_int(t.substr(colon + 1))};
}

inline TwoColoredBridge two_colored(const std::string& s) {
    if (is_json(s)) return two_colored_from_json(parse_json(s));
    const auto t = detail::strip(s);
    const auto bar = t.find('|');
    if (bar == std::string::npos) throw domain_error("2-colored bridge text must look like 'du|ud'");
    return TwoColoredBridge{parse_path(t.substr(0, bar)), parse_path(t.substr(bar + 1))};
}

inline ColoredReturnPath colored_return(const std::string& s, int k) {
    if (is_json(s)) return colored_return_from_json(parse_json(s), k);
    const auto t = detail::strip(s);
    const auto slash = t.find('/');
    ColoredReturnPath x;
    x.path = parse_path(t.substr(0, slash));
    if (slash != std::string::npos) x.return_colors = detail::parse_int_list(t.substr(slash + 1));
    x.k = k;
    if (x.k <= 0) {
        x.k = 1;
        for (int c : x.return_colors) x.k = std::max(x.k, c);
    }
    for (int c : x.return_colors) {
        if (c < 1 || c > x.k) throw domain_error("return color outside 1..k");
    }
    return x;
}

inline Composition composition(const std::string& s) {
    return is_json(s) ? composition_from_json(parse_json(s)) : parse_composition(s);
}

inline CompositionPair pair(const std::string& s) {
    if (is_json(s)) return pair_from_json(parse_json(s));
    if (detail::strip(s).empty()) throw domain_error("empty input is not a pair of compositions");
    return parse_pair(s);
}

inline KComposition kcomposition(const std::string& s, int k) {
    return is_json(s) ? kcomposition_from_json(parse_json(s), k) : parse_kcomposition(s, k);
}

inline GComposition gcomposition(const std::string& s, int g) {
    if (is_json(s)) return gcomposition_from_json(parse_json(s), g);
    auto parts = detail::parse_int_list(s);
    if (g <= 0) {
        int run = 0;
        int longest = 0;
        for (int v : parts) {
            run = v == 0 ? run + 1 : 0;
            longest = std::max(longest, run);
        }
        g = longest + 2;
    }
    return GComposition(std::move(parts), g);
}

inline CompositionTuple tuple(const std::string& s) {
    if (is_json(s)) return tuple_from_json(parse_json(s));
    auto t = detail::strip(s);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw domain_error("tuple text must look like '((1),())'");
    CompositionTuple out;
    for (const auto& e : split_top(t.substr(1, t.size() - 2))) out.entries.push_back(parse_composition(e));
    return out;
}

inline HardinianArray hardinian(const std::string& s) {
    if (is_json(s)) return hardinian_from_json(parse_json(s));
    HardinianArray a;
    std::string row;
    std::stringstream ss(detail::strip(s));
    while (std::getline(ss, row, ';')) a.grid.push_back(detail::parse_int_list(row));
    return a;
}

inline TriangleWalk triangle_walk(const std::string& s) {
    return is_json(s) ? triangle_walk_from_json(parse_json(s)) : detail::parse_int_list(s);
}

}  // namespace input

inline bool wants_colors(const std::string& s, const MapOptions& o) {
    if (o.k > 0) return true;
    if (input::is_json(s)) return input::parse_json(s).contains("return_colors");
    return s.find('/') != std::string::npos || s.find('_') != std::string::npos;
}

inline const std::vector<BijectionEntry>& bijection_registry() {
    static const std::vector<BijectionEntry> reg = [] {
        using O = MapOptions;
        using S = std::string;
        std::vector<BijectionEntry> r;
        r.push_back({"pair_walk", "pairs of compositions of n", "Dyck walks of length 2n-2",
                     [](const S& s, const O&) { return to_json(pair_to_walk(input::pair(s))); },
                     [](const S& s, const O&) { return to_json(walk_to_pair(input::path(s))); }});
        r.push_back({"three_pair", "3-compositions of n", "pairs of compositions of n",
                     [](const S& s, const O&) { return to_json(three_to_pair(input::kcomposition(s, 3))); },
                     [](const S& s, const O&) { return to_json(pair_to_three(input::pair(s))); }});
        r.push_back({"k_g", "k-compositions of n", "(k+1)-compositions of n",
                     [](const S& s, const O& o) { return to_json(k_to_g(input::kcomposition(s, o.k))); },
                     [](const S& s, const O& o) { return to_json(g_to_k(input::gcomposition(s, o.g))); }});
        r.push_back({"marked_peak_bridge", "Dyck paths with a marked peak", "Dyck bridges starting with d",
                     [](const S& s, const O& o) { return to_json(marked_peak_to_bridge(input::marked(s), o.start_with_up)); },
                     [](const S& s, const O& o) { return to_json(bridge_to_marked_peak(input::path(s), o.start_with_up)); }});
        r.push_back({"labeled_peak_ltrmax", "Dyck paths with a height-labeled peak",
                     "Dyck bridges with a marked strict left-to-right maximum",
                     [](const S& s, const O&) { return to_json(labeled_peak_to_ltrmax(input::labeled(s))); },
                     [](const S& s, const O&) { return to_json(ltrmax_to_labeled_peak(input::marked(s))); }});
        r.push_back({"bridge_meander", "Dyck bridges", "Dyck meanders ending at even altitude",
                     [](const S& s, const O&) { return to_json(bridge_to_meander(input::path(s))); },
                     [](const S& s, const O&) { return to_json(meander_to_bridge(input::path(s))); }});
        r.push_back({"2colored_walk", "2-colored Dyck bridges", "Dyck walks of even length",
                     [](const S& s, const O&) { return to_json(two_colored_to_walk(input::two_colored(s))); },
                     [](const S& s, const O&) { return to_json(walk_to_two_colored(input::path(s))); }});
        r.push_back({"ltrmax_2colored", "bridges of length 2n with a marked strict left-to-right maximum",
                     "2-colored bridges of length 2n-2",
                     [](const S& s, const O&) { return to_json(ltrmax_to_two_colored(input::marked(s))); },
                     [](const S& s, const O&) { return to_json(two_colored_to_ltrmax(input::two_colored(s))); }});
        r.push_back({"height2_composition", "Dyck paths of height at most 2 (with colored returns when k is given)",
                     "compositions (k-compositions)",
                     [](const S& s, const O& o) {
                         if (wants_colors(s, o)) return to_json(colored_height2_to_kcomposition(input::colored_return(s, o.k)));
                         return to_json(height2_to_composition(input::path(s)));
                     },
                     [](const S& s, const O& o) {
                         if (wants_colors(s, o)) return to_json(kcomposition_to_colored_height2(input::kcomposition(s, o.k)));
                         return to_json(composition_to_height2(input::composition(s)));
                     }});
        r.push_back({"height2_tuples", "Dyck paths of height 2 with r hills and r peaks at height 2",
                     "(r+1)-tuples of compositions with total r",
                     [](const S& s, const O&) { return to_json(height2_to_tuple(input::path(s))); },
                     [](const S& s, const O&) { return to_json(tuple_to_height2(input::tuple(s))); }});
        r.push_back({"hills_pyramids", "Dyck paths made of r hills and r height-2 pyramids",
                     "Dyck bridges of semilength r",
                     [](const S& s, const O&) { return to_json(hills_pyramids_to_bridge(input::path(s))); },
                     [](const S& s, const O&) { return to_json(bridge_to_hills_pyramids(input::path(s))); }});
        r.push_back({"summits_valleys", "Dyck bridges of semilength n with non-decreasing summits",
                     "Dyck paths of semilength n+1 with non-decreasing valleys",
                     [](const S& s, const O&) { return to_json(summits_to_valleys(input::path(s))); },
                     [](const S& s, const O&) { return to_json(valleys_to_summits(input::path(s))); }});
        r.push_back({"evenfirst_trianglewalk", "compositions with an even first part",
                     "closed triangle walks from vertex 1 starting 1 -> 2",
                     [](const S& s, const O&) { return triangle_walk_json(even_first_to_triangle_walk(input::composition(s))); },
                     [](const S& s, const O&) { return to_json(triangle_walk_to_even_first(input::triangle_walk(s))); }});
        r.push_back({"hardinian_pair", "n x n Hardinian arrays with r = 1",
                     "pairs of compositions of n with equal first parts",
                     [](const S& s, const O&) { return to_json(array_to_pair(input::hardinian(s))); },
                     [](const S& s, const O&) { return to_json(pair_to_array(input::pair(s))); }});
        return r;
    }();
    return reg;
}

inline const BijectionEntry& find_bijection(const std::string& name) {
    for (const auto& e : bijection_registry()) {
        if (e.name == name) return e;
    }
    throw domain_error("unknown bijection '" + name + "'");
}

inline json apply_bijection(const std::string& name, bool forward, const std::string& in, const MapOptions& opts = {}) {
    const auto& e = find_bijection(name);
    return forward ? e.fwd(in, opts) : e.inv(in, opts);
}

}  // namespace pathbij

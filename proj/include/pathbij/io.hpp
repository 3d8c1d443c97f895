#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "pathbij/bijections.hpp"
#include "pathbij/compositions.hpp"
#include "pathbij/enumerate.hpp"
#include "pathbij/hardinian.hpp"
#include "pathbij/paths.hpp"

namespace pathbij {

using json = nlohmann::json;

// ---- to JSON ----

inline json to_json(const LatticePath& p) {
    json j{{"steps", p.steps()}, {"stepset", p.stepset().steps}};
    if (p.stepset().is_dyck()) j["text"] = dyck_string(p.steps());
    return j;
}

inline json to_json(const Composition& c) { return json{{"parts", c.parts}}; }

inline json to_json(const CompositionPair& p) {
    return json{{"pair", {p.first.parts, p.second.parts}}, {"text", to_string(p)}};
}

inline json to_json(const KComposition& c) {
    json parts = json::array();
    for (const auto& cp : c.parts) parts.push_back({cp.value, cp.color});
    return json{{"parts", parts}, {"k", c.k}, {"text", to_string(c)}};
}

inline json to_json(const GComposition& c) { return json{{"parts", c.parts}, {"g", c.g}}; }

inline json to_json(const CompositionTuple& t) {
    json entries = json::array();
    for (const auto& c : t.entries) entries.push_back(c.parts);
    return json{{"tuple", entries}, {"text", to_string(t)}};
}

inline json to_json(const Partition& p) { return json{{"parts", p}}; }

inline json to_json(const HardinianArray& a) { return json{{"grid", a.grid}, {"r", a.r}}; }

inline json to_json(const MarkedPath& m) { return json{{"path", to_json(m.path)}, {"mark", m.mark}}; }

inline json to_json(const LabeledPeakPath& x) {
    return json{{"path", to_json(x.path)}, {"peak", x.peak}, {"label", x.label}};
}

inline json to_json(const TwoColoredBridge& x) {
    return json{{"first", to_json(x.first)}, {"second", to_json(x.second)}};
}

inline json to_json(const ColoredReturnPath& x) {
    return json{{"path", to_json(x.path)}, {"return_colors", x.return_colors}, {"k", x.k}};
}

inline json triangle_walk_json(const TriangleWalk& w) { return json{{"walk", w}}; }

inline json to_json(const EnumObject& obj) {
    return std::visit([](const auto& x) { return to_json(x); }, obj);
}

inline json to_json(const PathStats& st) {
    auto points = [](const std::vector<Point>& v) {
        json a = json::array();
        for (const auto& [pos, h] : v) a.push_back({pos, h});
        return a;
    };
    return json{{"final_altitude", st.final_altitude},
                {"max_height", st.max_height},
                {"min_height", st.min_height},
                {"peaks", points(st.peaks)},
                {"valleys", points(st.valleys)},
                {"crossings", st.crossings},
                {"returns_to_zero", st.returns_to_zero},
                {"negative_returns", st.negative_returns},
                {"summits", points(st.summits)},
                {"strict_ltr_maxima", points(st.strict_ltr_maxima)},
                {"hills", st.hills},
                {"runs", st.runs}};
}

// ---- from JSON ----

namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw domain_error(std::string("JSON input lacks field '") + key + "'");
    return j.at(key);
}

template <class T>
T get_as(const json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        throw domain_error(std::string("malformed JSON for ") + what);
    }
}

}  // namespace detail

inline LatticePath path_from_json(const json& j) {
    if (j.is_string()) return parse_path(j.get<std::string>());
    StepSet S = j.contains("stepset") ? StepSet(detail::get_as<std::vector<int>>(j.at("stepset"), "stepset"))
                                      : StepSet::dyck();
    if (j.contains("steps")) return LatticePath(detail::get_as<Steps>(j.at("steps"), "steps"), S);
    return parse_path(detail::get_as<std::string>(detail::field(j, "text"), "text"), S);
}

inline Composition composition_from_json(const json& j) {
    if (j.is_array()) return Composition(detail::get_as<std::vector<int>>(j, "composition"));
    return Composition(detail::get_as<std::vector<int>>(detail::field(j, "parts"), "composition"));
}

inline CompositionPair pair_from_json(const json& j) {
    const json& arr = j.is_array() ? j : detail::field(j, "pair");
    if (!arr.is_array() || arr.size() != 2) throw domain_error("a pair needs exactly two compositions");
    return CompositionPair(composition_from_json(arr[0]), composition_from_json(arr[1]));
}

inline KComposition kcomposition_from_json(const json& j, int k) {
    std::vector<ColoredPart> parts;
    for (const auto& e : detail::field(j, "parts")) {
        auto vc = detail::get_as<std::vector<int>>(e, "colored part");
        if (vc.size() != 2) throw domain_error("a colored part is [value, color]");
        parts.push_back({vc[0], vc[1]});
    }
    if (j.contains("k")) k = detail::get_as<int>(j.at("k"), "k");
    if (k <= 0) {
        k = 1;
        for (const auto& cp : parts) k = std::max(k, cp.color);
    }
    return KComposition(std::move(parts), k);
}

inline GComposition gcomposition_from_json(const json& j, int g) {
    auto parts = detail::get_as<std::vector<int>>(j.is_array() ? j : detail::field(j, "parts"), "g-composition");
    if (j.is_object() && j.contains("g")) g = detail::get_as<int>(j.at("g"), "g");
    return GComposition(std::move(parts), g);
}

inline CompositionTuple tuple_from_json(const json& j) {
    const json& arr = j.is_array() ? j : detail::field(j, "tuple");
    CompositionTuple t;
    for (const auto& e : arr) t.entries.push_back(composition_from_json(e));
    return t;
}

inline HardinianArray hardinian_from_json(const json& j) {
    HardinianArray a;
    a.grid = detail::get_as<std::vector<std::vector<int>>>(j.is_array() ? j : detail::field(j, "grid"), "grid");
    if (j.is_object() && j.contains("r")) a.r = detail::get_as<int>(j.at("r"), "r");
    return a;
}

inline MarkedPath marked_from_json(const json& j) {
    return MarkedPath{path_from_json(detail::field(j, "path")),
                      detail::get_as<std::size_t>(detail::field(j, "mark"), "mark")};
}

inline LabeledPeakPath labeled_from_json(const json& j) {
    return LabeledPeakPath{path_from_json(detail::field(j, "path")),
                           detail::get_as<std::size_t>(detail::field(j, "peak"), "peak"),
                           detail::get_as<int>(detail::field(j, "label"), "label")};
}

inline TwoColoredBridge two_colored_from_json(const json& j) {
    return TwoColoredBridge{path_from_json(detail::field(j, "first")), path_from_json(detail::field(j, "second"))};
}

inline ColoredReturnPath colored_return_from_json(const json& j, int k) {
    ColoredReturnPath x;
    x.path = path_from_json(detail::field(j, "path"));
    x.return_colors = detail::get_as<std::vector<int>>(detail::field(j, "return_colors"), "return_colors");
    x.k = j.contains("k") ? detail::get_as<int>(j.at("k"), "k") : k;
    for (int c : x.return_colors) {
        if (c < 1 || c > x.k) throw domain_error("return color outside 1..k");
    }
    return x;
}

inline TriangleWalk triangle_walk_from_json(const json& j) {
    return detail::get_as<TriangleWalk>(j.is_array() ? j : detail::field(j, "walk"), "triangle walk");
}

}  // namespace pathbij

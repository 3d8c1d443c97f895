#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathbij/error.hpp"

namespace pathbij {

using Steps = std::vector<int>;

struct StepSet {
    std::vector<int> steps;  // sorted, unique

    StepSet() : StepSet(std::vector<int>{-1, 1}) {}
    explicit StepSet(std::vector<int> s) : steps(std::move(s)) {
        std::sort(steps.begin(), steps.end());
        steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
        if (steps.empty()) {
            throw domain_error("step set must be non-empty");
        }
    }

    static StepSet dyck() { return StepSet({-1, 1}); }
    static StepSet motzkin() { return StepSet({-1, 0, 1}); }

    bool contains(int s) const { return std::binary_search(steps.begin(), steps.end(), s); }
    bool is_dyck() const { return steps == std::vector<int>{-1, 1}; }
    bool symmetric() const {
        return std::all_of(steps.begin(), steps.end(), [&](int s) { return contains(-s); });
    }
    bool admits_bridges() const { return steps.front() < 0 && steps.back() > 0; }

    friend bool operator==(const StepSet&, const StepSet&) = default;
};

class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(Steps steps, StepSet stepset = StepSet::dyck())
        : steps_(std::move(steps)), stepset_(std::move(stepset)) {
        for (int s : steps_) {
            if (!stepset_.contains(s)) {
                throw domain_error("step " + std::to_string(s) + " is not in the step set");
            }
        }
    }

    const Steps& steps() const { return steps_; }
    const StepSet& stepset() const { return stepset_; }
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    int operator[](std::size_t i) const { return steps_[i]; }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
    friend auto operator<=>(const LatticePath& a, const LatticePath& b) { return a.steps_ <=> b.steps_; }

private:
    Steps steps_;
    StepSet stepset_;
};

enum class PathClass { Walk, Meander, NegativeMeander, Bridge, Excursion, NegativeExcursion };

inline const char* to_string(PathClass c) {
    switch (c) {
        case PathClass::Walk: return "Walk";
        case PathClass::Meander: return "Meander";
        case PathClass::NegativeMeander: return "NegativeMeander";
        case PathClass::Bridge: return "Bridge";
        case PathClass::Excursion: return "Excursion";
        case PathClass::NegativeExcursion: return "NegativeExcursion";
    }
    return "?";
}

// Vertex altitudes, size() + 1 entries starting at 0.
inline std::vector<int> altitudes(const Steps& steps) {
    std::vector<int> a(steps.size() + 1, 0);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        a[i + 1] = a[i] + steps[i];
    }
    return a;
}

inline std::vector<int> altitudes(const LatticePath& p) { return altitudes(p.steps()); }

inline Steps mirror(Steps steps) {
    for (int& s : steps) {
        s = -s;
    }
    return steps;
}

inline LatticePath mirror(const LatticePath& p) {
    return LatticePath(mirror(p.steps()), StepSet(mirror(p.stepset().steps)));
}

inline Steps dyck_steps(std::string_view text) {
    Steps out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == 'u' || c == 'U') {
            out.push_back(1);
        } else if (c == 'd' || c == 'D') {
            out.push_back(-1);
        } else {
            throw domain_error(std::string("unknown path character '") + c + "'");
        }
    }
    return out;
}

inline std::string dyck_string(const Steps& steps) {
    std::string out;
    out.reserve(steps.size());
    for (int s : steps) {
        if (s == 1) {
            out.push_back('u');
        } else if (s == -1) {
            out.push_back('d');
        } else {
            throw domain_error("step " + std::to_string(s) + " has no u/d letter");
        }
    }
    return out;
}

inline LatticePath parse_path(std::string_view text, const StepSet& stepset = StepSet::dyck()) {
    if (stepset.is_dyck()) {
        return LatticePath(dyck_steps(text), stepset);
    }
    Steps steps;
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) {
            throw domain_error("empty step in path text");
        }
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw domain_error("unknown step '" + item + "'");
        }
        if (used != item.size()) {
            throw domain_error("unknown step '" + item + "'");
        }
        steps.push_back(v);
    }
    return LatticePath(std::move(steps), stepset);
}

inline std::string render_path(const LatticePath& p) {
    if (p.stepset().is_dyck()) {
        return dyck_string(p.steps());
    }
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(p[i]);
    }
    return out;
}

inline LatticePath dyck(std::string_view text) { return LatticePath(dyck_steps(text)); }

inline PathClass classify(const Steps& steps) {
    auto a = altitudes(steps);
    auto [lo, hi] = std::minmax_element(a.begin(), a.end());
    if (a.back() == 0) {
        if (*lo >= 0) return PathClass::Excursion;
        if (*hi <= 0) return PathClass::NegativeExcursion;
        return PathClass::Bridge;
    }
    if (*lo >= 0) return PathClass::Meander;
    if (*hi <= 0) return PathClass::NegativeMeander;
    return PathClass::Walk;
}

inline PathClass classify(const LatticePath& p) { return classify(p.steps()); }

inline bool is_bridge(const Steps& s) {
    auto c = classify(s);
    return c == PathClass::Bridge || c == PathClass::Excursion || c == PathClass::NegativeExcursion;
}
inline bool is_excursion(const Steps& s) { return classify(s) == PathClass::Excursion; }
inline bool is_meander(const Steps& s) {
    auto c = classify(s);
    return c == PathClass::Meander || c == PathClass::Excursion;
}

using Point = std::pair<std::size_t, int>;  // (vertex position, height)

struct PathStats {
    int final_altitude = 0;
    int max_height = 0;
    int min_height = 0;
    std::vector<Point> peaks;
    std::vector<Point> valleys;
    int crossings = 0;
    int returns_to_zero = 0;
    int negative_returns = 0;
    std::vector<Point> summits;
    std::vector<Point> strict_ltr_maxima;
    int hills = 0;
    std::vector<std::pair<int, int>> runs;  // (step value, run length)
};

inline int count_crossings(const std::vector<int>& alt) {
    int crossings = 0;
    int sign = 0;
    for (int a : alt) {
        if (a == 0) continue;
        int s = a > 0 ? 1 : -1;
        if (sign != 0 && s != sign) ++crossings;
        sign = s;
    }
    return crossings;
}

inline PathStats stats(const Steps& steps) {
    PathStats st;
    auto a = altitudes(steps);
    const std::size_t n = steps.size();
    st.final_altitude = a.back();
    st.max_height = *std::max_element(a.begin(), a.end());
    st.min_height = *std::min_element(a.begin(), a.end());
    st.crossings = count_crossings(a);
    if (n > 0 && steps[0] < 0) {
        st.summits.emplace_back(0, 0);
    }
    int best_peak = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (a[i] > a[i - 1] && a[i] > a[i + 1]) {
            st.peaks.emplace_back(i, a[i]);
            st.summits.emplace_back(i, a[i]);
            if (a[i] == 1) ++st.hills;
            if (a[i] > best_peak) {
                best_peak = a[i];
                st.strict_ltr_maxima.emplace_back(i, a[i]);
            }
        } else if (a[i] < a[i - 1] && a[i] < a[i + 1]) {
            st.valleys.emplace_back(i, a[i]);
        }
    }
    if (n > 0 && steps[n - 1] > 0) {
        st.summits.emplace_back(n, a[n]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i + 1] == 0) {
            ++st.returns_to_zero;
            if (steps[i] > 0) ++st.negative_returns;
        }
        if (!st.runs.empty() && st.runs.back().first == steps[i]) {
            ++st.runs.back().second;
        } else {
            st.runs.emplace_back(steps[i], 1);
        }
    }
    return st;
}

inline PathStats stats(const LatticePath& p) { return stats(p.steps()); }

using PeakProfile = std::map<int, int>;

inline PeakProfile peak_profile(const Steps& steps) {
    PeakProfile prof;
    auto a = altitudes(steps);
    for (std::size_t i = 1; i < steps.size(); ++i) {
        if (a[i] > a[i - 1] && a[i] > a[i + 1]) ++prof[a[i]];
    }
    return prof;
}

inline PeakProfile peak_profile(const LatticePath& p) { return peak_profile(p.steps()); }

struct PropertyId {
    enum class Kind {
        NonDecreasingSummits,
        NonDecreasingSummitsVariant,
        NonDecreasingValleys,
        FirstPeakHighest,
        FirstPeakSmallest,
        SingleHighestPeakLadder,
        PeakLadder,
        FirstAscentMax,
        HeightAtMost,
        ExactPeaksPerLevel,
        AtMostPeaksPerLevel,
        DistinctPeakHeights,
        HillFree,
    };

    Kind kind = Kind::NonDecreasingSummits;
    int param = 0;  // H for HeightAtMost, r for the per-level classes
    bool include_start = true;
    bool include_end = true;
    bool allow_fully_below = true;

    static PropertyId of(Kind k, int param = 0) {
        PropertyId p;
        p.kind = k;
        p.param = param;
        return p;
    }
    static PropertyId summits_variant(bool include_start, bool include_end, bool allow_fully_below) {
        PropertyId p;
        p.kind = Kind::NonDecreasingSummitsVariant;
        p.include_start = include_start;
        p.include_end = include_end;
        p.allow_fully_below = allow_fully_below;
        return p;
    }

    friend bool operator==(const PropertyId&, const PropertyId&) = default;
};

namespace detail {

template <class Points>
bool heights_non_decreasing(const Points& pts) {
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].second < pts[i - 1].second) return false;
    }
    return true;
}

inline bool peak_ladder(const std::vector<Point>& peaks) {
    std::vector<bool> seen;
    for (auto [pos, h] : peaks) {
        if (h > 1) {
            if (static_cast<int>(seen.size()) <= h - 1 || !seen[h - 1]) return false;
        }
        if (h >= 0) {
            if (static_cast<int>(seen.size()) <= h) seen.resize(h + 1, false);
            seen[h] = true;
        }
    }
    return true;
}

inline std::size_t initial_run(const Steps& steps, int value) {
    std::size_t k = 0;
    while (k < steps.size() && steps[k] == value) ++k;
    return k;
}

}  // namespace detail

inline bool has_property(const Steps& steps, const PropertyId& prop) {
    using K = PropertyId::Kind;
    if ((prop.kind == K::HeightAtMost || prop.kind == K::ExactPeaksPerLevel ||
         prop.kind == K::AtMostPeaksPerLevel) &&
        prop.param < 0) {
        throw domain_error("property parameter must be non-negative");
    }
    const PathStats st = stats(steps);
    switch (prop.kind) {
        case K::NonDecreasingSummits:
            return detail::heights_non_decreasing(st.summits);
        case K::NonDecreasingSummitsVariant: {
            if (!prop.allow_fully_below && !steps.empty() && st.max_height <= 0) return false;
            std::vector<Point> pts;
            for (const auto& s : st.summits) {
                if (s.first == 0 && !steps.empty() && steps[0] < 0 && !prop.include_start) continue;
                if (s.first == steps.size() && !steps.empty() && steps.back() > 0 && !prop.include_end) continue;
                pts.push_back(s);
            }
            return detail::heights_non_decreasing(pts);
        }
        case K::NonDecreasingValleys:
            return detail::heights_non_decreasing(st.valleys);
        case K::FirstPeakHighest: {
            if (steps.empty()) return true;
            const std::size_t k = detail::initial_run(steps, 1);
            if (k == 0 || k == steps.size()) return false;
            auto a = altitudes(steps);
            for (std::size_t i = k + 1; i < a.size(); ++i) {
                if (a[i] >= static_cast<int>(k)) return false;
            }
            return true;
        }
        case K::FirstPeakSmallest: {
            if (steps.empty() || steps[0] != 1 || st.peaks.empty()) return false;
            const int first = st.peaks.front().second;
            for (std::size_t i = 1; i < st.peaks.size(); ++i) {
                if (st.peaks[i].second <= first) return false;
            }
            return true;
        }
        case K::SingleHighestPeakLadder: {
            if (steps.size() < 2 || steps[0] != 1 || steps[1] != -1) return false;
            int top = st.peaks.front().second;
            for (auto [pos, h] : st.peaks) top = std::max(top, h);
            int at_top = 0;
            for (auto [pos, h] : st.peaks) at_top += (h == top);
            return at_top == 1 && detail::peak_ladder(st.peaks);
        }
        case K::PeakLadder:
            return detail::peak_ladder(st.peaks);
        case K::FirstAscentMax:
            return static_cast<int>(detail::initial_run(steps, 1)) == st.max_height;
        case K::HeightAtMost:
            return st.max_height <= prop.param;
        case K::ExactPeaksPerLevel:
        case K::AtMostPeaksPerLevel: {
            auto prof = peak_profile(steps);
            int top = 0;
            for (const auto& [h, c] : prof) top = std::max(top, h);
            for (int h = 1; h <= top; ++h) {
                auto it = prof.find(h);
                int c = it == prof.end() ? 0 : it->second;
                if (prop.kind == K::ExactPeaksPerLevel ? c != prop.param : c > prop.param) return false;
            }
            for (const auto& [h, c] : prof) {
                if (h < 1) return false;
            }
            return true;
        }
        case K::DistinctPeakHeights: {
            auto prof = peak_profile(steps);
            return std::all_of(prof.begin(), prof.end(), [](const auto& kv) { return kv.second == 1; });
        }
        case K::HillFree:
            return st.hills == 0;
    }
    return false;
}

inline bool has_property(const LatticePath& p, const PropertyId& prop) { return has_property(p.steps(), prop); }

}  // namespace pathbij

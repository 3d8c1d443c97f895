#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pathbij/bigint.hpp"
#include "pathbij/compositions.hpp"
#include "pathbij/error.hpp"
#include "pathbij/hardinian.hpp"
#include "pathbij/paths.hpp"
#include "pathbij/series.hpp"

namespace pathbij {

inline constexpr long long default_cap = 10'000'000;

// PATHBIJ_CAP overrides the default when set to a positive integer.
inline long long cap_from_env() {
    if (const char* v = std::getenv("PATHBIJ_CAP")) {
        try {
            long long c = std::stoll(v);
            if (c > 0) return c;
        } catch (const std::exception&) {
        }
    }
    return default_cap;
}

using Partition = std::vector<int>;  // strictly decreasing

enum class Family { Paths, Compositions, Pairs, KCompositions, GCompositions, PartitionsDistinct, Hardinian, Tuples };

struct EnumSpec {
    Family family = Family::Paths;
    int n = 0;  // path length, or the size of the object
    PathClass path_class = PathClass::Walk;  // membership, not the most specific class
    StepSet stepset = StepSet::dyck();
    std::optional<std::pair<int, int>> strip;  // inclusive altitude bounds
    Steps prefix;                              // fixed first steps, for splitting work
    int k = 3;                                 // colors for KCompositions
    int g = 4;                                 // for GCompositions
    int r = 0;                                 // tuple arity is r + 1
    std::optional<PropertyId> filter;
    long long cap = default_cap;
};

using EnumObject = std::variant<LatticePath, Composition, CompositionPair, KComposition, GComposition, Partition,
                                HardinianArray, CompositionTuple>;

inline bool member_of(const std::vector<int>& alt, PathClass c) {
    const int lo = *std::min_element(alt.begin(), alt.end());
    const int hi = *std::max_element(alt.begin(), alt.end());
    const bool closed = alt.back() == 0;
    switch (c) {
        case PathClass::Walk: return true;
        case PathClass::Meander: return lo >= 0;
        case PathClass::NegativeMeander: return hi <= 0;
        case PathClass::Bridge: return closed;
        case PathClass::Excursion: return closed && lo >= 0;
        case PathClass::NegativeExcursion: return closed && hi <= 0;
    }
    return false;
}

inline Family parse_family(const std::string& s) {
    static const std::vector<std::pair<std::string, Family>> names{
        {"paths", Family::Paths},
        {"compositions", Family::Compositions},
        {"pairs", Family::Pairs},
        {"k_compositions", Family::KCompositions},
        {"g_compositions", Family::GCompositions},
        {"partitions_distinct", Family::PartitionsDistinct},
        {"hardinian", Family::Hardinian},
        {"tuples", Family::Tuples}};
    for (const auto& [name, f] : names) {
        if (name == s) return f;
    }
    throw domain_error("unknown family '" + s + "'");
}

inline PathClass parse_path_class(const std::string& s) {
    for (auto c : {PathClass::Walk, PathClass::Meander, PathClass::NegativeMeander, PathClass::Bridge,
                   PathClass::Excursion, PathClass::NegativeExcursion}) {
        std::string name = to_string(c);
        std::transform(name.begin(), name.end(), name.begin(), ::tolower);
        std::string lower = s;
        std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
        if (name == lower) return c;
    }
    throw domain_error("unknown path class '" + s + "'");
}

// "name" or "name:param"; the summit variant takes three 0/1 flags,
// e.g. "summits_variant:110" for include_start, include_end, allow_fully_below.
inline PropertyId parse_property(const std::string& text) {
    using K = PropertyId::Kind;
    static const std::vector<std::pair<std::string, K>> names{
        {"non_decreasing_summits", K::NonDecreasingSummits},
        {"summits_variant", K::NonDecreasingSummitsVariant},
        {"non_decreasing_valleys", K::NonDecreasingValleys},
        {"first_peak_highest", K::FirstPeakHighest},
        {"first_peak_smallest", K::FirstPeakSmallest},
        {"single_highest_peak_ladder", K::SingleHighestPeakLadder},
        {"peak_ladder", K::PeakLadder},
        {"first_ascent_max", K::FirstAscentMax},
        {"height_at_most", K::HeightAtMost},
        {"exact_peaks_per_level", K::ExactPeaksPerLevel},
        {"at_most_peaks_per_level", K::AtMostPeaksPerLevel},
        {"distinct_peak_heights", K::DistinctPeakHeights},
        {"hill_free", K::HillFree}};
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    for (const auto& [n, k] : names) {
        if (n != name) continue;
        if (k == K::NonDecreasingSummitsVariant) {
            if (arg.size() != 3 || arg.find_first_not_of("01") != std::string::npos) {
                throw domain_error("summits_variant takes three 0/1 flags, e.g. summits_variant:110");
            }
            return PropertyId::summits_variant(arg[0] == '1', arg[1] == '1', arg[2] == '1');
        }
        const bool needs = k == K::HeightAtMost || k == K::ExactPeaksPerLevel || k == K::AtMostPeaksPerLevel;
        if (needs && arg.empty()) throw domain_error(name + " needs a parameter, e.g. " + name + ":2");
        return PropertyId::of(k, arg.empty() ? 0 : detail::parse_int(arg));
    }
    throw domain_error("unknown property '" + name + "'");
}

// ---- typed generators, lexicographic in step value / part order ----

// Returns false from `visit` to stop early.
inline void for_each_path(int length, const StepSet& S, PathClass cls, std::optional<std::pair<int, int>> strip,
                          const std::function<bool(const Steps&)>& visit, const Steps& prefix = {}) {
    if (length < 0) throw domain_error("path length must be non-negative");
    const bool closed = cls == PathClass::Bridge || cls == PathClass::Excursion || cls == PathClass::NegativeExcursion;
    const bool nonneg = cls == PathClass::Meander || cls == PathClass::Excursion;
    const bool nonpos = cls == PathClass::NegativeMeander || cls == PathClass::NegativeExcursion;
    const int lo_step = S.steps.front();
    const int hi_step = S.steps.back();
    Steps s;
    s.reserve(length);
    bool stop = false;
    auto admissible = [&](int alt, int remaining) {
        if (nonneg && alt < 0) return false;
        if (nonpos && alt > 0) return false;
        if (strip && (alt < strip->first || alt > strip->second)) return false;
        if (closed) {
            const long long reach_lo = alt + static_cast<long long>(remaining) * lo_step;
            const long long reach_hi = alt + static_cast<long long>(remaining) * hi_step;
            if (reach_lo > 0 || reach_hi < 0) return false;
        }
        return true;
    };
    int alt0 = 0;
    for (int st : prefix) {
        if (!S.contains(st)) throw domain_error("prefix step not in step set");
        s.push_back(st);
        alt0 += st;
        if (!admissible(alt0, length - static_cast<int>(s.size()))) return;
    }
    if (static_cast<int>(prefix.size()) > length) return;
    std::function<void(int)> rec = [&](int alt) {
        if (stop) return;
        const int len = static_cast<int>(s.size());
        if (len == length) {
            if (closed && alt != 0) return;
            if (!visit(s)) stop = true;
            return;
        }
        for (int st : S.steps) {
            const int na = alt + st;
            if (!admissible(na, length - len - 1)) continue;
            s.push_back(st);
            rec(na);
            s.pop_back();
            if (stop) return;
        }
    };
    if (admissible(0, length)) rec(alt0);
}

inline void for_each_dyck_bridge(int semilength, const std::function<bool(const Steps&)>& visit) {
    for_each_path(2 * semilength, StepSet::dyck(), PathClass::Bridge, std::nullopt, visit);
}

inline void for_each_dyck_path(int semilength, const std::function<bool(const Steps&)>& visit) {
    for_each_path(2 * semilength, StepSet::dyck(), PathClass::Excursion, std::nullopt, visit);
}

inline void for_each_composition(int n, const std::function<bool(const Composition&)>& visit) {
    if (n < 0) throw domain_error("composition size must be non-negative");
    if (n == 0) {
        visit(Composition());
        return;
    }
    std::vector<int> parts;
    bool stop = false;
    std::function<void(int)> rec = [&](int left) {
        if (stop) return;
        if (left == 0) {
            if (!visit(Composition(parts))) stop = true;
            return;
        }
        for (int v = 1; v <= left && !stop; ++v) {
            parts.push_back(v);
            rec(left - v);
            parts.pop_back();
        }
    };
    rec(n);
}

inline std::vector<Composition> all_compositions(int n) {
    std::vector<Composition> out;
    for_each_composition(n, [&](const Composition& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

inline void for_each_pair(int n, const std::function<bool(const CompositionPair&)>& visit) {
    const auto cs = all_compositions(n);
    for (const auto& a : cs) {
        for (const auto& b : cs) {
            if (!visit(CompositionPair(a, b))) return;
        }
    }
}

inline void for_each_kcomposition(int n, int k, const std::function<bool(const KComposition&)>& visit) {
    if (n < 1 || k < 1) throw domain_error("k-compositions need n, k >= 1");
    for_each_composition(n, [&](const Composition& c) {
        std::vector<int> colors(c.size(), 1);
        while (true) {
            std::vector<ColoredPart> parts;
            for (std::size_t i = 0; i < c.size(); ++i) parts.push_back({c.parts[i], colors[i]});
            if (!visit(KComposition(std::move(parts), k))) return false;
            int pos = static_cast<int>(c.size()) - 2;  // last color stays 1
            while (pos >= 0 && ++colors[pos] > k) colors[pos--] = 1;
            if (pos < 0) break;
        }
        return true;
    });
}

// g-compositions of n: positive parts, each followed by up to g-2 zeros,
// the last positive part by none.
inline void for_each_gcomposition(int n, int g, const std::function<bool(const GComposition&)>& visit) {
    if (n < 1 || g < 2) throw domain_error("g-compositions need n >= 1, g >= 2");
    for_each_composition(n, [&](const Composition& c) {
        std::vector<int> zeros(c.size(), 0);
        while (true) {
            std::vector<int> parts;
            for (std::size_t i = 0; i < c.size(); ++i) {
                parts.push_back(c.parts[i]);
                parts.insert(parts.end(), zeros[i], 0);
            }
            if (!visit(GComposition(std::move(parts), g))) return false;
            int pos = static_cast<int>(c.size()) - 2;
            while (pos >= 0 && ++zeros[pos] > g - 2) zeros[pos--] = 0;
            if (pos < 0) break;
        }
        return true;
    });
}

// Partitions of n into distinct parts, largest part descending.
inline void for_each_partition_distinct(int n, const std::function<bool(const Partition&)>& visit) {
    if (n < 0) throw domain_error("partition size must be non-negative");
    Partition parts;
    bool stop = false;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (stop) return;
        if (left == 0) {
            if (!visit(parts)) stop = true;
            return;
        }
        for (int v = std::min(left, max_part); v >= 1 && !stop; --v) {
            if (v * (v + 1) / 2 < left) break;  // v + (v-1) + ... + 1 cannot reach left
            parts.push_back(v);
            rec(left - v, v - 1);
            parts.pop_back();
        }
    };
    rec(n, n);
}

// (r+1)-tuples of compositions, entries possibly empty, grand total n.
inline void for_each_tuple(int n, int r, const std::function<bool(const CompositionTuple&)>& visit) {
    if (n < 0 || r < 0) throw domain_error("tuples need n, r >= 0");
    CompositionTuple t;
    t.entries.resize(r + 1);
    bool stop = false;
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (stop) return;
        if (idx == r) {
            for_each_composition(left, [&](const Composition& c) {
                t.entries[idx] = c;
                if (!visit(t)) stop = true;
                return !stop;
            });
            return;
        }
        for (int take = 0; take <= left && !stop; ++take) {
            for_each_composition(take, [&](const Composition& c) {
                t.entries[idx] = c;
                rec(idx + 1, left - take);
                return !stop;
            });
        }
    };
    rec(0, n);
}

// ---- size estimates and the generic interface ----

inline BigInt count_paths_dp(int length, const StepSet& S, PathClass cls, std::optional<std::pair<int, int>> strip) {
    const int span = length * std::max(std::abs(S.steps.front()), std::abs(S.steps.back()));
    std::vector<BigInt> cur(2 * span + 1, 0);
    cur[span] = 1;
    const bool nonneg = cls == PathClass::Meander || cls == PathClass::Excursion;
    const bool nonpos = cls == PathClass::NegativeMeander || cls == PathClass::NegativeExcursion;
    auto ok = [&](int alt) {
        if (nonneg && alt < 0) return false;
        if (nonpos && alt > 0) return false;
        if (strip && (alt < strip->first || alt > strip->second)) return false;
        return true;
    };
    for (int step = 0; step < length; ++step) {
        std::vector<BigInt> nxt(cur.size(), 0);
        for (int i = 0; i < static_cast<int>(cur.size()); ++i) {
            if (cur[i] == 0) continue;
            for (int st : S.steps) {
                const int j = i + st;
                if (j < 0 || j >= static_cast<int>(cur.size()) || !ok(j - span)) continue;
                nxt[j] += cur[i];
            }
        }
        cur = std::move(nxt);
    }
    const bool closed = cls == PathClass::Bridge || cls == PathClass::Excursion || cls == PathClass::NegativeExcursion;
    if (closed) return cur[span];
    BigInt total = 0;
    for (const auto& c : cur) total += c;
    return total;
}

inline BigInt estimate_size(const EnumSpec& spec) {
    const int n = spec.n;
    switch (spec.family) {
        case Family::Paths:
            if (n < 0) throw domain_error("path length must be non-negative");
            return count_paths_dp(n, spec.stepset, spec.path_class, spec.strip);
        case Family::Compositions:
            return n == 0 ? BigInt(1) : ipow(BigInt(2), static_cast<unsigned>(std::max(0, n - 1)));
        case Family::Pairs:
            return n == 0 ? BigInt(1) : ipow(BigInt(4), static_cast<unsigned>(std::max(0, n - 1)));
        case Family::KCompositions:
            return ipow(BigInt(spec.k + 1), static_cast<unsigned>(std::max(0, n - 1)));
        case Family::GCompositions:
            return ipow(BigInt(spec.g), static_cast<unsigned>(std::max(0, n - 1)));
        case Family::PartitionsDistinct:
            return partition_p(std::max(0, n));
        case Family::Hardinian:
            return n >= 1 ? power_counts("hardinian_diag", n) : BigInt(0);
        case Family::Tuples: {
            // ((1-x)/(1-2x))^(r+1)
            IntPoly base = series_div(IntPoly{1, -1}, IntPoly{1, -2}, static_cast<std::size_t>(n) + 1);
            IntPoly acc{1};
            for (int i = 0; i <= spec.r; ++i) acc = series_mul(acc, base, static_cast<std::size_t>(n) + 1);
            return acc[n];
        }
    }
    return 0;
}

inline void check_cap(const EnumSpec& spec) {
    const BigInt est = estimate_size(spec);
    if (est > spec.cap) {
        throw cap_exceeded("enumeration would produce " + est.str() + " objects, above the cap of " +
                               std::to_string(spec.cap),
                           est.str());
    }
}

inline void generate(const EnumSpec& spec, const std::function<bool(const EnumObject&)>& visit) {
    check_cap(spec);
    auto pass = [&](const Steps& s) { return !spec.filter || has_property(s, *spec.filter); };
    switch (spec.family) {
        case Family::Paths:
            for_each_path(
                spec.n, spec.stepset, spec.path_class, spec.strip,
                [&](const Steps& s) { return pass(s) ? visit(LatticePath(s, spec.stepset)) : true; }, spec.prefix);
            return;
        case Family::Compositions:
            for_each_composition(spec.n, [&](const Composition& c) { return visit(c); });
            return;
        case Family::Pairs:
            for_each_pair(spec.n, [&](const CompositionPair& p) { return visit(p); });
            return;
        case Family::KCompositions:
            for_each_kcomposition(spec.n, spec.k, [&](const KComposition& c) { return visit(c); });
            return;
        case Family::GCompositions:
            for_each_gcomposition(spec.n, spec.g, [&](const GComposition& c) { return visit(c); });
            return;
        case Family::PartitionsDistinct:
            for_each_partition_distinct(spec.n, [&](const Partition& p) { return visit(p); });
            return;
        case Family::Hardinian: {
            bool stop = false;
            generate_hardinian(spec.n, spec.n, [&](const HardinianArray& a) {
                if (!stop && !visit(a)) stop = true;
            });
            return;
        }
        case Family::Tuples:
            for_each_tuple(spec.n, spec.r, [&](const CompositionTuple& t) { return visit(t); });
            return;
    }
}

inline BigInt count(const EnumSpec& spec) {
    check_cap(spec);
    if (spec.family == Family::Paths && !spec.filter && spec.prefix.empty()) {
        return count_paths_dp(spec.n, spec.stepset, spec.path_class, spec.strip);
    }
    BigInt c = 0;
    generate(spec, [&](const EnumObject&) {
        ++c;
        return true;
    });
    return c;
}

// Sub-specs with every admissible prefix of the given depth; their streams,
// concatenated in order, equal the stream of `spec`.
inline std::vector<EnumSpec> split_prefixes(const EnumSpec& spec, int depth) {
    if (spec.family != Family::Paths) return {spec};
    std::vector<EnumSpec> out;
    for_each_path(std::min(depth, spec.n), spec.stepset, PathClass::Walk, spec.strip, [&](const Steps& p) {
        EnumSpec sub = spec;
        sub.prefix = spec.prefix;
        sub.prefix.insert(sub.prefix.end(), p.begin(), p.end());
        out.push_back(std::move(sub));
        return true;
    }, spec.prefix);
    return out;
}

// ---- partition and path statistics of the first-part section ----

// D_e(n) - D_o(n) over partitions into distinct parts, by parity of the largest part.
inline long long fine_difference(int n) {
    if (n < 1) throw domain_error("fine_difference needs n >= 1");
    long long d = 0;
    for_each_partition_distinct(n, [&](const Partition& p) {
        d += p.front() % 2 == 0 ? 1 : -1;
        return true;
    });
    return d;
}

inline int pentagonal_sign(int n) {
    for (int k = 1; k * (3 * k - 1) / 2 <= n; ++k) {
        if (k * (3 * k + 1) / 2 == n) return 1;
        if (k * (3 * k - 1) / 2 == n) return -1;
    }
    return 0;
}

// V_o(n) - V_e(n), by parity of the smallest part.
inline long long last_part_difference(int n) {
    if (n < 1) throw domain_error("last_part_difference needs n >= 1");
    long long d = 0;
    for_each_partition_distinct(n, [&](const Partition& p) {
        d += p.back() % 2 == 1 ? 1 : -1;
        return true;
    });
    return d;
}

struct AsinowskiResult {
    BigInt left;
    BigInt right;
    bool equal = false;
};

inline AsinowskiResult asinowski_check(int n) {
    if (n < 1) throw domain_error("asinowski_check needs n >= 1");
    AsinowskiResult res;
    const auto left = PropertyId::of(PropertyId::Kind::FirstAscentMax);
    const auto right = PropertyId::of(PropertyId::Kind::PeakLadder);
    for_each_dyck_path(n - 1, [&](const Steps& s) {
        if (has_property(s, left)) ++res.left;
        return true;
    });
    for_each_dyck_path(n, [&](const Steps& s) {
        if (has_property(s, right)) ++res.right;
        return true;
    });
    res.equal = res.left == res.right;
    return res;
}

}  // namespace pathbij

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pathbij/bijections.hpp"
#include "pathbij/enumerate.hpp"
#include "pathbij/hardinian.hpp"
#include "pathbij/io.hpp"
#include "pathbij/profiles.hpp"
#include "pathbij/series.hpp"

namespace pathbij {

struct CheckResult {
    std::string name;
    std::vector<int> sizes;
    bool passed = true;
    std::string counterexample;
};

struct VerifyReport {
    std::string suite;
    int max_size = 0;
    std::vector<CheckResult> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }

    json to_json() const {
        json cs = json::array();
        for (const auto& c : checks) {
            json j{{"name", c.name}, {"sizes", c.sizes}, {"passed", c.passed}};
            if (!c.passed) j["counterexample"] = c.counterexample;
            cs.push_back(j);
        }
        return json{{"suite", suite}, {"max_size", max_size}, {"passed", passed()}, {"checks", cs}};
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "suite " << suite << " (max size " << max_size << ")\n";
        for (const auto& c : checks) {
            os << (c.passed ? "  ok   " : "  FAIL ") << c.name;
            if (!c.sizes.empty()) os << " [" << c.sizes.front() << ".." << c.sizes.back() << "]";
            if (!c.passed) os << ": " << c.counterexample;
            os << '\n';
        }
        os << (passed() ? "passed" : "FAILED") << '\n';
        return os.str();
    }
};

// A size check returns a counterexample description, or nothing on success.
using SizeCheck = std::function<std::optional<std::string>(int)>;

inline CheckResult run_check(const std::string& name, int lo, int hi, const SizeCheck& fn) {
    CheckResult r{name, {}, true, {}};
    for (int n = lo; n <= hi; ++n) {
        r.sizes.push_back(n);
        try {
            if (auto bad = fn(n)) {
                r.passed = false;
                r.counterexample = "n=" + std::to_string(n) + ": " + *bad;
                return r;
            }
        } catch (const std::exception& e) {
            r.passed = false;
            r.counterexample = "n=" + std::to_string(n) + ": exception: " + e.what();
            return r;
        }
    }
    return r;
}

namespace detail {

template <class T>
std::string show(const T& x) {
    return pathbij::to_json(x).dump();
}

inline std::string show(const TriangleWalk& w) { return json(w).dump(); }

inline std::string mismatch(const BigInt& got, const BigInt& want) { return "got " + got.str() + ", expected " + want.str(); }

// Exhaustive bijectivity: g(f(x)) = x on the domain, f injective, and
// f(g(y)) = y on an independently enumerated codomain of the same size.
template <class X, class Y>
std::optional<std::string> roundtrip(const std::function<void(const std::function<void(const X&)>&)>& domain,
                                     const std::function<void(const std::function<void(const Y&)>&)>& codomain,
                                     const std::function<Y(const X&)>& f, const std::function<X(const Y&)>& g) {
    std::optional<std::string> bad;
    std::set<Y> images;
    domain([&](const X& x) {
        if (bad) return;
        const Y y = f(x);
        if (!(g(y) == x)) {
            bad = "inverse fails on " + show(x);
        } else if (!images.insert(y).second) {
            bad = "image of " + show(x) + " repeats";
        }
    });
    if (bad) return bad;
    std::size_t count = 0;
    codomain([&](const Y& y) {
        if (bad) return;
        ++count;
        if (!(f(g(y)) == y)) bad = "forward fails on " + show(y);
    });
    if (bad) return bad;
    if (count != images.size()) {
        return "domain has " + std::to_string(images.size()) + " objects, codomain " + std::to_string(count);
    }
    return std::nullopt;
}

template <class T>
using Source = std::function<void(const std::function<void(const T&)>&)>;

inline Source<LatticePath> paths_of(int length, PathClass cls, std::function<bool(const Steps&)> keep = nullptr,
                                    std::optional<std::pair<int, int>> strip = std::nullopt) {
    return [=](const std::function<void(const LatticePath&)>& visit) {
        for_each_path(length, StepSet::dyck(), cls, strip, [&](const Steps& s) {
            if (!keep || keep(s)) visit(LatticePath(s));
            return true;
        });
    };
}

inline Source<MarkedPath> marked_peaks(int n) {
    return [=](const std::function<void(const MarkedPath&)>& visit) {
        for_each_dyck_path(n, [&](const Steps& s) {
            for (const auto& [pos, h] : stats(s).peaks) visit(MarkedPath{LatticePath(s), pos});
            return true;
        });
    };
}

inline Source<LabeledPeakPath> labeled_peaks(int n) {
    return [=](const std::function<void(const LabeledPeakPath&)>& visit) {
        for_each_dyck_path(n, [&](const Steps& s) {
            for (const auto& [pos, h] : stats(s).peaks) {
                for (int mu = 1; mu <= h; ++mu) visit(LabeledPeakPath{LatticePath(s), pos, mu});
            }
            return true;
        });
    };
}

inline Source<MarkedPath> marked_ltr_maxima(int n) {
    return [=](const std::function<void(const MarkedPath&)>& visit) {
        for_each_dyck_bridge(n, [&](const Steps& s) {
            for (const auto& [pos, h] : stats(s).strict_ltr_maxima) visit(MarkedPath{LatticePath(s), pos});
            return true;
        });
    };
}

inline Source<TwoColoredBridge> two_colored(int n) {
    return [=](const std::function<void(const TwoColoredBridge&)>& visit) {
        for (int a = 0; a <= n; ++a) {
            for_each_dyck_bridge(a, [&](const Steps& s1) {
                for_each_dyck_bridge(n - a, [&](const Steps& s2) {
                    visit(TwoColoredBridge{LatticePath(s1), LatticePath(s2)});
                    return true;
                });
                return true;
            });
        }
    };
}

template <class T, class Gen>
Source<T> from_generator(Gen gen) {
    return [=](const std::function<void(const T&)>& visit) {
        gen([&](const T& x) {
            visit(x);
            return true;
        });
    };
}

inline Source<ColoredReturnPath> colored_returns(int n, int k) {
    return [=](const std::function<void(const ColoredReturnPath&)>& visit) {
        for_each_path(2 * n, StepSet::dyck(), PathClass::Excursion, std::make_pair(0, 2), [&](const Steps& s) {
            const int returns = stats(s).returns_to_zero;
            std::vector<int> colors(std::max(0, returns - 1), 1);
            while (true) {
                visit(ColoredReturnPath{LatticePath(s), colors, k});
                int pos = static_cast<int>(colors.size()) - 1;
                while (pos >= 0 && ++colors[pos] > k) colors[pos--] = 1;
                if (pos < 0) break;
            }
            return true;
        });
    };
}

inline void for_each_triangle_walk(int length, const std::function<void(const TriangleWalk&)>& visit) {
    TriangleWalk w{1};
    std::function<void()> rec = [&]() {
        if (static_cast<int>(w.size()) == length + 1) {
            if (w.back() == 1) visit(w);
            return;
        }
        for (int v = 1; v <= 3; ++v) {
            if (v == w.back()) continue;
            if (w.size() == 1 && v != 2) continue;
            w.push_back(v);
            rec();
            w.pop_back();
        }
    };
    if (length >= 1) rec();
}

inline bool is_hills_and_pyramids(const Steps& s) {
    int hills = 0;
    int pyramids = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        if (i + 1 < s.size() && s[i] == 1 && s[i + 1] == -1) {
            ++hills;
            i += 2;
        } else if (i + 3 < s.size() && s[i] == 1 && s[i + 1] == 1 && s[i + 2] == -1 && s[i + 3] == -1) {
            ++pyramids;
            i += 4;
        } else {
            return false;
        }
    }
    return hills == pyramids;
}

inline int sign_blocks_after_start(const Steps& s) {
    const int c = stats(s).crossings;
    return c + (!s.empty() && s[0] < 0 ? 1 : 0);
}

// Crossings counted with a virtual negative altitude before the start.
inline int crossings_from_below(const Steps& s) {
    auto a = altitudes(s);
    a.insert(a.begin(), -1);
    return count_crossings(a);
}

}  // namespace detail

// ---- suites ----

inline VerifyReport verify_roundtrips(int max_size) {
    using namespace detail;
    VerifyReport rep{"roundtrips", max_size, {}};
    const int n_max = max_size;
    const int h_max = std::min(max_size, 5);
    const int r_max = std::min(max_size, 5);
    auto add = [&](const std::string& name, int lo, int hi, const SizeCheck& fn) {
        rep.checks.push_back(run_check(name, lo, hi, fn));
    };

    add("pair_walk", 1, n_max, [](int n) {
        return roundtrip<CompositionPair, LatticePath>(from_generator<CompositionPair>([n](auto v) { for_each_pair(n, v); }),
                                                       paths_of(2 * n - 2, PathClass::Walk), pair_to_walk, walk_to_pair);
    });
    add("three_pair", 1, n_max, [](int n) {
        return roundtrip<KComposition, CompositionPair>(
            from_generator<KComposition>([n](auto v) { for_each_kcomposition(n, 3, v); }),
            from_generator<CompositionPair>([n](auto v) { for_each_pair(n, v); }), three_to_pair, pair_to_three);
    });
    add("k_g", 1, n_max, [](int n) -> std::optional<std::string> {
        for (int k = 1; k <= 4; ++k) {
            auto bad = roundtrip<KComposition, GComposition>(
                from_generator<KComposition>([n, k](auto v) { for_each_kcomposition(n, k, v); }),
                from_generator<GComposition>([n, k](auto v) { for_each_gcomposition(n, k + 1, v); }), k_to_g, g_to_k);
            if (bad) return "k=" + std::to_string(k) + ": " + *bad;
        }
        return std::nullopt;
    });
    add("marked_peak_bridge", 1, n_max, [](int n) {
        return roundtrip<MarkedPath, LatticePath>(
            marked_peaks(n), paths_of(2 * n, PathClass::Bridge, [](const Steps& s) { return s[0] < 0; }),
            [](const MarkedPath& m) { return marked_peak_to_bridge(m); },
            [](const LatticePath& b) { return bridge_to_marked_peak(b); });
    });
    add("labeled_peak_ltrmax", 1, n_max, [](int n) {
        return roundtrip<LabeledPeakPath, MarkedPath>(labeled_peaks(n), marked_ltr_maxima(n), labeled_peak_to_ltrmax,
                                                      ltrmax_to_labeled_peak);
    });
    add("bridge_meander", 0, n_max, [](int n) {
        return roundtrip<LatticePath, LatticePath>(paths_of(2 * n, PathClass::Bridge),
                                                   paths_of(2 * n, PathClass::Meander), bridge_to_meander,
                                                   meander_to_bridge);
    });
    add("2colored_walk", 0, n_max, [](int n) {
        return roundtrip<TwoColoredBridge, LatticePath>(two_colored(n), paths_of(2 * n, PathClass::Walk),
                                                        two_colored_to_walk, walk_to_two_colored);
    });
    add("ltrmax_2colored", 1, n_max, [](int n) {
        return roundtrip<MarkedPath, TwoColoredBridge>(marked_ltr_maxima(n), two_colored(n - 1), ltrmax_to_two_colored,
                                                       two_colored_to_ltrmax);
    });
    add("height2_composition", 1, n_max, [](int n) -> std::optional<std::string> {
        auto bad = roundtrip<LatticePath, Composition>(
            paths_of(2 * n, PathClass::Excursion, nullptr, std::make_pair(0, 2)),
            from_generator<Composition>([n](auto v) { for_each_composition(n, v); }), height2_to_composition,
            composition_to_height2);
        if (bad) return bad;
        for (int k = 1; k <= 3; ++k) {
            bad = roundtrip<ColoredReturnPath, KComposition>(
                colored_returns(n, k), from_generator<KComposition>([n, k](auto v) { for_each_kcomposition(n, k, v); }),
                colored_height2_to_kcomposition, kcomposition_to_colored_height2);
            if (bad) return "k=" + std::to_string(k) + ": " + *bad;
        }
        return std::nullopt;
    });
    add("height2_tuples", 0, r_max, [](int r) -> std::optional<std::string> {
        const auto prop = PropertyId::of(PropertyId::Kind::ExactPeaksPerLevel, r);
        Source<LatticePath> dom = [r, prop](const std::function<void(const LatticePath&)>& visit) {
            for (int m = r; m <= 3 * r; ++m) {
                for_each_path(2 * m, StepSet::dyck(), PathClass::Excursion, std::make_pair(0, 2), [&](const Steps& s) {
                    const auto prof = peak_profile(s);
                    const bool both = prof.count(1) && prof.count(2);
                    if ((r == 0 || both) && has_property(s, prop)) visit(LatticePath(s));
                    return true;
                });
            }
        };
        return roundtrip<LatticePath, CompositionTuple>(
            dom, from_generator<CompositionTuple>([r](auto v) { for_each_tuple(r, r, v); }), height2_to_tuple,
            tuple_to_height2);
    });
    add("hills_pyramids", 0, std::min(max_size, 6), [](int r) {
        return roundtrip<LatticePath, LatticePath>(
            paths_of(6 * r, PathClass::Excursion, is_hills_and_pyramids, std::make_pair(0, 2)),
            paths_of(2 * r, PathClass::Bridge), hills_pyramids_to_bridge, bridge_to_hills_pyramids);
    });
    add("summits_valleys", 0, n_max, [](int n) {
        const auto summits = PropertyId::of(PropertyId::Kind::NonDecreasingSummits);
        const auto valleys = PropertyId::of(PropertyId::Kind::NonDecreasingValleys);
        return roundtrip<LatticePath, LatticePath>(
            paths_of(2 * n, PathClass::Bridge, [summits](const Steps& s) { return has_property(s, summits); }),
            paths_of(2 * n + 2, PathClass::Excursion, [valleys](const Steps& s) { return has_property(s, valleys); }),
            summits_to_valleys, valleys_to_summits);
    });
    add("evenfirst_trianglewalk", 2, 2 * n_max, [](int n) {
        Source<Composition> dom = [n](const std::function<void(const Composition&)>& visit) {
            for_each_composition(n, [&](const Composition& c) {
                if (c.parts.front() % 2 == 0) visit(c);
                return true;
            });
        };
        Source<TriangleWalk> cod = [n](const std::function<void(const TriangleWalk&)>& visit) {
            for_each_triangle_walk(n, visit);
        };
        return roundtrip<Composition, TriangleWalk>(dom, cod, even_first_to_triangle_walk, triangle_walk_to_even_first);
    });
    add("hardinian_pair", 2, h_max, [](int n) {
        Source<HardinianArray> dom = [n](const std::function<void(const HardinianArray&)>& visit) {
            generate_hardinian(n, n, visit);
        };
        Source<CompositionPair> cod = [n](const std::function<void(const CompositionPair&)>& visit) {
            for_each_pair(n, [&](const CompositionPair& p) {
                if (p.first.size() >= 2 && p.second.size() >= 2 && p.first.parts[0] == p.second.parts[0]) visit(p);
                return true;
            });
        };
        return roundtrip<HardinianArray, CompositionPair>(dom, cod, array_to_pair, pair_to_array);
    });
    return rep;
}

inline VerifyReport verify_cardinalities(int max_size) {
    VerifyReport rep{"cardinalities", max_size, {}};
    auto add = [&](const std::string& name, int lo, int hi, const SizeCheck& fn) {
        rep.checks.push_back(run_check(name, lo, hi, fn));
    };
    auto expect = [](const BigInt& got, const BigInt& want) -> std::optional<std::string> {
        if (got == want) return std::nullopt;
        return detail::mismatch(got, want);
    };
    auto bridges = [](int n, const std::function<bool(const Steps&)>& keep) {
        BigInt c = 0;
        for_each_dyck_bridge(n, [&](const Steps& s) {
            if (keep(s)) ++c;
            return true;
        });
        return c;
    };

    add("four_power_chain", 1, max_size, [&](int n) -> std::optional<std::string> {
        const BigInt want = power_counts("pairs", n);
        EnumSpec spec;
        std::vector<std::pair<std::string, BigInt>> sides;
        spec.family = Family::Pairs;
        spec.n = n;
        sides.emplace_back("pairs", count(spec));
        spec.family = Family::KCompositions;
        spec.k = 3;
        sides.emplace_back("3-compositions", count(spec));
        spec.family = Family::GCompositions;
        spec.g = 4;
        sides.emplace_back("4-compositions", count(spec));
        BigInt walks = 0;
        for_each_path(2 * n - 2, StepSet::dyck(), PathClass::Walk, std::nullopt, [&](const Steps&) {
            ++walks;
            return true;
        });
        sides.emplace_back("walks", walks);
        BigInt colored = 0;
        detail::two_colored(n - 1)([&](const TwoColoredBridge&) { ++colored; });
        sides.emplace_back("2-colored bridges", colored);
        BigInt ltr = 0;
        detail::marked_ltr_maxima(n)([&](const MarkedPath&) { ++ltr; });
        sides.emplace_back("marked ltr maxima", ltr);
        BigInt labeled = 0;
        detail::labeled_peaks(n)([&](const LabeledPeakPath&) { ++labeled; });
        sides.emplace_back("labeled peaks", labeled);
        for (const auto& [name, got] : sides) {
            if (got != want) return name + ": " + detail::mismatch(got, want);
        }
        return std::nullopt;
    });
    add("hardinian_diagonal", 2, std::min(max_size, 5), [&](int n) {
        BigInt c = 0;
        generate_hardinian(n, n, [&](const HardinianArray&) { ++c; });
        return expect(c, power_counts("hardinian_diag", n));
    });
    add("hardinian_rectangular", 2, std::min(max_size, 5), [&](int n) -> std::optional<std::string> {
        for (int k = 1; k <= n; ++k) {
            BigInt c = 0;
            generate_hardinian(n, k, [&](const HardinianArray&) { ++c; });
            if (c != h1_count(n, k)) return "k=" + std::to_string(k) + ": " + detail::mismatch(c, h1_count(n, k));
        }
        return std::nullopt;
    });
    add("total_peaks", 1, max_size + 2, [&](int n) {
        BigInt c = 0;
        for_each_dyck_path(n, [&](const Steps& s) {
            c += static_cast<long>(stats(s).peaks.size());
            return true;
        });
        return expect(c, binomial(2 * n - 1, n));
    });
    add("first_peak_highest", 0, max_size + 2, [&](int n) {
        const auto p = PropertyId::of(PropertyId::Kind::FirstPeakHighest);
        return expect(bridges(n, [&](const Steps& s) { return has_property(s, p); }), catalan(n));
    });
    add("first_peak_smallest", 1, max_size, [&](int n) {
        const auto p = PropertyId::of(PropertyId::Kind::FirstPeakSmallest);
        BigInt partial = 0;
        for (int k = 0; k < n; ++k) partial += catalan(k);
        return expect(bridges(n, [&](const Steps& s) { return has_property(s, p); }), partial);
    });
    add("peak_ladder_bridges", 1, max_size, [&](int n) -> std::optional<std::string> {
        const auto p = PropertyId::of(PropertyId::Kind::SingleHighestPeakLadder);
        const BigInt series = irreducible_pair_series(n)[n];
        BigInt irreducible = 0;
        for_each_pair(n, [&](const CompositionPair& q) {
            if (is_irreducible_pair(q)) ++irreducible;
            return true;
        });
        if (irreducible != series) return "irreducible pairs: " + detail::mismatch(irreducible, series);
        return expect(bridges(n, [&](const Steps& s) { return has_property(s, p); }), series);
    });
    add("summits_fibonacci", 0, max_size + 2, [&](int n) {
        const auto p = PropertyId::of(PropertyId::Kind::NonDecreasingSummits);
        return expect(bridges(n, [&](const Steps& s) { return has_property(s, p); }), fibonacci(2 * n + 1));
    });
    add("summits_variants", 1, max_size, [&](int n) -> std::optional<std::string> {
        const BigInt a = bridges(n, [](const Steps& s) { return has_property(s, PropertyId::summits_variant(true, true, false)); });
        const BigInt want_a = fibonacci(2 * n + 1) - ipow(BigInt(2), static_cast<unsigned>(n - 1));
        if (a != want_a) return "no fully-below paths: " + detail::mismatch(a, want_a);
        const BigInt b = bridges(n, [](const Steps& s) { return has_property(s, PropertyId::summits_variant(true, false, false)); });
        const BigInt want_b = fibonacci(2 * n + 2) - ipow(BigInt(2), static_cast<unsigned>(n));
        if (b != want_b) return "end excluded, no fully-below: " + detail::mismatch(b, want_b);
        return std::nullopt;
    });
    add("schroeder_refined", 1, max_size, [&](int n) -> std::optional<std::string> {
        // Schroeder paths with i up steps: u, d, and a flat step of width 2
        std::vector<BigInt> little(n + 1, 0);
        std::vector<BigInt> large(n + 1, 0);
        std::function<void(int, int, int, bool)> rec = [&](int width, int alt, int ups, bool flat_at_zero) {
            if (width == 2 * n) {
                if (alt == 0) {
                    large[ups] += 1;
                    if (!flat_at_zero) little[ups] += 1;
                }
                return;
            }
            if (alt + 1 <= 2 * n - width - 1) rec(width + 1, alt + 1, ups + 1, flat_at_zero);
            if (alt > 0) rec(width + 1, alt - 1, ups, flat_at_zero);
            if (width + 2 <= 2 * n) rec(width + 2, alt, ups, flat_at_zero || alt == 0);
        };
        rec(0, 0, 0, false);
        for (int i = 0; i <= n; ++i) {
            if (little[i] != schroeder_little_refined(n, i)) return "s(n," + std::to_string(i) + ")";
            if (large[i] != schroeder_large_refined(n, i)) return "l(n," + std::to_string(i) + ")";
        }
        return std::nullopt;
    });
    add("lift_of_base", 1, max_size, [&](int r) { return expect(lift_of_base_total(r), (r + 1) * schroeder_little(r)); });
    add("hills_pyramids_count", 0, std::min(max_size, 7), [&](int r) {
        BigInt c = 0;
        for_each_path(6 * r, StepSet::dyck(), PathClass::Excursion, std::make_pair(0, 2), [&](const Steps& s) {
            if (detail::is_hills_and_pyramids(s)) ++c;
            return true;
        });
        return expect(c, central_binomial(r));
    });
    add("strip_colored_crossings", 1, std::min(max_size, 7), [&](int n) -> std::optional<std::string> {
        for (int k = 1; k <= 3; ++k) {
            BigInt c = 0;
            for_each_path(2 * n, StepSet::dyck(), PathClass::Bridge, std::make_pair(-2, 2), [&](const Steps& s) {
                c += ipow(BigInt(k), static_cast<unsigned>(stats(s).crossings));
                return true;
            });
            if (c != power_counts("strip_colored", n, k)) return "k=" + std::to_string(k) + ": " + detail::mismatch(c, power_counts("strip_colored", n, k));
        }
        return std::nullopt;
    });
    add("colored_returns", 1, max_size, [&](int n) -> std::optional<std::string> {
        for (int k = 1; k <= 3; ++k) {
            BigInt c = 0;
            for_each_path(2 * n, StepSet::dyck(), PathClass::Excursion, std::make_pair(0, 2), [&](const Steps& s) {
                c += ipow(BigInt(k), static_cast<unsigned>(stats(s).returns_to_zero - 1));
                return true;
            });
            if (c != power_counts("colored_height2", n, k)) return "k=" + std::to_string(k) + ": " + detail::mismatch(c, power_counts("colored_height2", n, k));
        }
        return std::nullopt;
    });
    add("exact_per_level_engine", 0, max_size + 3, [&](int n) -> std::optional<std::string> {
        for (int r = 1; r <= 3; ++r) {
            BigInt c = 0;
            for_each_dyck_path(n, [&](const Steps& s) {
                if (has_property(s, PropertyId::of(PropertyId::Kind::ExactPeaksPerLevel, r))) ++c;
                return true;
            });
            if (c != count_exact_per_level(n, r)) return "r=" + std::to_string(r) + ": " + detail::mismatch(count_exact_per_level(n, r), c);
        }
        return std::nullopt;
    });
    add("atmost_per_level_engine", 0, max_size + 3, [&](int n) -> std::optional<std::string> {
        for (int r = 1; r <= 3; ++r) {
            BigInt c = 0;
            for_each_dyck_path(n, [&](const Steps& s) {
                if (has_property(s, PropertyId::of(PropertyId::Kind::AtMostPeaksPerLevel, r))) ++c;
                return true;
            });
            if (c != count_atmost_per_level(n, r)) return "r=" + std::to_string(r) + ": " + detail::mismatch(count_atmost_per_level(n, r), c);
        }
        return std::nullopt;
    });
    add("distinct_profiles", 1, max_size + 2, [&](int n) { return expect(distinct_profile_count(n), distinct_profile_formula(n)); });
    add("asinowski", 2, max_size + 1, [&](int n) -> std::optional<std::string> {
        const auto res = asinowski_check(n);
        if (!res.equal) return "sides differ: " + res.left.str() + " vs " + res.right.str();
        return std::nullopt;
    });
    return rep;
}

inline VerifyReport verify_statistics(int max_size) {
    VerifyReport rep{"statistics", max_size, {}};
    auto add = [&](const std::string& name, int lo, int hi, const SizeCheck& fn) {
        rep.checks.push_back(run_check(name, lo, hi, fn));
    };
    add("peak_height_to_crossings", 1, max_size, [](int n) {
        std::optional<std::string> bad;
        detail::marked_peaks(n)([&](const MarkedPath& m) {
            if (bad) return;
            const auto b = marked_peak_to_bridge(m);
            const int h = detail::peak_height(m.path.steps(), m.mark);
            if (b.steps().front() != -1 || stats(b).crossings != h - 1) bad = detail::show(m);
        });
        return bad;
    });
    add("label_to_maximum", 1, max_size, [](int n) {
        std::optional<std::string> bad;
        detail::labeled_peaks(n)([&](const LabeledPeakPath& x) {
            if (bad) return;
            const auto m = labeled_peak_to_ltrmax(x);
            const Steps& s = m.path.steps();
            const int h = detail::peak_height(x.path.steps(), x.peak);
            const auto a = altitudes(s);
            const int crossings = count_crossings(std::vector<int>(a.begin() + static_cast<std::ptrdiff_t>(m.mark), a.end()));
            if (detail::peak_height(s, m.mark) != x.label || crossings != h - x.label) bad = detail::show(x);
        });
        return bad;
    });
    add("maximum_to_color1_crossings", 1, max_size, [](int n) {
        std::optional<std::string> bad;
        detail::marked_ltr_maxima(n)([&](const MarkedPath& m) {
            if (bad) return;
            const auto x = ltrmax_to_two_colored(m);
            const int h = detail::peak_height(m.path.steps(), m.mark);
            if (detail::crossings_from_below(x.first.steps()) != h - 1) bad = detail::show(m);
        });
        return bad;
    });
    add("negative_blocks_to_altitude", 0, max_size, [](int n) {
        std::optional<std::string> bad;
        for_each_dyck_bridge(n, [&](const Steps& s) {
            const auto m = bridge_to_meander(LatticePath(s));
            if (stats(m).final_altitude != 2 * detail::sign_blocks_after_start(s)) bad = dyck_string(s);
            return !bad;
        });
        return bad;
    });
    add("returns_to_parts", 1, max_size, [](int n) {
        std::optional<std::string> bad;
        for_each_path(2 * n, StepSet::dyck(), PathClass::Excursion, std::make_pair(0, 2), [&](const Steps& s) {
            if (static_cast<int>(height2_to_composition(LatticePath(s)).size()) != stats(s).returns_to_zero) {
                bad = dyck_string(s);
            }
            return !bad;
        });
        return bad;
    });
    add("positive_part_order", 1, max_size, [](int n) {
        std::optional<std::string> bad;
        for_each_kcomposition(n, 3, [&](const KComposition& c) {
            std::vector<int> values;
            for (const auto& cp : c.parts) values.push_back(cp.value);
            std::vector<int> positive;
            for (int v : k_to_g(c).parts) {
                if (v > 0) positive.push_back(v);
            }
            if (values != positive) bad = to_string(c);
            return !bad;
        });
        return bad;
    });
    add("three_to_walk_chain", 1, max_size, [](int n) -> std::optional<std::string> {
        std::set<Steps> images;
        for_each_kcomposition(n, 3, [&](const KComposition& c) {
            images.insert(pair_to_walk(three_to_pair(c)).steps());
            return true;
        });
        if (BigInt(images.size()) != power_counts("pairs", n)) return "chain is not injective";
        return std::nullopt;
    });
    return rep;
}

struct CongruenceReport {
    std::string claim;
    int max = 0;
    std::vector<std::string> violations;

    json to_json() const { return json{{"claim", claim}, {"range", {1, max}}, {"violations", violations}}; }
};

inline const std::vector<std::string>& congruence_claims() {
    static const std::vector<std::string> c{"rplus1", "e1odd", "ddelta", "narayana", "stepdiv", "fine", "lastpart"};
    return c;
}

inline CongruenceReport check_congruence(const std::string& claim, int max) {
    CongruenceReport rep{claim, max, {}};
    auto& v = rep.violations;
    if (claim == "rplus1") {
        for (int r = 1; r <= 5; ++r) {
            const auto t = exact_per_level_table(max, r);
            for (int n = r + 1; n <= max; ++n) {
                if (t[n] % (r + 1) != 0) v.push_back("D_" + std::to_string(r) + "(" + std::to_string(n) + ")");
            }
        }
    } else if (claim == "e1odd") {
        const auto t = atmost_per_level_table(max, 1);
        for (int n = 0; n <= max; ++n) {
            if (t[n] % 2 == 0) v.push_back("E_1(" + std::to_string(n) + ")");
        }
    } else if (claim == "ddelta") {
        for (int n = 1; n <= max; ++n) {
            if (count_distinct_heights(n) % 2 == 0) v.push_back("D(" + std::to_string(n) + ")");
            if (count_distinct_heights_symmetric(n) % 2 == 0) v.push_back("symmetric(" + std::to_string(n) + ")");
        }
    } else if (claim == "narayana") {
        for (int e = 2; e <= 4; ++e) {
            for (const auto& x : narayana_congruence_check(e, std::max(0, max / (1 << e) + 1))) {
                v.push_back("e=" + std::to_string(x.e) + " n=" + std::to_string(x.n) + " k=" + std::to_string(x.k) +
                            " i=" + std::to_string(x.i));
            }
        }
    } else if (claim == "stepdiv") {
        for (const auto& S : {StepSet({-1, 1}), StepSet({-1, 0, 1}), StepSet({-2, 1})}) {
            for (int n = 1; n <= std::min(max, 12); ++n) {
                for (int s : S.steps) {
                    const auto d = step_count_divisibility(S, s, n);
                    const std::string tag = "S=" + json(S.steps).dump() + " s=" + std::to_string(s) + " n=" + std::to_string(n);
                    if (!d.mod_n) v.push_back(tag + " mod n");
                    if (d.symmetric && !d.mod_2) v.push_back(tag + " mod 2");
                    if (d.symmetric && n % 2 == 1 && !d.mod_2n) v.push_back(tag + " mod 2n");
                }
            }
        }
    } else if (claim == "fine") {
        for (int n = 1; n <= max; ++n) {
            if (fine_difference(n) != pentagonal_sign(n)) v.push_back("n=" + std::to_string(n));
        }
    } else if (claim == "lastpart") {
        for (int n = 7; n <= max; ++n) {
            if (last_part_difference(n) <= 0) v.push_back("n=" + std::to_string(n));
        }
    } else {
        throw domain_error("unknown congruence claim '" + claim + "'");
    }
    return rep;
}

inline VerifyReport verify_congruences(int max_size) {
    VerifyReport rep{"congruences", max_size, {}};
    for (const auto& claim : congruence_claims()) {
        int bound = max_size;
        if (claim == "fine" || claim == "lastpart") bound = std::max(max_size, 40);
        CheckResult c{claim, {}, true, {}};
        for (int n = 1; n <= bound; ++n) c.sizes.push_back(n);
        try {
            const auto r = check_congruence(claim, bound);
            if (!r.violations.empty()) {
                c.passed = false;
                c.counterexample = r.violations.front();
            }
        } catch (const std::exception& e) {
            c.passed = false;
            c.counterexample = e.what();
        }
        rep.checks.push_back(c);
    }
    return rep;
}

inline VerifyReport verify_sequences(int max_size) {
    VerifyReport rep{"sequences", max_size, {}};
    auto add = [&](const std::string& name, int lo, int hi, const SizeCheck& fn) {
        rep.checks.push_back(run_check(name, lo, hi, fn));
    };
    const int N = std::max(max_size, 18);
    add("odd_fibonacci_series", 0, N, [](int n) -> std::optional<std::string> {
        const auto t = rational_series({1, -1}, {1, -3, 1}, n);
        if (t[n] != fibonacci(2 * n + 1)) return detail::mismatch(t[n], fibonacci(2 * n + 1));
        return std::nullopt;
    });
    add("even_fibonacci_series", 0, N, [](int n) -> std::optional<std::string> {
        const auto t = rational_series({0, 1}, {1, -3, 1}, n);
        if (t[n] != fibonacci(2 * n)) return detail::mismatch(t[n], fibonacci(2 * n));
        return std::nullopt;
    });
    add("triangle_walks", 0, N, [](int n) -> std::optional<std::string> {
        const BigInt p = ipow(BigInt(2), static_cast<unsigned>(n));
        const BigInt want = exact_div(n % 2 == 0 ? p + 2 : p - 2, 3);
        for (std::size_t v = 0; v < 3; ++v) {
            const BigInt got = closed_walk_count(triangle_adjacency(), n, v);
            if (got != want) return "vertex " + std::to_string(v) + ": " + detail::mismatch(got, want);
        }
        return std::nullopt;
    });
    add("parity_difference", 1, N, [](int n) -> std::optional<std::string> {
        const BigInt d = compositions_odd_first(n) - compositions_even_first(n);
        const BigInt g = triangle_walks(n - 1);
        const auto series = rational_series({0, 1, -1}, {1, -1, -2}, n);
        if (d != g) return "C_o - C_e: " + detail::mismatch(d, g);
        if (series[n] != g) return "series: " + detail::mismatch(series[n], g);
        if (2 * compositions_even_first(n) != triangle_walks(n)) return "2 C_e != G(n)";
        if (n >= 3 && compositions_even_first(n) != compositions_even_first(n - 1) + 2 * compositions_even_first(n - 2)) {
            return "C_e recurrence";
        }
        return std::nullopt;
    });
    add("residue_recurrence", 1, N, [](int n) -> std::optional<std::string> {
        for (int m = 2; m <= 4; ++m) {
            for (int i = 0; i < m; ++i) {
                const BigInt got = composition_parity_counts(n, m, i);
                const BigInt want = detail::parity_direct(n, m, i);
                if (got != want) return "m=" + std::to_string(m) + " i=" + std::to_string(i) + ": " + detail::mismatch(got, want);
            }
        }
        return std::nullopt;
    });
    add("irreducible_pairs_series", 1, std::min(max_size, 10), [](int n) -> std::optional<std::string> {
        BigInt c = 0;
        for_each_pair(n, [&](const CompositionPair& p) {
            if (is_irreducible_pair(p)) ++c;
            return true;
        });
        const BigInt s = irreducible_pair_series(n)[n];
        if (c != s) return detail::mismatch(s, c);
        return std::nullopt;
    });
    add("catalan_excursions", 0, std::max(max_size, 12), [](int n) -> std::optional<std::string> {
        EnumSpec spec;
        spec.n = 2 * n;
        spec.path_class = PathClass::Excursion;
        BigInt c = 0;
        for_each_dyck_path(n, [&](const Steps&) {
            ++c;
            return true;
        });
        if (c != catalan(n) || count(spec) != c) return detail::mismatch(c, catalan(n));
        return std::nullopt;
    });
    add("quoted_prefixes", 1, 1, [](int) -> std::optional<std::string> {
        auto cmp = [](const std::vector<BigInt>& got, const std::vector<int>& want) {
            for (std::size_t i = 0; i < want.size(); ++i) {
                if (got[i] != want[i]) return false;
            }
            return true;
        };
        if (!cmp(exact_per_level_table(8, 1), {1, 1, 0, 2, 0, 4, 6, 8, 24})) return "D_1";
        if (!cmp(exact_per_level_table(8, 2), {1, 0, 1, 0, 0, 3, 6, 0, 9})) return "D_2";
        if (!cmp(atmost_per_level_table(7, 1), {1, 1, 1, 3, 5, 13, 31, 71})) return "E_1";
        if (!cmp(atmost_per_level_table(6, 2), {1, 1, 2, 4, 12, 31, 90})) return "E_2";
        if (!cmp(atmost_per_level_table(6, 3), {1, 1, 2, 5, 13, 40, 119})) return "E_3";
        return std::nullopt;
    });
    return rep;
}

inline const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> s{"roundtrips", "cardinalities", "statistics", "congruences", "sequences", "all"};
    return s;
}

inline VerifyReport run_suite(const std::string& suite, int max_size) {
    if (max_size < 1) throw domain_error("max size must be positive");
    if (suite == "roundtrips") return verify_roundtrips(max_size);
    if (suite == "cardinalities") return verify_cardinalities(max_size);
    if (suite == "statistics") return verify_statistics(max_size);
    if (suite == "congruences") return verify_congruences(max_size);
    if (suite == "sequences") return verify_sequences(max_size);
    if (suite == "all") {
        VerifyReport all{"all", max_size, {}};
        for (const auto& s : verify_suites()) {
            if (s == "all") continue;
            for (auto& c : run_suite(s, max_size).checks) {
                c.name = s + "/" + c.name;
                all.checks.push_back(std::move(c));
            }
        }
        return all;
    }
    throw domain_error("unknown suite '" + suite + "'");
}

}  // namespace pathbij

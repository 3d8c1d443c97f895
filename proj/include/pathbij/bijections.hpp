#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pathbij/compositions.hpp"
#include "pathbij/error.hpp"
#include "pathbij/paths.hpp"

namespace pathbij {

struct MarkedPath {
    LatticePath path;
    std::size_t mark = 0;  // vertex position of the marked peak

    friend bool operator==(const MarkedPath&, const MarkedPath&) = default;
    friend auto operator<=>(const MarkedPath&, const MarkedPath&) = default;
};

struct LabeledPeakPath {
    LatticePath path;
    std::size_t peak = 0;
    int label = 1;

    friend bool operator==(const LabeledPeakPath&, const LabeledPeakPath&) = default;
    friend auto operator<=>(const LabeledPeakPath&, const LabeledPeakPath&) = default;
};

struct TwoColoredBridge {
    LatticePath first;
    LatticePath second;

    friend bool operator==(const TwoColoredBridge&, const TwoColoredBridge&) = default;
    friend auto operator<=>(const TwoColoredBridge&, const TwoColoredBridge&) = default;
};

struct ColoredReturnPath {
    LatticePath path;
    std::vector<int> return_colors;  // one per return except the last
    int k = 1;

    friend bool operator==(const ColoredReturnPath&, const ColoredReturnPath&) = default;
};

namespace detail {

inline void append(Steps& out, const Steps& piece) { out.insert(out.end(), piece.begin(), piece.end()); }

inline Steps slice(const Steps& s, std::size_t from, std::size_t to) {
    return Steps(s.begin() + static_cast<std::ptrdiff_t>(from), s.begin() + static_cast<std::ptrdiff_t>(to));
}

// Pieces strictly between consecutive cut steps; cuts must be increasing.
inline std::vector<Steps> split_at(const Steps& s, const std::vector<std::size_t>& cuts) {
    std::vector<Steps> out;
    std::size_t from = 0;
    for (std::size_t c : cuts) {
        out.push_back(slice(s, from, c));
        from = c + 1;
    }
    out.push_back(slice(s, from, s.size()));
    return out;
}

inline void require_dyck_steps(const LatticePath& p, const char* who) {
    if (!p.stepset().is_dyck()) throw domain_error(std::string(who) + ": expects u/d steps");
}

inline void require_peak(const Steps& s, std::size_t pos, const char* who) {
    if (pos == 0 || pos >= s.size() || s[pos - 1] != 1 || s[pos] != -1) {
        throw domain_error(std::string(who) + ": mark is not at a peak");
    }
}

// L ends at altitude h > 0 with its last step up. Cut at the last up step
// leaving each level 0..h-1; the pieces are L_1..L_h (excursions).
inline std::vector<Steps> last_passage_up(const Steps& L, int h) {
    auto a = altitudes(L);
    std::vector<std::size_t> cuts(h);
    std::vector<bool> seen(h, false);
    for (std::size_t i = L.size(); i-- > 0;) {
        if (L[i] == 1 && a[i] >= 0 && a[i] < h && !seen[a[i]]) {
            seen[a[i]] = true;
            cuts[a[i]] = i;
        }
    }
    auto pieces = split_at(L, cuts);
    pieces.pop_back();  // empty tail after the final up step
    return pieces;
}

// Cut at the first up step reaching each level 1..h; pieces L_1..L_h are
// negative excursions.
inline std::vector<Steps> first_passage_up(const Steps& L, int h) {
    auto a = altitudes(L);
    std::vector<std::size_t> cuts;
    int next = 1;
    for (std::size_t i = 0; i < L.size() && next <= h; ++i) {
        if (a[i + 1] == next) {
            cuts.push_back(i);
            ++next;
        }
    }
    auto pieces = split_at(L, cuts);
    pieces.pop_back();
    return pieces;
}

// R starts at altitude h. Cut at the first down step reaching each level
// h-1, ..., stop. Returns the pieces after each cut; element 0 belongs to
// level h-1 (R_h), the last one holds whatever follows the final cut.
inline std::vector<Steps> first_passage_down(const Steps& R, int h, int stop) {
    std::vector<std::size_t> cuts;
    int alt = h;
    int next = h - 1;
    for (std::size_t i = 0; i < R.size() && next >= stop; ++i) {
        alt += R[i];
        if (alt == next) {
            cuts.push_back(i);
            --next;
        }
    }
    auto pieces = split_at(R, cuts);
    pieces.erase(pieces.begin());  // before the first cut: empty for a peak
    return pieces;
}

// D = u P d R with D a non-empty excursion.
inline std::pair<Steps, Steps> first_arch(const Steps& D) {
    int alt = 0;
    for (std::size_t i = 0; i < D.size(); ++i) {
        alt += D[i];
        if (alt == 0) return {slice(D, 1, i), slice(D, i + 1, D.size())};
    }
    throw domain_error("not an excursion");
}

// Maximal blocks of constant sign of a bridge, in order.
inline std::vector<Steps> sign_blocks(const Steps& B) {
    std::vector<Steps> blocks;
    int alt = 0;
    int sign = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < B.size(); ++i) {
        alt += B[i];
        if (alt == 0) {
            const int arch_sign = B[start] > 0 ? 1 : -1;
            if (!blocks.empty() && arch_sign == sign) {
                append(blocks.back(), slice(B, start, i + 1));
            } else {
                blocks.push_back(slice(B, start, i + 1));
                sign = arch_sign;
            }
            start = i + 1;
        }
    }
    if (alt != 0) throw domain_error("not a bridge");
    return blocks;
}

// Longest prefix ending at 0 before the first altitude of the given sign.
inline std::size_t prefix_before_sign(const Steps& B, int sign) {
    int alt = 0;
    std::size_t last_zero = 0;
    for (std::size_t i = 0; i < B.size(); ++i) {
        alt += B[i];
        if (alt * sign > 0) return last_zero;
        if (alt == 0) last_zero = i + 1;
    }
    return last_zero;
}

inline int peak_height(const Steps& s, std::size_t pos) {
    auto a = altitudes(s);
    return a[pos];
}

}  // namespace detail

// ---- pairs of compositions <-> walks of length 2n-2 ----

inline LatticePath pair_to_walk(const CompositionPair& p) {
    if (p.first.empty() || p.second.empty()) throw domain_error("pair_to_walk needs compositions of n >= 1");
    Steps out;
    for (const Composition* c : {&p.first, &p.second}) {
        Steps bits;
        for (int v : c->parts) {
            bits.insert(bits.end(), v - 1, 1);
            bits.push_back(-1);
        }
        bits.pop_back();
        detail::append(out, bits);
    }
    return LatticePath(std::move(out));
}

inline CompositionPair walk_to_pair(const LatticePath& w) {
    detail::require_dyck_steps(w, "walk_to_pair");
    if (w.size() % 2 != 0) throw domain_error("walk_to_pair needs an even-length walk");
    const std::size_t half = w.size() / 2;
    auto decode = [&](std::size_t from) {
        std::vector<int> parts;
        int cur = 1;
        for (std::size_t i = from; i < from + half; ++i) {
            if (w[i] == 1) {
                ++cur;
            } else {
                parts.push_back(cur);
                cur = 1;
            }
        }
        parts.push_back(cur);
        return Composition(std::move(parts));
    };
    return CompositionPair(decode(0), decode(half));
}

// ---- 3-compositions <-> pairs ----

inline CompositionPair three_to_pair(const KComposition& c) {
    if (c.k != 3) throw domain_error("three_to_pair needs a 3-composition");
    auto merge = [&](int merging_color) {
        std::vector<int> parts;
        int carry = 0;
        for (const auto& cp : c.parts) {
            if (cp.color == merging_color) {
                carry += cp.value;
            } else {
                parts.push_back(carry + cp.value);
                carry = 0;
            }
        }
        return Composition(std::move(parts));
    };
    return CompositionPair(merge(2), merge(3));
}

inline KComposition pair_to_three(const CompositionPair& p) {
    if (p.first.empty()) throw domain_error("pair_to_three needs compositions of n >= 1");
    std::vector<int> a = p.first.parts;
    std::vector<int> b = p.second.parts;
    std::size_t ia = 0;
    std::size_t ib = 0;
    std::vector<ColoredPart> out;
    while (ia < a.size()) {
        if (a[ia] == b[ib]) {
            out.push_back({a[ia], 1});
            ++ia;
            ++ib;
        } else if (a[ia] < b[ib]) {
            out.push_back({a[ia], 3});
            b[ib] -= a[ia];
            ++ia;
        } else {
            out.push_back({b[ib], 2});
            a[ia] -= b[ib];
            ++ib;
        }
    }
    return KComposition(std::move(out), 3);
}

// ---- k-compositions <-> g-compositions, g = k + 1 ----

inline GComposition k_to_g(const KComposition& c) {
    std::vector<int> parts;
    for (const auto& cp : c.parts) {
        parts.push_back(cp.value);
        parts.insert(parts.end(), cp.color - 1, 0);
    }
    return GComposition(std::move(parts), c.k + 1);
}

inline KComposition g_to_k(const GComposition& g) {
    std::vector<ColoredPart> parts;
    for (int v : g.parts) {
        if (v > 0) {
            parts.push_back({v, 1});
        } else {
            ++parts.back().color;
        }
    }
    return KComposition(std::move(parts), g.g - 1);
}

// ---- marked peak <-> bridge with crossings ----

inline LatticePath marked_peak_to_bridge(const MarkedPath& m, bool start_with_up = false) {
    detail::require_dyck_steps(m.path, "marked_peak_to_bridge");
    const Steps& s = m.path.steps();
    if (!is_excursion(s)) throw domain_error("marked_peak_to_bridge needs a Dyck path");
    detail::require_peak(s, m.mark, "marked_peak_to_bridge");
    const int h = detail::peak_height(s, m.mark);
    const Steps L = detail::slice(s, 0, m.mark);
    const Steps R = detail::slice(s, m.mark, s.size());
    const auto ls = detail::last_passage_up(L, h);
    const auto rs = detail::first_passage_down(R, h, 0);  // rs[t] = R_{h-t}
    Steps out;
    for (int i = 1; i <= h; ++i) {
        Steps D{1};
        detail::append(D, ls[i - 1]);
        D.push_back(-1);
        detail::append(D, rs[h - i]);
        const bool flip = start_with_up ? (i % 2 == 0) : (i % 2 == 1);
        detail::append(out, flip ? mirror(D) : D);
    }
    return LatticePath(std::move(out));
}

inline MarkedPath bridge_to_marked_peak(const LatticePath& b, bool start_with_up = false) {
    detail::require_dyck_steps(b, "bridge_to_marked_peak");
    const Steps& s = b.steps();
    if (s.empty() || !is_bridge(s)) throw domain_error("bridge_to_marked_peak needs a non-empty bridge");
    if ((s[0] == 1) != start_with_up) {
        throw domain_error(start_with_up ? "bridge must start with u" : "bridge must start with d");
    }
    const auto blocks = detail::sign_blocks(s);
    const int h = static_cast<int>(blocks.size());
    std::vector<Steps> ls;
    std::vector<Steps> rs;
    for (const auto& blk : blocks) {
        const Steps D = blk[0] > 0 ? blk : mirror(blk);
        auto [P, R] = detail::first_arch(D);
        ls.push_back(std::move(P));
        rs.push_back(std::move(R));
    }
    Steps out;
    for (int i = 0; i < h; ++i) {
        detail::append(out, ls[i]);
        out.push_back(1);
    }
    const std::size_t mark = out.size();
    for (int i = h - 1; i >= 0; --i) {
        out.push_back(-1);
        detail::append(out, rs[i]);
    }
    return MarkedPath{LatticePath(std::move(out)), mark};
}

// ---- height-labeled peak <-> marked strict left-to-right maximum ----

inline MarkedPath labeled_peak_to_ltrmax(const LabeledPeakPath& x) {
    detail::require_dyck_steps(x.path, "labeled_peak_to_ltrmax");
    const Steps& s = x.path.steps();
    if (!is_excursion(s)) throw domain_error("labeled_peak_to_ltrmax needs a Dyck path");
    detail::require_peak(s, x.peak, "labeled_peak_to_ltrmax");
    const int h = detail::peak_height(s, x.peak);
    const int mu = x.label;
    if (mu < 1 || mu > h) throw domain_error("label must lie in 1..peak height");
    const auto ls = detail::last_passage_up(detail::slice(s, 0, x.peak), h);
    const auto rs = detail::first_passage_down(detail::slice(s, x.peak, s.size()), h, 0);
    auto R = [&](int i) -> const Steps& { return rs[h - i]; };

    Steps out;
    for (int i = 1; i <= mu; ++i) {
        detail::append(out, mirror(ls[i - 1]));
        out.push_back(1);
    }
    const std::size_t mark = out.size();
    for (int i = mu; i >= 1; --i) {
        out.push_back(-1);
        detail::append(out, R(i));
    }
    for (int j = mu + 1; j <= h; ++j) {
        Steps D{1};
        detail::append(D, ls[j - 1]);
        D.push_back(-1);
        detail::append(D, R(j));
        detail::append(out, (j - mu) % 2 == 1 ? mirror(D) : D);
    }
    return MarkedPath{LatticePath(std::move(out)), mark};
}

inline bool is_strict_ltr_max(const Steps& s, std::size_t pos) {
    for (const auto& [p, h] : stats(s).strict_ltr_maxima) {
        if (p == pos) return true;
    }
    return false;
}

inline LabeledPeakPath ltrmax_to_labeled_peak(const MarkedPath& m) {
    detail::require_dyck_steps(m.path, "ltrmax_to_labeled_peak");
    const Steps& s = m.path.steps();
    if (!is_bridge(s)) throw domain_error("ltrmax_to_labeled_peak needs a bridge");
    if (!is_strict_ltr_max(s, m.mark)) throw domain_error("mark is not a strict left-to-right maximum");
    const int mu = detail::peak_height(s, m.mark);
    std::vector<Steps> ls;
    for (auto& piece : detail::first_passage_up(detail::slice(s, 0, m.mark), mu)) {
        ls.push_back(mirror(piece));
    }
    const Steps suffix = detail::slice(s, m.mark, s.size());
    // pieces: R_mu, ..., R_2, then everything after first reaching 0
    auto pieces = detail::first_passage_down(suffix, mu, 0);
    std::vector<Steps> rs(mu + 1);
    for (int i = mu; i >= 2; --i) rs[i] = pieces[mu - i];
    const Steps rest = pieces.back();
    const std::size_t r1_len = detail::prefix_before_sign(rest, -1);
    rs[1] = detail::slice(rest, 0, r1_len);
    for (const auto& blk : detail::sign_blocks(detail::slice(rest, r1_len, rest.size()))) {
        const Steps D = blk[0] > 0 ? blk : mirror(blk);
        auto [P, R] = detail::first_arch(D);
        ls.push_back(std::move(P));
        rs.push_back(std::move(R));
    }
    const int h = static_cast<int>(ls.size());
    Steps out;
    for (int i = 1; i <= h; ++i) {
        detail::append(out, ls[i - 1]);
        out.push_back(1);
    }
    const std::size_t peak = out.size();
    for (int i = h; i >= 1; --i) {
        out.push_back(-1);
        detail::append(out, rs[i]);
    }
    return LabeledPeakPath{LatticePath(std::move(out)), peak, mu};
}

// ---- bridge <-> meander ----
// The bridge is D_0 B_1 ... B_m with D_0 its initial non-negative part and
// B_i maximal sign blocks. Each block, made positive, is u P d R; it becomes
// u P u R, so the meander ends at 2m.

inline LatticePath bridge_to_meander(const LatticePath& b) {
    detail::require_dyck_steps(b, "bridge_to_meander");
    const Steps& s = b.steps();
    if (!is_bridge(s)) throw domain_error("bridge_to_meander needs a bridge");
    const std::size_t d0 = detail::prefix_before_sign(s, -1);
    Steps out = detail::slice(s, 0, d0);
    for (const auto& blk : detail::sign_blocks(detail::slice(s, d0, s.size()))) {
        const Steps D = blk[0] > 0 ? blk : mirror(blk);
        auto [P, R] = detail::first_arch(D);
        out.push_back(1);
        detail::append(out, P);
        out.push_back(1);
        detail::append(out, R);
    }
    return LatticePath(std::move(out));
}

inline LatticePath meander_to_bridge(const LatticePath& m) {
    detail::require_dyck_steps(m, "meander_to_bridge");
    const Steps& s = m.steps();
    if (!is_meander(s)) throw domain_error("meander_to_bridge needs a meander");
    auto a = altitudes(s);
    const int top = a.back();
    if (top % 2 != 0) throw domain_error("meander_to_bridge needs an even final altitude");
    std::vector<std::size_t> cuts(top);
    std::vector<bool> seen(top, false);
    for (std::size_t i = s.size(); i-- > 0;) {
        if (a[i] < top && !seen[a[i]]) {
            seen[a[i]] = true;
            cuts[a[i]] = i;
        }
    }
    auto pieces = detail::split_at(s, cuts);
    Steps out = pieces[0];
    const int m_blocks = top / 2;
    for (int i = 1; i <= m_blocks; ++i) {
        Steps D{1};
        detail::append(D, pieces[2 * i - 1]);
        D.push_back(-1);
        detail::append(D, pieces[2 * i]);
        detail::append(out, i % 2 == 1 ? mirror(D) : D);
    }
    return LatticePath(std::move(out));
}

// ---- 2-colored bridges <-> walks ----

inline LatticePath two_colored_to_walk(const TwoColoredBridge& x) {
    detail::require_dyck_steps(x.first, "two_colored_to_walk");
    detail::require_dyck_steps(x.second, "two_colored_to_walk");
    const Steps& b1 = x.first.steps();
    const Steps& b2 = x.second.steps();
    if (!is_bridge(b1) || !is_bridge(b2)) throw domain_error("both components must be bridges");
    if (b1.empty() && b2.empty()) return LatticePath();
    if (b2.empty()) return bridge_to_meander(x.first);
    if (b1.empty()) return mirror(bridge_to_meander(x.second));
    int last_sign = 0;
    const auto alt = altitudes(b1);
    for (auto it = alt.rbegin(); it != alt.rend(); ++it) {
        if (*it != 0) {
            last_sign = *it > 0 ? 1 : -1;
            break;
        }
    }
    Steps out = b1;
    const Steps tail = bridge_to_meander(x.second).steps();
    detail::append(out, last_sign > 0 ? mirror(tail) : tail);
    return LatticePath(std::move(out));
}

inline TwoColoredBridge walk_to_two_colored(const LatticePath& w) {
    detail::require_dyck_steps(w, "walk_to_two_colored");
    const Steps& s = w.steps();
    if (s.size() % 2 != 0) throw domain_error("walk_to_two_colored needs an even-length walk");
    if (s.empty()) return {};
    auto a = altitudes(s);
    // vertex index of the zero inside the last sign change
    int sign = 0;
    std::size_t cut = 0;
    bool crossed = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const int sg = a[i] > 0 ? 1 : -1;
        if (sign != 0 && sg != sign) {
            crossed = true;
            cut = i - 1;
        }
        sign = sg;
    }
    if (!crossed) {
        if (*std::min_element(a.begin(), a.end()) >= 0) return {meander_to_bridge(w), LatticePath()};
        return {LatticePath(), meander_to_bridge(mirror(w))};
    }
    const Steps head = detail::slice(s, 0, cut);
    const Steps tail = detail::slice(s, cut, s.size());
    const Steps positive_tail = tail[0] > 0 ? tail : mirror(tail);
    return {LatticePath(head), meander_to_bridge(LatticePath(positive_tail))};
}

// ---- marked strict LTR maximum <-> 2-colored bridge ----

inline TwoColoredBridge ltrmax_to_two_colored(const MarkedPath& m) {
    detail::require_dyck_steps(m.path, "ltrmax_to_two_colored");
    const Steps& s = m.path.steps();
    if (!is_bridge(s)) throw domain_error("ltrmax_to_two_colored needs a bridge");
    if (!is_strict_ltr_max(s, m.mark)) throw domain_error("mark is not a strict left-to-right maximum");
    const int h = detail::peak_height(s, m.mark);
    auto a = altitudes(s);
    std::size_t r = m.mark;
    while (a[r] != 0) ++r;
    const Steps L = detail::slice(s, 0, m.mark);
    const Steps R = detail::slice(s, m.mark, r - 1);  // drop the final d
    const auto ls = detail::first_passage_up(L, h);     // ls[i-1] = L_i
    const auto rs = detail::first_passage_down(R, h, 1);  // rs[h-i] = R_i, i = 2..h
    Steps c1 = ls[0];
    for (int i = 2; i <= h; ++i) {
        Steps D{1};
        detail::append(D, mirror(ls[i - 1]));
        D.push_back(-1);
        detail::append(D, rs[h - i]);
        detail::append(c1, i % 2 == 0 ? D : mirror(D));
    }
    return {LatticePath(std::move(c1)), LatticePath(detail::slice(s, r, s.size()))};
}

inline MarkedPath two_colored_to_ltrmax(const TwoColoredBridge& x) {
    detail::require_dyck_steps(x.first, "two_colored_to_ltrmax");
    detail::require_dyck_steps(x.second, "two_colored_to_ltrmax");
    const Steps& c1 = x.first.steps();
    if (!is_bridge(c1) || !is_bridge(x.second.steps())) throw domain_error("both components must be bridges");
    const std::size_t l1 = detail::prefix_before_sign(c1, 1);
    std::vector<Steps> ls{detail::slice(c1, 0, l1)};
    std::vector<Steps> rs{Steps{}};
    for (const auto& blk : detail::sign_blocks(detail::slice(c1, l1, c1.size()))) {
        const Steps D = blk[0] > 0 ? blk : mirror(blk);
        auto [P, R] = detail::first_arch(D);
        ls.push_back(mirror(P));
        rs.push_back(std::move(R));
    }
    const int h = static_cast<int>(ls.size());
    Steps out;
    for (int i = 1; i <= h; ++i) {
        detail::append(out, ls[i - 1]);
        out.push_back(1);
    }
    const std::size_t mark = out.size();
    for (int i = h; i >= 2; --i) {
        out.push_back(-1);
        detail::append(out, rs[i - 1]);
    }
    out.push_back(-1);
    detail::append(out, x.second.steps());
    return MarkedPath{LatticePath(std::move(out)), mark};
}

// ---- height <= 2 Dyck paths <-> compositions ----

namespace detail {

inline std::vector<Steps> arches(const Steps& s) {
    std::vector<Steps> out;
    int alt = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        alt += s[i];
        if (alt == 0) {
            out.push_back(slice(s, start, i + 1));
            start = i + 1;
        }
    }
    return out;
}

// Arch u (ud)^j d -> j.
inline int arch_top_peaks(const Steps& arch) { return static_cast<int>(arch.size() / 2) - 1; }

inline Steps arch_with(int j) {
    Steps a{1};
    for (int i = 0; i < j; ++i) {
        a.push_back(1);
        a.push_back(-1);
    }
    a.push_back(-1);
    return a;
}

inline void require_height2(const LatticePath& p, const char* who) {
    require_dyck_steps(p, who);
    if (!is_excursion(p.steps())) throw domain_error(std::string(who) + ": needs a Dyck path");
    if (stats(p).max_height > 2) throw domain_error(std::string(who) + ": height exceeds 2");
}

}  // namespace detail

inline Composition height2_to_composition(const LatticePath& p) {
    detail::require_height2(p, "height2_to_composition");
    std::vector<int> parts;
    for (const auto& arch : detail::arches(p.steps())) parts.push_back(detail::arch_top_peaks(arch) + 1);
    return Composition(std::move(parts));
}

inline LatticePath composition_to_height2(const Composition& c) {
    Steps out;
    for (int v : c.parts) detail::append(out, detail::arch_with(v - 1));
    return LatticePath(std::move(out));
}

inline KComposition colored_height2_to_kcomposition(const ColoredReturnPath& x) {
    const Composition c = height2_to_composition(x.path);
    if (x.return_colors.size() + 1 != c.size()) {
        throw domain_error("need one color per return except the last");
    }
    std::vector<ColoredPart> parts;
    for (std::size_t i = 0; i < c.size(); ++i) {
        parts.push_back({c.parts[i], i + 1 < c.size() ? x.return_colors[i] : 1});
    }
    return KComposition(std::move(parts), x.k);
}

inline ColoredReturnPath kcomposition_to_colored_height2(const KComposition& c) {
    ColoredReturnPath out;
    out.k = c.k;
    std::vector<int> plain;
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        plain.push_back(c.parts[i].value);
        if (i + 1 < c.parts.size()) out.return_colors.push_back(c.parts[i].color);
    }
    out.path = composition_to_height2(Composition(std::move(plain)));
    return out;
}

// ---- height 2, r peaks per level <-> (r+1)-tuples of compositions ----

inline CompositionTuple height2_to_tuple(const LatticePath& p) {
    detail::require_height2(p, "height2_to_tuple");
    const auto prof = peak_profile(p);
    const int r = prof.count(1) ? prof.at(1) : 0;
    const int r2 = prof.count(2) ? prof.at(2) : 0;
    if (r != r2) throw domain_error("height2_to_tuple needs exactly r peaks at heights 1 and 2");
    CompositionTuple t;
    t.entries.emplace_back();
    for (const auto& arch : detail::arches(p.steps())) {
        if (arch.size() == 2) {
            t.entries.emplace_back();
        } else {
            t.entries.back().parts.push_back(detail::arch_top_peaks(arch));
        }
    }
    return t;
}

inline LatticePath tuple_to_height2(const CompositionTuple& t) {
    if (t.entries.empty()) throw domain_error("tuple must have at least one entry");
    const int r = static_cast<int>(t.entries.size()) - 1;
    if (t.total() != r) throw domain_error("grand total must equal r");
    Steps out;
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        if (i) detail::append(out, Steps{1, -1});
        for (int v : t.entries[i].parts) detail::append(out, detail::arch_with(v));
    }
    return LatticePath(std::move(out));
}

// ---- hills and pyramids <-> bridges ----

inline LatticePath hills_pyramids_to_bridge(const LatticePath& p) {
    detail::require_dyck_steps(p, "hills_pyramids_to_bridge");
    const Steps& s = p.steps();
    Steps out;
    int hills = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        if (i + 1 < s.size() && s[i] == 1 && s[i + 1] == -1) {
            out.push_back(1);
            ++hills;
            i += 2;
        } else if (i + 3 < s.size() && s[i] == 1 && s[i + 1] == 1 && s[i + 2] == -1 && s[i + 3] == -1) {
            out.push_back(-1);
            i += 4;
        } else {
            throw domain_error("path is not a sequence of hills and height-2 pyramids");
        }
    }
    if (2 * hills != static_cast<int>(out.size())) throw domain_error("numbers of hills and pyramids differ");
    return LatticePath(std::move(out));
}

inline LatticePath bridge_to_hills_pyramids(const LatticePath& b) {
    detail::require_dyck_steps(b, "bridge_to_hills_pyramids");
    if (!is_bridge(b.steps())) throw domain_error("bridge_to_hills_pyramids needs a bridge");
    Steps out;
    for (int st : b.steps()) detail::append(out, st > 0 ? Steps{1, -1} : Steps{1, 1, -1, -1});
    return LatticePath(std::move(out));
}

// ---- non-decreasing summits <-> non-decreasing valleys ----

namespace detail {

// s = d^k1 u^k1 d^k2 u^k2 ... (or the mirror when `flipped` is false).
inline bool is_pyramid_sequence(const Steps& s, bool flipped) {
    const int open = flipped ? -1 : 1;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t k = 0;
        while (i + k < s.size() && s[i + k] == open) ++k;
        if (k == 0) return false;
        for (std::size_t j = 0; j < k; ++j) {
            if (i + k + j >= s.size() || s[i + k + j] != -open) return false;
        }
        i += 2 * k;
        if (i < s.size() && s[i] != open) return false;
    }
    return true;
}

}  // namespace detail

inline LatticePath summits_to_valleys(const LatticePath& b) {
    detail::require_dyck_steps(b, "summits_to_valleys");
    const Steps& s = b.steps();
    if (!is_bridge(s)) throw domain_error("summits_to_valleys needs a bridge");
    if (!has_property(s, PropertyId::of(PropertyId::Kind::NonDecreasingSummits))) {
        throw domain_error("summits_to_valleys needs non-decreasing summits");
    }
    const int k = std::max(0, stats(s).max_height);
    const auto ups = detail::first_passage_up(s, k);  // B_0..B_{k-1}
    std::vector<Steps> bs(ups.begin(), ups.end());
    // what follows the last first-passage step is B_k d^k
    std::size_t consumed = 0;
    for (const auto& piece : bs) consumed += piece.size() + 1;
    Steps tail = detail::slice(s, consumed, s.size());
    if (tail.size() < static_cast<std::size_t>(k)) throw domain_error("malformed summit decomposition");
    for (std::size_t i = tail.size() - k; i < tail.size(); ++i) {
        if (tail[i] != -1) throw domain_error("malformed summit decomposition");
    }
    bs.push_back(detail::slice(tail, 0, tail.size() - k));
    Steps out;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        if (!detail::is_pyramid_sequence(bs[i], true)) throw domain_error("malformed summit decomposition");
        if (i) out.push_back(1);
        detail::append(out, mirror(bs[i]));
    }
    out.push_back(1);
    out.push_back(-1);
    out.insert(out.end(), k, -1);
    return LatticePath(std::move(out));
}

inline LatticePath valleys_to_summits(const LatticePath& p) {
    detail::require_dyck_steps(p, "valleys_to_summits");
    const Steps& s = p.steps();
    if (s.empty() || !is_excursion(s)) throw domain_error("valleys_to_summits needs a non-empty Dyck path");
    if (!has_property(s, PropertyId::of(PropertyId::Kind::NonDecreasingValleys))) {
        throw domain_error("valleys_to_summits needs non-decreasing valleys");
    }
    std::size_t run = 0;
    while (run < s.size() && s[s.size() - 1 - run] == -1) ++run;
    const int k = static_cast<int>(run) - 1;
    const Steps prefix = detail::slice(s, 0, s.size() - run - 1);
    auto ds = k > 0 ? detail::last_passage_up(prefix, k) : std::vector<Steps>{};
    std::size_t consumed = 0;
    for (const auto& piece : ds) consumed += piece.size() + 1;
    ds.push_back(detail::slice(prefix, consumed, prefix.size()));
    Steps out;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (!detail::is_pyramid_sequence(ds[i], false)) throw domain_error("malformed valley decomposition");
        if (i) out.push_back(1);
        detail::append(out, mirror(ds[i]));
    }
    out.insert(out.end(), k, -1);
    return LatticePath(std::move(out));
}

// ---- even-first compositions <-> closed triangle walks ----

using TriangleWalk = std::vector<int>;  // vertex sequence, starts and ends at 1

inline TriangleWalk word_to_triangle_walk(const TriangleWord& w) {
    TriangleWalk walk{1};
    for (Letter l : w.letters) {
        int v = walk.back();
        if (l == Letter::One) {
            if (v == 1) throw domain_error("letter 1 cannot leave vertex 1");
            walk.push_back(v == 2 ? 3 : 2);
            continue;
        }
        if (v != 1) walk.push_back(1);
        walk.push_back(l == Letter::Two ? 2 : 3);
    }
    if (walk.back() != 1) walk.push_back(1);
    return walk;
}

inline TriangleWord triangle_walk_to_word(const TriangleWalk& walk) {
    if (walk.size() < 2 || walk.front() != 1 || walk.back() != 1) {
        throw domain_error("triangle walk must start and end at vertex 1");
    }
    TriangleWord w;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        const int a = walk[i];
        const int b = walk[i + 1];
        if (a < 1 || a > 3 || b < 1 || b > 3 || a == b) throw domain_error("not a walk on the triangle");
        if (a == 1) {
            w.letters.push_back(b == 2 ? Letter::Two : Letter::TwoBar);
        } else if (b != 1) {
            w.letters.push_back(Letter::One);
        }
    }
    return w;
}

inline TriangleWalk even_first_to_triangle_walk(const Composition& c) {
    return word_to_triangle_walk(word_from_even_first(c));
}

inline Composition triangle_walk_to_even_first(const TriangleWalk& walk) {
    if (walk.size() < 2 || walk[1] != 2) throw domain_error("triangle walk must start with the step 1 -> 2");
    return word_to_even_first(triangle_walk_to_word(walk));
}

}  // namespace pathbij

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pathbij/bigint.hpp"
#include "pathbij/error.hpp"

namespace pathbij {

struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {
        for (int v : parts) {
            if (v < 1) throw domain_error("composition parts must be positive");
        }
    }
    Composition(std::initializer_list<int> p) : Composition(std::vector<int>(p)) {}

    int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    std::size_t size() const { return parts.size(); }
    bool empty() const { return parts.empty(); }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;
};

struct CompositionPair {
    Composition first;
    Composition second;

    CompositionPair() = default;
    CompositionPair(Composition a, Composition b) : first(std::move(a)), second(std::move(b)) {
        if (first.n() != second.n()) throw domain_error("pair components have different sums");
    }

    int n() const { return first.n(); }

    friend bool operator==(const CompositionPair&, const CompositionPair&) = default;
    friend auto operator<=>(const CompositionPair&, const CompositionPair&) = default;
};

struct ColoredPart {
    int value = 1;
    int color = 1;

    friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
    friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

struct KComposition {
    std::vector<ColoredPart> parts;
    int k = 1;

    KComposition() = default;
    KComposition(std::vector<ColoredPart> p, int k_) : parts(std::move(p)), k(k_) {
        if (k < 1) throw domain_error("k-composition needs k >= 1");
        if (parts.empty()) throw domain_error("k-composition must have at least one part");
        for (const auto& cp : parts) {
            if (cp.value < 1) throw domain_error("k-composition parts must be positive");
            if (cp.color < 1 || cp.color > k) {
                throw domain_error("color " + std::to_string(cp.color) + " outside 1.." + std::to_string(k));
            }
        }
        if (parts.back().color != 1) throw domain_error("last part of a k-composition must have color 1");
    }

    int n() const {
        int s = 0;
        for (const auto& cp : parts) s += cp.value;
        return s;
    }

    friend bool operator==(const KComposition&, const KComposition&) = default;
    friend auto operator<=>(const KComposition&, const KComposition&) = default;
};

// Zeros are stored in place. A zero may only follow a positive part, at most
// g-2 in a row, and the sequence neither starts nor ends with a zero.
struct GComposition {
    std::vector<int> parts;
    int g = 2;

    GComposition() = default;
    GComposition(std::vector<int> p, int g_) : parts(std::move(p)), g(g_) {
        if (g < 2) throw domain_error("g-composition needs g >= 2");
        if (parts.empty()) throw domain_error("g-composition must have a positive part");
        if (parts.front() <= 0 || parts.back() <= 0) {
            throw domain_error("g-composition must start and end with a positive part");
        }
        int run = 0;
        for (int v : parts) {
            if (v < 0) throw domain_error("g-composition parts must be non-negative");
            run = v == 0 ? run + 1 : 0;
            if (run > g - 2) {
                throw domain_error("zero run longer than g-2 = " + std::to_string(g - 2));
            }
        }
    }

    int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    friend bool operator==(const GComposition&, const GComposition&) = default;
    friend auto operator<=>(const GComposition&, const GComposition&) = default;
};

struct CompositionTuple {
    std::vector<Composition> entries;

    int total() const {
        int s = 0;
        for (const auto& c : entries) s += c.n();
        return s;
    }

    friend bool operator==(const CompositionTuple&, const CompositionTuple&) = default;
    friend auto operator<=>(const CompositionTuple&, const CompositionTuple&) = default;
};

enum class Letter { One, Two, TwoBar };

struct TriangleWord {
    std::vector<Letter> letters;

    int weight() const {
        int w = 0;
        for (Letter l : letters) w += l == Letter::One ? 1 : 2;
        return w;
    }

    friend bool operator==(const TriangleWord&, const TriangleWord&) = default;
};

struct CompositionStats {
    std::size_t num_parts = 0;
    int first_part = 0;
    int last_part = 0;
    BigInt norm = 1;

    int first_part_residue(int m) const {
        if (m < 1) throw domain_error("modulus must be positive");
        return first_part % m;
    }
    bool first_odd() const { return first_part % 2 == 1; }
};

inline CompositionStats composition_stats(const Composition& c) {
    if (c.empty()) throw domain_error("composition_stats of the empty composition");
    CompositionStats st;
    st.num_parts = c.size();
    st.first_part = c.parts.front();
    st.last_part = c.parts.back();
    for (int v : c.parts) st.norm *= v;
    return st;
}

inline bool is_irreducible_pair(const CompositionPair& p) {
    const auto& a = p.first.parts;
    const auto& b = p.second.parts;
    if (a.size() != b.size() || a.empty()) return false;
    int sa = 0;
    int sb = 0;
    for (std::size_t j = 0; j + 1 < a.size(); ++j) {
        sa += a[j];
        sb += b[j];
        if (sa == sb) return false;
    }
    return true;
}

inline bool has_equal_first_last(const Composition& c) {
    return c.size() >= 2 && c.parts.front() == c.parts.back();
}

inline TriangleWord word_from_even_first(const Composition& c) {
    if (c.empty() || c.parts.front() % 2 != 0) {
        throw domain_error("word_from_even_first needs an even first part");
    }
    TriangleWord w;
    for (int v : c.parts) {
        int bars = 0;
        if (v % 2 == 0) {
            w.letters.push_back(Letter::Two);
            bars = v / 2 - 1;
        } else {
            w.letters.push_back(Letter::One);
            bars = v / 2;
        }
        w.letters.insert(w.letters.end(), bars, Letter::TwoBar);
    }
    return w;
}

inline Composition word_to_even_first(const TriangleWord& w) {
    if (w.letters.empty() || w.letters.front() != Letter::Two) {
        throw domain_error("triangle word must begin with 2");
    }
    std::vector<int> parts;
    for (Letter l : w.letters) {
        if (l == Letter::TwoBar) {
            parts.back() += 2;
        } else {
            parts.push_back(l == Letter::One ? 1 : 2);
        }
    }
    return Composition(std::move(parts));
}

// Text forms: "2,1,3", "((2,1,3),(3,2,1))", "6_1+1_2+4_3+2_1", "2,0,0,3,1".

namespace detail {

inline std::string strip(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

inline int parse_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw domain_error("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw domain_error("not an integer: '" + s + "'");
    return v;
}

inline std::vector<int> parse_int_list(std::string_view text) {
    std::string s = strip(text);
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
    if (s.back() == ',') throw domain_error("trailing comma");
    return out;
}

inline std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace detail

inline Composition parse_composition(std::string_view text) {
    return Composition(detail::parse_int_list(text));
}

inline std::string to_string(const Composition& c) { return detail::join(c.parts); }

inline CompositionPair parse_pair(std::string_view text) {
    std::string s = detail::strip(text);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')' && s[1] == '(') s = s.substr(1, s.size() - 2);
    // split at the top-level comma
    int depth = 0;
    std::size_t cut = std::string::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == ',' && depth == 0) {
            cut = i;
            break;
        }
    }
    if (cut == std::string::npos) throw domain_error("pair text must look like ((a,b),(c,d))");
    return CompositionPair(parse_composition(s.substr(0, cut)), parse_composition(s.substr(cut + 1)));
}

inline std::string to_string(const CompositionPair& p) {
    return "((" + to_string(p.first) + "),(" + to_string(p.second) + "))";
}

inline KComposition parse_kcomposition(std::string_view text, int k) {
    std::string s = detail::strip(text);
    std::vector<ColoredPart> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, '+')) {
        auto us = item.find('_');
        if (us == std::string::npos) {
            parts.push_back({detail::parse_int(item), 1});
        } else {
            parts.push_back({detail::parse_int(item.substr(0, us)), detail::parse_int(item.substr(us + 1))});
        }
    }
    if (k <= 0) {
        k = 1;
        for (const auto& cp : parts) k = std::max(k, cp.color);
    }
    return KComposition(std::move(parts), k);
}

inline std::string to_string(const KComposition& c) {
    std::string out;
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(c.parts[i].value) + "_" + std::to_string(c.parts[i].color);
    }
    return out;
}

inline std::string to_string(const GComposition& c) { return detail::join(c.parts); }

inline std::string to_string(const TriangleWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ',';
        out += w.letters[i] == Letter::One ? "1" : w.letters[i] == Letter::Two ? "2" : "2b";
    }
    return out;
}

inline TriangleWord parse_triangle_word(std::string_view text) {
    TriangleWord w;
    std::string s = detail::strip(text);
    if (s.empty()) return w;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "1") {
            w.letters.push_back(Letter::One);
        } else if (item == "2") {
            w.letters.push_back(Letter::Two);
        } else if (item == "2b" || item == "-2") {
            w.letters.push_back(Letter::TwoBar);
        } else {
            throw domain_error("unknown triangle letter '" + item + "'");
        }
    }
    return w;
}

inline std::string to_string(const CompositionTuple& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        if (i) out += ',';
        out += "(" + to_string(t.entries[i]) + ")";
    }
    return out + ")";
}

}  // namespace pathbij

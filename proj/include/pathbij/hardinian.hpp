#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pathbij/bigint.hpp"
#include "pathbij/compositions.hpp"
#include "pathbij/error.hpp"

namespace pathbij {

// Rows of an n x k grid. Accessors are 1-based, storage is 0-based.
struct HardinianArray {
    std::vector<std::vector<int>> grid;
    int r = 1;

    int rows() const { return static_cast<int>(grid.size()); }
    int cols() const { return grid.empty() ? 0 : static_cast<int>(grid.front().size()); }
    int at(int i, int j) const { return grid[i - 1][j - 1]; }
    int& at(int i, int j) { return grid[i - 1][j - 1]; }

    friend bool operator==(const HardinianArray&, const HardinianArray&) = default;
    friend auto operator<=>(const HardinianArray&, const HardinianArray&) = default;
};

struct HookTriangle {
    std::vector<std::vector<int>> rows;

    friend bool operator==(const HookTriangle&, const HookTriangle&) = default;
};

namespace detail {

inline bool step_ok(int value, int neighbor) { return value == neighbor || value == neighbor + 1; }

inline bool cell_ok(const HardinianArray& a, int i, int j) {
    const int v = a.at(i, j);
    if (i > 1 && !step_ok(v, a.at(i - 1, j))) return false;
    if (j > 1 && !step_ok(v, a.at(i, j - 1))) return false;
    if (i > 1 && j > 1 && !step_ok(v, a.at(i - 1, j - 1))) return false;
    return std::abs(v - (std::max(i, j) - 1)) <= a.r;
}

inline bool rectangular(const HardinianArray& a) {
    if (a.grid.empty()) return false;
    const auto k = a.grid.front().size();
    if (k == 0) return false;
    return std::all_of(a.grid.begin(), a.grid.end(), [&](const auto& row) { return row.size() == k; });
}

}  // namespace detail

inline bool validate(const HardinianArray& a) {
    if (!detail::rectangular(a) || a.r < 1) return false;
    const int n = a.rows();
    const int k = a.cols();
    if (a.at(1, 1) != 0) return false;
    if (a.at(n, k) != std::max(n, k) - a.r - 1) return false;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= k; ++j) {
            if (!detail::cell_ok(a, i, j)) return false;
        }
    }
    return true;
}

// Row h of the result is a(h,1..h-1), a(h,h), a(h-1,h), ..., a(1,h).
inline HookTriangle straighten(const HardinianArray& a) {
    if (!detail::rectangular(a) || a.rows() != a.cols()) {
        throw domain_error("straighten needs a square array");
    }
    HookTriangle t;
    const int n = a.rows();
    for (int h = 1; h <= n; ++h) {
        std::vector<int> row;
        for (int j = 1; j < h; ++j) row.push_back(a.at(h, j));
        row.push_back(a.at(h, h));
        for (int i = h - 1; i >= 1; --i) row.push_back(a.at(i, h));
        t.rows.push_back(std::move(row));
    }
    return t;
}

// Every valid n x k array with r = 1, row-major order, lexicographic.
inline void generate_hardinian(int n, int k, const std::function<void(const HardinianArray&)>& visit) {
    if (n < 1 || k < 1) throw domain_error("array dimensions must be positive");
    HardinianArray a;
    a.r = 1;
    a.grid.assign(n, std::vector<int>(k, 0));
    const int corner = std::max(n, k) - 2;
    std::function<void(int)> fill = [&](int cell) {
        if (cell == n * k) {
            visit(a);
            return;
        }
        const int i = cell / k + 1;
        const int j = cell % k + 1;
        const int base = std::max(i, j) - 1;
        for (int v = std::max(0, base - 1); v <= base + 1; ++v) {
            if (i == 1 && j == 1 && v != 0) continue;
            if (i == n && j == k && v != corner) continue;
            a.at(i, j) = v;
            if (detail::cell_ok(a, i, j)) fill(cell + 1);
        }
    };
    fill(0);
}

inline std::vector<HardinianArray> all_hardinian(int n, int k) {
    std::vector<HardinianArray> out;
    generate_hardinian(n, k, [&](const HardinianArray& a) { out.push_back(a); });
    return out;
}

inline BigInt h1_count(int n, int k) {
    if (k < 1 || n < 1) throw domain_error("h1_count needs n, k >= 1");
    if (k > n) throw domain_error("h1_count needs n >= k");
    const BigInt p = ipow(BigInt(4), static_cast<unsigned>(k - 1));
    return p * (n - k) + exact_div(p - 1, 3);
}

namespace detail {

// Side triangle accessor: entry of row h at distance d from the centre.
// Left side is a(h, h-d), right side a(h-d, h).
inline int side_entry(const HardinianArray& a, bool right, int h, int d) {
    return right ? a.at(h - d, h) : a.at(h, h - d);
}

inline std::vector<int> walk_side(const HardinianArray& a, bool right, int s) {
    std::vector<int> counts;  // bottom to top
    int h = s - 1;
    int d = 1;
    int visited = 0;
    while (true) {
        ++visited;
        if (d >= h) {  // left the triangle: the exit entry is counted
            counts.push_back(visited);
            break;
        }
        const int v = side_entry(a, right, h, d);
        if (v == h - 1) {
            ++d;
        } else if (v == h - 2) {
            counts.push_back(visited);
            visited = 0;
            --h;
        } else {
            throw domain_error("array entry outside the admissible range of its row");
        }
    }
    return counts;
}

// Number of high entries next to the centre in rows 2..s-1 (index = row).
inline std::vector<int> side_thresholds(const std::vector<int>& c, int s) {
    std::vector<int> t(s, 0);
    for (int h = 2; h < s; ++h) t[h] = h - 1;
    int sum = 0;
    for (std::size_t j = 1; j <= c.size(); ++j) {
        sum += c[j - 1];
        const int h = s - static_cast<int>(j);
        if (h >= 2) t[h] = sum - static_cast<int>(j);
    }
    return t;
}

}  // namespace detail

inline CompositionPair array_to_pair(const HardinianArray& a) {
    if (a.r != 1 || a.rows() != a.cols() || !validate(a)) {
        throw domain_error("array_to_pair needs a valid square array with r = 1");
    }
    const int n = a.rows();
    if (n < 2) throw domain_error("array_to_pair needs n >= 2");
    int s = 2;
    while (a.at(s, s) != a.at(s - 1, s - 1)) ++s;
    std::vector<int> first{n - s + 1};
    std::vector<int> second{n - s + 1};
    auto left = detail::walk_side(a, false, s);
    auto right = detail::walk_side(a, true, s);
    first.insert(first.end(), left.begin(), left.end());
    second.insert(second.end(), right.begin(), right.end());
    return CompositionPair(Composition(std::move(first)), Composition(std::move(second)));
}

inline HardinianArray pair_to_array(const CompositionPair& p) {
    const auto& a = p.first.parts;
    const auto& b = p.second.parts;
    if (a.size() < 2 || b.size() < 2) throw domain_error("pair_to_array needs at least two parts on each side");
    if (a.front() != b.front()) throw domain_error("pair_to_array needs equal first parts");
    const int n = p.n();
    const int s = n - a.front() + 1;
    const auto tl = detail::side_thresholds(std::vector<int>(a.begin() + 1, a.end()), s);
    const auto tr = detail::side_thresholds(std::vector<int>(b.begin() + 1, b.end()), s);

    HardinianArray out;
    out.r = 1;
    out.grid.assign(n, std::vector<int>(n, 0));
    for (int h = 1; h <= n; ++h) {
        if (h >= s) {
            for (int j = 1; j <= h; ++j) {
                out.at(h, j) = h - 2;
                out.at(j, h) = h - 2;
            }
            continue;
        }
        out.at(h, h) = h - 1;
        for (int d = 1; d < h; ++d) {
            out.at(h, h - d) = d <= tl[h] ? h - 1 : h - 2;
            out.at(h - d, h) = d <= tr[h] ? h - 1 : h - 2;
        }
    }
    if (!validate(out)) throw domain_error("pair does not describe a valid array");
    return out;
}

}  // namespace pathbij

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pathbij/bigint.hpp"
#include "pathbij/error.hpp"
#include "pathbij/paths.hpp"
#include "pathbij/series.hpp"

namespace pathbij {

// Polynomial in z and u, keyed by (z degree, u degree).
struct BivariatePoly {
    std::map<std::pair<int, int>, BigInt> terms;

    void add(int a, int k, const BigInt& c) {
        if (c == 0) return;
        auto& slot = terms[{a, k}];
        slot += c;
        if (slot == 0) terms.erase({a, k});
    }
    BigInt coeff(int a, int k) const {
        auto it = terms.find({a, k});
        return it == terms.end() ? BigInt(0) : it->second;
    }
    BigInt z_coeff_sum(int a) const {
        BigInt s = 0;
        for (const auto& [key, c] : terms) {
            if (key.first == a) s += c;
        }
        return s;
    }

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;
};

// L_r(z^a u^k) = sum_{i<k} C(r+i+1, r) C(k-1, i) z^{a+r+i+1} u^{r+i+1}.
inline BivariatePoly lift_exact(const BivariatePoly& p, int r) {
    if (r < 0) throw domain_error("lift needs r >= 0");
    BivariatePoly out;
    for (const auto& [key, c] : p.terms) {
        const auto [a, k] = key;
        for (int i = 0; i < k; ++i) {
            out.add(a + r + i + 1, r + i + 1, c * binomial(r + i + 1, r) * binomial(k - 1, i));
        }
    }
    return out;
}

namespace detail {

// Fixpoint F = base + sum_{j in lifts} L_j(F), truncated at z degree n.
// Every lift raises the z degree, so one sweep in increasing degree suffices.
inline std::vector<BigInt> lift_fixpoint(int n, const std::vector<int>& base_degrees, const std::vector<int>& lifts) {
    std::vector<std::vector<BigInt>> f(n + 1, std::vector<BigInt>(n + 2, 0));
    for (int j : base_degrees) {
        if (j <= n) f[j][j] += 1;
    }
    for (int a = 0; a <= n; ++a) {
        for (int k = 1; k <= n + 1; ++k) {
            const BigInt c = f[a][k];
            if (c == 0) continue;
            for (int r : lifts) {
                for (int i = 0; i < k; ++i) {
                    const int na = a + r + i + 1;
                    if (na > n) break;
                    f[na][r + i + 1] += c * binomial(r + i + 1, r) * binomial(k - 1, i);
                }
            }
        }
    }
    std::vector<BigInt> out(n + 1, 0);
    for (int a = 0; a <= n; ++a) {
        for (const auto& c : f[a]) out[a] += c;
    }
    return out;
}

}  // namespace detail

// D_r(0..n): Dyck paths with exactly r peaks at every reached height.
inline std::vector<BigInt> exact_per_level_table(int n, int r) {
    if (n < 0 || r < 1) throw domain_error("D_r needs n >= 0, r >= 1");
    auto t = detail::lift_fixpoint(n, {r}, {r});
    t[0] = 1;
    return t;
}

inline BigInt count_exact_per_level(int n, int r) { return exact_per_level_table(n, r).at(n); }

// E_r(0..n): Dyck paths with at most r peaks at every height.
inline std::vector<BigInt> atmost_per_level_table(int n, int r) {
    if (n < 0 || r < 1) throw domain_error("E_r needs n >= 0, r >= 1");
    std::vector<int> base;
    std::vector<int> lifts;
    for (int j = 1; j <= r; ++j) base.push_back(j);
    for (int j = 0; j <= r; ++j) lifts.push_back(j);
    auto t = detail::lift_fixpoint(n, base, lifts);
    t[0] = 1;
    return t;
}

inline BigInt count_atmost_per_level(int n, int r) { return atmost_per_level_table(n, r).at(n); }

// Sum of coefficients of L_r((zu)^r).
inline BigInt lift_of_base_total(int r) {
    BivariatePoly base;
    base.add(r, r, 1);
    BigInt s = 0;
    for (const auto& [key, c] : lift_exact(base, r).terms) s += c;
    return s;
}

// ---- brute-force peak classes ----

namespace detail {

// Depth-first walk over Dyck paths of semilength n with a pruning callback
// on each completed peak.
inline void dyck_dfs(int n, const std::function<bool(int)>& on_peak, const std::function<void(const Steps&)>& leaf) {
    Steps s;
    s.reserve(2 * n);
    std::function<void(int, int)> rec = [&](int ups, int alt) {
        if (static_cast<int>(s.size()) == 2 * n) {
            leaf(s);
            return;
        }
        if (alt > 0) {
            const bool peak = !s.empty() && s.back() == 1;
            if (!peak || on_peak(alt)) {
                s.push_back(-1);
                rec(ups, alt - 1);
                s.pop_back();
                if (peak) on_peak(-alt);  // undo
            }
        }
        if (ups < n) {
            s.push_back(1);
            rec(ups + 1, alt + 1);
            s.pop_back();
        }
    };
    rec(0, 0);
}

}  // namespace detail

// Dyck paths of semilength n whose peak heights are pairwise distinct.
inline BigInt count_distinct_heights(int n) {
    if (n < 1) throw domain_error("count_distinct_heights needs n >= 1");
    std::vector<bool> used(n + 2, false);
    BigInt count = 0;
    detail::dyck_dfs(
        n,
        [&](int h) {
            if (h < 0) {
                used[-h] = false;
                return true;
            }
            if (used[h]) return false;
            used[h] = true;
            return true;
        },
        [&](const Steps&) { ++count; });
    return count;
}

// Reversal-symmetric paths among the above; their number has the parity of the total.
inline BigInt count_distinct_heights_symmetric(int n) {
    if (n < 1) throw domain_error("count_distinct_heights_symmetric needs n >= 1");
    std::vector<bool> used(n + 2, false);
    BigInt count = 0;
    detail::dyck_dfs(
        n,
        [&](int h) {
            if (h < 0) {
                used[-h] = false;
                return true;
            }
            if (used[h]) return false;
            used[h] = true;
            return true;
        },
        [&](const Steps& s) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] != -s[s.size() - 1 - i]) return;
            }
            ++count;
        });
    return count;
}

inline BigInt distinct_profile_formula(int n) {
    if (n < 1) throw domain_error("distinct_profile_formula needs n >= 1");
    auto p = partition_numbers(n);
    BigInt s = ipow(BigInt(2), static_cast<unsigned>(n));
    for (int k = 0; k < n; ++k) s -= p[k];
    return s;
}

inline BigInt distinct_profile_count(int n) {
    if (n < 1) throw domain_error("distinct_profile_count needs n >= 1");
    std::set<std::vector<int>> seen;
    detail::dyck_dfs(n, [](int) { return true; }, [&](const Steps& s) {
        std::vector<int> heights;
        for (const auto& [h, c] : peak_profile(s)) heights.insert(heights.end(), c, h);
        seen.insert(std::move(heights));
    });
    return seen.size();
}

// ---- Narayana parity ----

struct NarayanaViolation {
    int e = 0;
    int n = 0;
    int k = 0;
    int i = 0;  // 1 for the paired congruence, else the vanishing index
};

inline std::vector<NarayanaViolation> narayana_congruence_check(int e, int n_max) {
    if (e < 2) throw domain_error("narayana_congruence_check needs e >= 2");
    std::vector<NarayanaViolation> out;
    const int q = 1 << e;
    for (int n = 0; n <= n_max; ++n) {
        const int N = q * n + 2;
        for (int k = 0; q * k + 1 <= N; ++k) {
            auto nar = [&](int r) { return r <= N ? narayana(N, r) : BigInt(0); };
            if ((nar(q * k + 1) - nar(q * k + 2)) % 2 != 0) out.push_back({e, n, k, 1});
            for (int i = 3; i <= q; ++i) {
                if (q * k + i > N) break;
                if (nar(q * k + i) % 2 != 0) out.push_back({e, n, k, i});
            }
        }
    }
    return out;
}

// ---- cyclic orbits and step counts ----

struct OrbitDecomposition {
    LatticePath primitive;
    int multiplicity = 1;

    friend bool operator==(const OrbitDecomposition&, const OrbitDecomposition&) = default;
};

inline OrbitDecomposition orbit_decompose(const LatticePath& b) {
    const Steps& s = b.steps();
    if (!is_bridge(s)) throw domain_error("orbit_decompose needs a bridge");
    const std::size_t n = s.size();
    if (n == 0) return {b, 1};
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) periodic = s[i] == s[i - d];
        if (periodic) {
            return {LatticePath(Steps(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(d)), b.stepset()),
                    static_cast<int>(n / d)};
        }
    }
    return {b, 1};
}

struct StepDivisibility {
    BigInt count;  // b_n(s)
    bool mod_n = false;
    bool mod_2 = false;     // meaningful for symmetric step sets
    bool mod_2n = false;    // meaningful for symmetric step sets at odd n
    bool symmetric = false;
};

// Total occurrences of step s over all bridges of length n, by brute force
// over |S|^n words.
inline BigInt bridge_step_total(const StepSet& S, int s, int n) {
    if (!S.contains(s)) throw domain_error("step is not in the step set");
    if (n < 0) throw domain_error("length must be non-negative");
    const std::size_t m = S.steps.size();
    std::vector<std::size_t> idx(n, 0);
    BigInt total = 0;
    while (true) {
        int alt = 0;
        int hits = 0;
        for (int i = 0; i < n; ++i) {
            const int st = S.steps[idx[i]];
            alt += st;
            hits += st == s;
        }
        if (alt == 0) total += hits;
        int pos = n - 1;
        while (pos >= 0 && ++idx[pos] == m) idx[pos--] = 0;
        if (pos < 0) break;
    }
    return total;
}

inline StepDivisibility step_count_divisibility(const StepSet& S, int s, int n) {
    if (n < 1) throw domain_error("step_count_divisibility needs n >= 1");
    StepDivisibility out;
    out.count = bridge_step_total(S, s, n);
    out.symmetric = S.symmetric();
    out.mod_n = out.count % n == 0;
    out.mod_2 = out.count % 2 == 0;
    out.mod_2n = out.count % (2 * n) == 0;
    return out;
}

}  // namespace pathbij

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pathbij/bigint.hpp"
#include "pathbij/error.hpp"

namespace pathbij {

struct SeriesTable {
    std::vector<BigInt> coeffs;
    std::string meta;

    const BigInt& operator[](std::size_t i) const { return coeffs.at(i); }
    std::size_t size() const { return coeffs.size(); }
};

using IntPoly = std::vector<BigInt>;
using IntMatrix = std::vector<std::vector<BigInt>>;

// ---- named numbers ----

inline BigInt catalan(int n) {
    if (n < 0) throw domain_error("catalan needs n >= 0");
    return exact_div(binomial(2 * n, n), n + 1);
}

inline BigInt narayana(int n, int r) {
    if (n < 1 || r < 1 || r > n) throw domain_error("narayana needs 1 <= r <= n");
    return exact_div(binomial(n, r) * binomial(n, r - 1), n);
}

inline BigInt central_binomial(int n) {
    if (n < 0) throw domain_error("central_binomial needs n >= 0");
    return binomial(2 * n, n);
}

inline BigInt fibonacci(int n) {
    if (n < 0) throw domain_error("fibonacci needs n >= 0");
    BigInt a = 0;
    BigInt b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

// Little Schroeder paths of semilength n with i up steps.
inline BigInt schroeder_little_refined(int n, int i) {
    if (n < 0 || i < 0 || i > n) throw domain_error("s(n,i) needs 0 <= i <= n");
    if (n == 0) return 1;
    return exact_div(binomial(n + i, i) * binomial(n - 1, i - 1), n + 1);
}

inline BigInt schroeder_large_refined(int n, int i) {
    if (n < 0 || i < 0 || i > n) throw domain_error("l(n,i) needs 0 <= i <= n");
    return exact_div(binomial(n + i, i) * binomial(n, i), i + 1);
}

inline BigInt schroeder_little(int n) {
    BigInt s = 0;
    for (int i = 0; i <= n; ++i) s += schroeder_little_refined(n, i);
    return s;
}

inline BigInt jacobsthal(int n) {
    if (n < 0) throw domain_error("jacobsthal needs n >= 0");
    const BigInt p = ipow(BigInt(2), static_cast<unsigned>(n));
    return exact_div(n % 2 == 0 ? p - 1 : p + 1, 3);
}

// p(0..n) by Euler's pentagonal recurrence.
inline std::vector<BigInt> partition_numbers(int n) {
    std::vector<BigInt> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const int sign = k % 2 == 1 ? 1 : -1;
            p[m] += sign * p[m - g1];
            if (g2 <= m) p[m] += sign * p[m - g2];
        }
    }
    return p;
}

inline BigInt partition_p(int k) {
    if (k < 0) throw domain_error("partition_p needs k >= 0");
    return partition_numbers(k).back();
}

inline BigInt combinatorial_number(const std::string& kind, const std::vector<int>& params) {
    auto need = [&](std::size_t count) {
        if (params.size() != count) {
            throw domain_error(kind + " takes " + std::to_string(count) + " parameter(s)");
        }
    };
    if (kind == "catalan") { need(1); return catalan(params[0]); }
    if (kind == "narayana") { need(2); return narayana(params[0], params[1]); }
    if (kind == "central_binomial") { need(1); return central_binomial(params[0]); }
    if (kind == "binomial") { need(2); return binomial(params[0], params[1]); }
    if (kind == "fibonacci") { need(1); return fibonacci(params[0]); }
    if (kind == "schroeder_little_refined") { need(2); return schroeder_little_refined(params[0], params[1]); }
    if (kind == "schroeder_large_refined") { need(2); return schroeder_large_refined(params[0], params[1]); }
    if (kind == "partition_p") { need(1); return partition_p(params[0]); }
    if (kind == "jacobsthal") { need(1); return jacobsthal(params[0]); }
    throw domain_error("unknown number kind '" + kind + "'");
}

// ---- truncated power series ----

inline IntPoly series_mul(const IntPoly& a, const IntPoly& b, std::size_t len) {
    IntPoly out(len, 0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// a / b to `len` terms; every step must divide exactly by b[0].
inline IntPoly series_div(const IntPoly& a, const IntPoly& b, std::size_t len) {
    if (b.empty() || b[0] == 0) throw domain_error("series division needs a nonzero constant term");
    IntPoly q(len, 0);
    for (std::size_t n = 0; n < len; ++n) {
        BigInt acc = n < a.size() ? a[n] : BigInt(0);
        for (std::size_t j = 1; j <= n && j < b.size(); ++j) acc -= b[j] * q[n - j];
        q[n] = exact_div(acc, b[0]);
    }
    return q;
}

inline SeriesTable rational_series(const IntPoly& numerator, const IntPoly& denominator, int N) {
    if (N < 0) throw domain_error("rational_series needs N >= 0");
    if (denominator.empty() || denominator[0] == 0) {
        throw domain_error("denominator must have a nonzero constant term");
    }
    return {series_div(numerator, denominator, static_cast<std::size_t>(N) + 1), "rational"};
}

inline IntPoly catalan_series(std::size_t len) {
    IntPoly c(len);
    for (std::size_t n = 0; n < len; ++n) c[n] = catalan(static_cast<int>(n));
    return c;
}

// z / (z + sqrt(1 - 4z)) with sqrt(1 - 4z) = 1 - 2 z C(z).
inline SeriesTable irreducible_pair_series(int N) {
    if (N < 0) throw domain_error("irreducible_pair_series needs N >= 0");
    const std::size_t len = static_cast<std::size_t>(N) + 1;
    IntPoly c = catalan_series(len);
    IntPoly den(len, 0);
    den[0] = 1;
    if (len > 1) den[1] += 1;
    for (std::size_t n = 1; n < len; ++n) den[n] -= 2 * c[n - 1];
    IntPoly num(len, 0);
    if (len > 1) num[1] = 1;
    return {series_div(num, den, len), "irreducible pairs of compositions"};
}

// ---- matrices and walks ----

inline IntMatrix matrix_identity(std::size_t n) {
    IntMatrix m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix matrix_mul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    IntMatrix c(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

inline IntMatrix matrix_power(IntMatrix base, unsigned e) {
    for (const auto& row : base) {
        if (row.size() != base.size()) throw domain_error("matrix must be square");
    }
    IntMatrix result = matrix_identity(base.size());
    while (e) {
        if (e & 1u) result = matrix_mul(result, base);
        base = matrix_mul(base, base);
        e >>= 1u;
    }
    return result;
}

inline IntMatrix triangle_adjacency() {
    return {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
}

inline BigInt closed_walk_count(const IntMatrix& adjacency, int n, std::size_t vertex) {
    if (n < 0) throw domain_error("closed_walk_count needs n >= 0");
    if (vertex >= adjacency.size()) throw domain_error("vertex out of range");
    return matrix_power(adjacency, static_cast<unsigned>(n))[vertex][vertex];
}

// Closed walks of length n on the triangle from a fixed vertex.
inline BigInt triangle_walks(int n) { return closed_walk_count(triangle_adjacency(), n, 0); }

// ---- compositions by first-part residue ----

namespace detail {

inline BigInt compositions_of(int n) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    return ipow(BigInt(2), static_cast<unsigned>(n - 1));
}

inline BigInt parity_direct(int n, int m, int i) {
    BigInt total = 0;
    for (int f = 1; f <= n; ++f) {
        if (f % m == i) total += compositions_of(n - f);
    }
    return total;
}

}  // namespace detail

// C_i(n): compositions of n whose first part is congruent to i mod m.
// Recurrence C(n) = C(n-1) + ... + C(n-m+1) + 2 C(n-m) beyond n = 2m.
inline BigInt composition_parity_counts(int n, int m, int i) {
    if (m < 2 || i < 0 || i >= m) throw domain_error("composition_parity_counts needs m >= 2, 0 <= i < m");
    if (n < 0) throw domain_error("composition_parity_counts needs n >= 0");
    if (n <= 2 * m) return detail::parity_direct(n, m, i);
    std::vector<BigInt> c(n + 1);
    for (int k = 0; k <= 2 * m; ++k) c[k] = detail::parity_direct(k, m, i);
    for (int k = 2 * m + 1; k <= n; ++k) {
        BigInt v = 2 * c[k - m];
        for (int j = 1; j < m; ++j) v += c[k - j];
        c[k] = v;
    }
    return c[n];
}

inline BigInt compositions_odd_first(int n) { return composition_parity_counts(n, 2, 1); }
inline BigInt compositions_even_first(int n) { return composition_parity_counts(n, 2, 0); }

// ---- closed forms by name ----

inline BigInt power_counts(const std::string& kind, int n, int k = 0) {
    if (n < 1) throw domain_error("power_counts needs n >= 1");
    const unsigned e = static_cast<unsigned>(n - 1);
    if (kind == "pairs") return ipow(BigInt(4), e);
    if (kind == "colored_height2") return ipow(BigInt(k + 1), e);
    if (kind == "strip_colored") return 2 * ipow(BigInt(k + 2), e);
    if (kind == "hardinian_diag") return exact_div(ipow(BigInt(4), e) - 1, 3);
    if (kind == "hardinian_rect") {
        if (k < 1 || k > n) throw domain_error("hardinian_rect needs 1 <= k <= n");
        const BigInt p = ipow(BigInt(4), static_cast<unsigned>(k - 1));
        return p * (n - k) + exact_div(p - 1, 3);
    }
    throw domain_error("unknown power count '" + kind + "'");
}

}  // namespace pathbij

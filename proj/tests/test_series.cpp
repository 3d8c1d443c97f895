#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pathbij/series.hpp"

using namespace pathbij;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(NamedNumbers, MatchDefinitions) {
    for (int n = 0; n <= 20; ++n) {
        EXPECT_EQ(catalan(n), oracle::catalan(n));
        EXPECT_EQ(central_binomial(n), oracle::binom(2 * n, n));
        EXPECT_EQ(fibonacci(n), oracle::fib(n));
    }
    EXPECT_EQ(narayana(4, 2), 6);
    EXPECT_EQ(jacobsthal(5), 11);
    EXPECT_EQ(binomial(5, 7), 0);
    EXPECT_THROW(catalan(-1), domain_error);
}

TEST(NamedNumbers, SchroederRefinements) {
    EXPECT_EQ(schroeder_little_refined(2, 1), 1);
    EXPECT_EQ(schroeder_little_refined(2, 2), 2);
    EXPECT_EQ(schroeder_little(2), 3);
    EXPECT_EQ(schroeder_large_refined(2, 0) + schroeder_large_refined(2, 1) + schroeder_large_refined(2, 2), 6);
    for (int n = 1; n <= 7; ++n) {
        const auto c = oracle::schroeder(n);
        for (int i = 0; i <= n; ++i) {
            EXPECT_EQ(schroeder_little_refined(n, i), c.little[i]) << n << "," << i;
            EXPECT_EQ(schroeder_large_refined(n, i), c.large[i]) << n << "," << i;
        }
    }
}

TEST(NamedNumbers, Dispatcher) {
    EXPECT_EQ(combinatorial_number("narayana", {4, 2}), 6);
    EXPECT_EQ(combinatorial_number("schroeder_little_refined", {2, 2}), 2);
    EXPECT_EQ(combinatorial_number("partition_p", {5}), 7);
    EXPECT_THROW(combinatorial_number("bell", {3}), domain_error);
    EXPECT_THROW(combinatorial_number("narayana", {4}), domain_error);
}

TEST(RationalSeries, FibonacciFamilies) {
    EXPECT_EQ(rational_series({1, -1}, {1, -3, 1}, 5).coeffs, big({1, 2, 5, 13, 34, 89}));
    EXPECT_EQ(rational_series({0, 1}, {1, -3, 1}, 4).coeffs, big({0, 1, 3, 8, 21}));
    const auto g = rational_series({0, 1, -1}, {1, -1, -2}, 15);
    for (int n = 1; n <= 15; ++n) {
        const long want = ((1L << (n - 1)) + 2 * (n % 2 ? 1 : -1)) / 3;
        EXPECT_EQ(g[n], want) << n;
    }
    EXPECT_EQ(g[3], 2);
    EXPECT_THROW(rational_series({1}, {0, 1}, 3), domain_error);
}

TEST(IrreduciblePairs, SeriesMatchesBruteForce) {
    const auto s = irreducible_pair_series(8);
    EXPECT_EQ(s[0], 0);
    EXPECT_EQ(std::vector<BigInt>(s.coeffs.begin() + 1, s.coeffs.begin() + 6), big({1, 1, 3, 9, 29}));
    for (int n = 1; n <= 8; ++n) {
        oracle::u64 c = 0;
        for (const auto& a : oracle::compositions(n))
            for (const auto& b : oracle::compositions(n)) c += oracle::irreducible(a, b);
        EXPECT_EQ(s[n], c) << n;
    }
}

TEST(TriangleWalks, MatrixPowers) {
    EXPECT_EQ(closed_walk_count(triangle_adjacency(), 2, 0), 2);
    EXPECT_EQ(closed_walk_count(triangle_adjacency(), 3, 0), 2);
    EXPECT_EQ(closed_walk_count(triangle_adjacency(), 0, 0), 1);
    for (int n = 0; n <= 30; ++n) EXPECT_EQ(triangle_walks(n), oracle::triangle_closed(n)) << n;
    EXPECT_THROW(closed_walk_count(triangle_adjacency(), 2, 5), domain_error);
}

TEST(ParityCounts, FirstPartResidues) {
    EXPECT_EQ(compositions_odd_first(3), 3);
    EXPECT_EQ(compositions_even_first(3), 1);
    EXPECT_EQ(compositions_odd_first(1), 1);
    EXPECT_EQ(compositions_even_first(1), 0);
    for (int m = 2; m <= 4; ++m) {
        for (int n = 1; n <= 16; ++n) {
            std::vector<long> by_residue(m, 0);
            for (const auto& c : oracle::compositions(n)) ++by_residue[c[0] % m];
            for (int i = 0; i < m; ++i) EXPECT_EQ(composition_parity_counts(n, m, i), by_residue[i]) << n << " " << m << " " << i;
        }
    }
}

TEST(PowerCounts, SmallValues) {
    EXPECT_EQ(power_counts("colored_height2", 2, 2), 3);
    EXPECT_EQ(power_counts("strip_colored", 2, 1), 6);
    EXPECT_EQ(power_counts("pairs", 1), 1);
    EXPECT_EQ(power_counts("hardinian_rect", 3, 2), 5);
    EXPECT_THROW(power_counts("pairs", 0), domain_error);
    EXPECT_THROW(power_counts("unknown", 2), domain_error);
}

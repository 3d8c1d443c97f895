#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pathbij/profiles.hpp"

using namespace pathbij;

TEST(Lift, SingleTerm) {
    BivariatePoly p;
    p.add(1, 1, 1);
    const auto l = lift_exact(p, 1);
    ASSERT_EQ(l.terms.size(), 1u);
    EXPECT_EQ(l.coeff(3, 2), 2);
}

TEST(Lift, PowerOfZU) {
    for (int r = 1; r <= 6; ++r) {
        BivariatePoly p;
        p.add(r, r, 1);
        const auto l = lift_exact(p, r);
        for (int i = 0; i < r; ++i) {
            EXPECT_EQ(l.coeff(2 * r + i + 1, 2 * r + i + 1 - r), oracle::binom(r + i + 1, r) * oracle::binom(r - 1, i))
                << r << "," << i;
        }
        EXPECT_EQ(l.terms.size(), static_cast<std::size_t>(r));
    }
}

TEST(Lift, ConstantVanishes) {
    BivariatePoly p;
    p.add(0, 0, 5);
    EXPECT_TRUE(lift_exact(p, 2).terms.empty());
    EXPECT_THROW(lift_exact(p, -1), domain_error);
}

TEST(PerLevel, QuotedPrefixes) {
    const std::vector<BigInt> d1{1, 1, 0, 2, 0, 4, 6, 8, 24};
    const std::vector<BigInt> d2{1, 0, 1, 0, 0, 3, 6, 0, 9};
    EXPECT_EQ(exact_per_level_table(8, 1), d1);
    EXPECT_EQ(exact_per_level_table(8, 2), d2);
    const std::vector<BigInt> e1{1, 1, 1, 3, 5, 13, 31, 71};
    const std::vector<BigInt> e2{1, 1, 2, 4, 12, 31, 90};
    const std::vector<BigInt> e3{1, 1, 2, 5, 13, 40, 119};
    EXPECT_EQ(atmost_per_level_table(7, 1), e1);
    EXPECT_EQ(atmost_per_level_table(6, 2), e2);
    EXPECT_EQ(atmost_per_level_table(6, 3), e3);
}

TEST(PerLevel, EnginesMatchBruteForce) {
    for (int r = 1; r <= 4; ++r) {
        for (int n = 0; n <= 9; ++n) {
            oracle::u64 exact = 0, atmost = 0;
            for (const auto& w : oracle::dyck(n)) {
                exact += oracle::per_level(w, r, true);
                atmost += oracle::per_level(w, r, false);
            }
            EXPECT_EQ(count_exact_per_level(n, r), exact) << r << " " << n;
            EXPECT_EQ(count_atmost_per_level(n, r), atmost) << r << " " << n;
        }
    }
    EXPECT_EQ(count_exact_per_level(3, 1), 2);
}

TEST(DistinctHeights, SmallValues) {
    EXPECT_EQ(count_distinct_heights(1), 1);
    EXPECT_EQ(count_distinct_heights(2), 1);
    EXPECT_EQ(count_distinct_heights(3), 3);
    for (int n = 1; n <= 9; ++n) {
        oracle::u64 c = 0;
        for (const auto& w : oracle::dyck(n)) {
            bool ok = true;
            for (const auto& [h, k] : oracle::profile(w)) ok = ok && k == 1;
            c += ok;
        }
        EXPECT_EQ(count_distinct_heights(n), c) << n;
        EXPECT_EQ(count_distinct_heights(n) % 2, 1) << n;
    }
}

TEST(DistinctProfiles, FormulaAndBruteForce) {
    EXPECT_EQ(distinct_profile_count(3), 4);
    EXPECT_EQ(distinct_profile_count(1), 1);
    EXPECT_EQ(distinct_profile_count(4), 9);
    for (int n = 1; n <= 9; ++n) EXPECT_EQ(distinct_profile_formula(n), distinct_profile_count(n)) << n;
}

TEST(Narayana, Congruences) {
    EXPECT_EQ(narayana(6, 1) % 2, narayana(6, 2) % 2);
    EXPECT_EQ(narayana(6, 3), 50);
    for (int e = 2; e <= 4; ++e) EXPECT_TRUE(narayana_congruence_check(e, 8).empty()) << e;
    EXPECT_THROW(narayana_congruence_check(1, 4), domain_error);
}

TEST(Orbits, PrimitivePeriod) {
    EXPECT_EQ(orbit_decompose(dyck("udud")), (OrbitDecomposition{dyck("ud"), 2}));
    EXPECT_EQ(orbit_decompose(dyck("uddu")), (OrbitDecomposition{dyck("uddu"), 1}));
    EXPECT_EQ(orbit_decompose(dyck("ududud")), (OrbitDecomposition{dyck("ud"), 3}));
    EXPECT_THROW(orbit_decompose(dyck("uu")), domain_error);
}

TEST(StepDivisibility, Examples) {
    auto r = step_count_divisibility(StepSet::dyck(), 1, 4);
    EXPECT_EQ(r.count, 12);
    EXPECT_TRUE(r.mod_n);
    r = step_count_divisibility(StepSet::motzkin(), 1, 3);
    EXPECT_EQ(r.count, 6);
    EXPECT_TRUE(r.mod_2n);
    EXPECT_EQ(step_count_divisibility(StepSet::dyck(), -1, 5).count, 0);
}

TEST(StepDivisibility, MatchesBruteForce) {
    for (const auto& S : std::vector<std::vector<int>>{{-1, 1}, {-1, 0, 1}, {-2, 1}, {-1, 2}}) {
        for (int s : S) {
            for (int n = 1; n <= 9; ++n) {
                const auto b = oracle::step_total(S, s, n);
                const auto r = step_count_divisibility(StepSet(S), s, n);
                EXPECT_EQ(r.count, b);
                EXPECT_TRUE(r.mod_n);
                EXPECT_EQ(b % n, 0u);
            }
        }
    }
}

// The mirror pairing behind the parity claim does not apply to a zero step:
// a single flat step is a Motzkin bridge of length 1.
TEST(StepDivisibility, ZeroStepBreaksParityAtOddLength) {
    const auto one = step_count_divisibility(StepSet::motzkin(), 0, 1);
    EXPECT_EQ(one.count, 1);
    EXPECT_FALSE(one.mod_2);
    const auto three = step_count_divisibility(StepSet::motzkin(), 0, 3);
    EXPECT_EQ(three.count, 9);
    EXPECT_FALSE(three.mod_2);
    EXPECT_TRUE(three.mod_n);
    EXPECT_TRUE(step_count_divisibility(StepSet::motzkin(), 0, 4).mod_2);
}

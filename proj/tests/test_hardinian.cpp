#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pathbij/hardinian.hpp"

using namespace pathbij;

namespace {

HardinianArray example() {
    return {{{0, 1, 1, 2, 3}, {1, 1, 1, 2, 3}, {2, 2, 2, 2, 3}, {2, 2, 3, 3, 3}, {3, 3, 3, 3, 3}}, 1};
}

}  // namespace

TEST(Hardinian, Validate) {
    EXPECT_TRUE(validate(example()));
    EXPECT_TRUE(validate(HardinianArray{{{0, 0}, {0, 0}}, 1}));
    auto bad = example();
    bad.at(1, 2) = 3;
    EXPECT_FALSE(validate(bad));
    auto corner = example();
    corner.at(5, 5) = 4;
    EXPECT_FALSE(validate(corner));
}

TEST(Hardinian, Straighten) {
    const HookTriangle want{{{0}, {1, 1, 1}, {2, 2, 2, 1, 1}, {2, 2, 3, 3, 2, 2, 2}, {3, 3, 3, 3, 3, 3, 3, 3, 3}}};
    EXPECT_EQ(straighten(example()), want);
    EXPECT_EQ(straighten(HardinianArray{{{0}}, 1}).rows, (std::vector<std::vector<int>>{{0}}));
    EXPECT_EQ(straighten(HardinianArray{{{0, 0}, {0, 0}}, 1}).rows, (std::vector<std::vector<int>>{{0}, {0, 0, 0}}));
    EXPECT_THROW(straighten(HardinianArray{{{0, 0}}, 1}), domain_error);
}

TEST(Hardinian, StraightenKeepsHookContents) {
    for (const auto& a : all_hardinian(4, 4)) {
        const auto t = straighten(a);
        for (int h = 1; h <= 4; ++h) {
            std::vector<int> hook;
            for (int j = 1; j <= h; ++j) hook.push_back(a.at(h, j));
            for (int i = 1; i < h; ++i) hook.push_back(a.at(i, h));
            std::vector<int> row = t.rows[h - 1];
            std::sort(hook.begin(), hook.end());
            std::sort(row.begin(), row.end());
            EXPECT_EQ(hook, row);
        }
    }
}

TEST(Hardinian, ExampleMapsToPair) {
    EXPECT_EQ(to_string(array_to_pair(example())), "((1,2,2),(1,1,1,2))");
    EXPECT_EQ(pair_to_array(parse_pair("((1,2,2),(1,1,1,2))")), example());
    EXPECT_EQ(to_string(array_to_pair(HardinianArray{{{0, 0}, {0, 0}}, 1})), "((1,1),(1,1))");
}

TEST(Hardinian, PairDomainErrors) {
    EXPECT_THROW(pair_to_array(parse_pair("((1,2),(2,1))")), domain_error);
    EXPECT_THROW(pair_to_array(parse_pair("((3),(1,2))")), domain_error);
}

TEST(Hardinian, GenerationMatchesNaiveSearch) {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; k <= n; ++k) {
            auto lib = all_hardinian(n, k);
            std::vector<std::vector<std::vector<int>>> grids;
            for (const auto& a : lib) grids.push_back(a.grid);
            auto naive = oracle::hardinian(n, k);
            std::sort(grids.begin(), grids.end());
            std::sort(naive.begin(), naive.end());
            EXPECT_EQ(grids, naive) << n << "x" << k;
            EXPECT_EQ(h1_count(n, k), naive.size()) << n << "x" << k;
        }
    }
}

TEST(Hardinian, ClosedForms) {
    EXPECT_EQ(h1_count(5, 5), 85);
    EXPECT_EQ(h1_count(1, 1), 0);
    EXPECT_EQ(h1_count(3, 2), 5);
    EXPECT_THROW(h1_count(2, 3), domain_error);
}

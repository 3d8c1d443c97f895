#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "pathbij/enumerate.hpp"
#include "pathbij/io.hpp"

using namespace pathbij;

namespace {

EnumSpec paths(int n, PathClass c, StepSet S = StepSet::dyck()) {
    EnumSpec s;
    s.n = n;
    s.path_class = c;
    s.stepset = std::move(S);
    return s;
}

std::vector<Steps> collect(const EnumSpec& spec) {
    std::vector<Steps> out;
    generate(spec, [&](const EnumObject& o) {
        out.push_back(std::get<LatticePath>(o).steps());
        return true;
    });
    return out;
}

}  // namespace

TEST(Enumerate, SmallCounts) {
    EXPECT_EQ(count(paths(4, PathClass::Bridge)), 6);
    EXPECT_EQ(count(paths(6, PathClass::Excursion)), 5);
    EXPECT_EQ(count(paths(3, PathClass::Meander)), 3);
    EXPECT_EQ(count(paths(3, PathClass::Walk, StepSet::motzkin())), 27);

    EnumSpec c;
    c.family = Family::Compositions;
    c.n = 3;
    EXPECT_EQ(count(c), 4);
    c.family = Family::Pairs;
    EXPECT_EQ(count(c), 16);
    c.family = Family::KCompositions;
    c.k = 2;
    EXPECT_EQ(count(c), oracle::colored_compositions(3, 2).size());
    c.family = Family::GCompositions;
    c.g = 3;
    EXPECT_EQ(count(c), oracle::zero_compositions(3, 3).size());
}

TEST(Enumerate, DistinctPartitionsInOrder) {
    EnumSpec s;
    s.family = Family::PartitionsDistinct;
    s.n = 5;
    std::vector<Partition> got;
    generate(s, [&](const EnumObject& o) {
        got.push_back(std::get<Partition>(o));
        return true;
    });
    EXPECT_EQ(got, (std::vector<Partition>{{5}, {4, 1}, {3, 2}}));
}

TEST(Enumerate, PathFamiliesMatchOracle) {
    for (int len = 0; len <= 12; ++len) {
        std::set<Steps> bridges, excursions, meanders;
        for (const auto& w : oracle::words(len)) {
            if (oracle::ends_at_zero(w)) bridges.insert(w);
            if (oracle::is_excursion(w)) excursions.insert(w);
            if (oracle::is_meander(w)) meanders.insert(w);
        }
        const auto b = collect(paths(len, PathClass::Bridge));
        const auto e = collect(paths(len, PathClass::Excursion));
        const auto m = collect(paths(len, PathClass::Meander));
        EXPECT_EQ(std::set<Steps>(b.begin(), b.end()), bridges) << len;
        EXPECT_EQ(b.size(), bridges.size());
        EXPECT_EQ(std::set<Steps>(e.begin(), e.end()), excursions) << len;
        EXPECT_EQ(std::set<Steps>(m.begin(), m.end()), meanders) << len;
        EXPECT_TRUE(std::is_sorted(b.begin(), b.end())) << len;
    }
}

TEST(Enumerate, Strip) {
    auto s = paths(2, PathClass::Walk);
    s.strip = {{-2, 2}};
    EXPECT_EQ(count(s), 4);
    s = paths(4, PathClass::Bridge);
    s.strip = {{-1, 1}};
    EXPECT_EQ(count(s), 4);
    for (int len = 0; len <= 10; len += 2) {
        auto t = paths(len, PathClass::Bridge);
        t.strip = {{-2, 2}};
        oracle::u64 want = 0;
        oracle::paths_in(len, -2, 2, false, 0, [&](const oracle::Word&) { ++want; });
        EXPECT_EQ(count(t), want) << len;
        EXPECT_EQ(collect(t).size(), want) << len;
    }
}

TEST(Enumerate, FilterAndPrefix) {
    auto s = paths(8, PathClass::Excursion);
    s.filter = parse_property("height_at_most:2");
    oracle::u64 want = 0;
    for (const auto& w : oracle::dyck(4)) want += oracle::highest(w) <= 2;
    EXPECT_EQ(count(s), want);

    auto whole = paths(8, PathClass::Bridge);
    std::vector<Steps> joined;
    for (const auto& sub : split_prefixes(whole, 3)) {
        const auto part = collect(sub);
        joined.insert(joined.end(), part.begin(), part.end());
    }
    EXPECT_EQ(joined, collect(whole));
}

TEST(Enumerate, EarlyStop) {
    int seen = 0;
    generate(paths(10, PathClass::Walk), [&](const EnumObject&) { return ++seen < 3; });
    EXPECT_EQ(seen, 3);
}

TEST(Enumerate, CapExceeded) {
    auto s = paths(30, PathClass::Walk);
    s.cap = 1000;
    EXPECT_THROW(count(s), cap_exceeded);
    try {
        generate(s, [](const EnumObject&) { return true; });
        FAIL();
    } catch (const cap_exceeded& e) {
        EXPECT_EQ(e.estimate(), "1073741824");
    }
}

TEST(Enumerate, Parsing) {
    EXPECT_EQ(parse_family("k_compositions"), Family::KCompositions);
    EXPECT_EQ(parse_path_class("Excursion"), PathClass::Excursion);
    EXPECT_EQ(parse_property("first_peak_highest"), PropertyId::of(PropertyId::Kind::FirstPeakHighest));
    EXPECT_EQ(parse_property("summits_variant:101"), PropertyId::summits_variant(true, false, true));
    EXPECT_THROW(parse_family("trees"), domain_error);
    EXPECT_THROW(parse_path_class("loop"), domain_error);
    EXPECT_THROW(parse_property("height_at_most"), domain_error);
    EXPECT_THROW(parse_property("summits_variant:12"), domain_error);
    EXPECT_THROW(parse_property("tallest"), domain_error);
}

TEST(Partitions, ParityDifferences) {
    EXPECT_EQ(fine_difference(5), -1);
    EXPECT_EQ(fine_difference(1), -1);
    EXPECT_EQ(fine_difference(3), 0);
    EXPECT_EQ(last_part_difference(7), 3);
    for (int n = 1; n <= 30; ++n) {
        long long fd = 0, lp = 0;
        for (const auto& p : oracle::distinct_partitions(n)) {
            fd += p.front() % 2 == 0 ? 1 : -1;
            lp += p.back() % 2 == 1 ? 1 : -1;
        }
        EXPECT_EQ(fine_difference(n), fd) << n;
        EXPECT_EQ(last_part_difference(n), lp) << n;
    }
}

TEST(PeakLadder, AgreesWithFirstAscent) {
    const auto r = asinowski_check(2);
    EXPECT_EQ(r.left, 1);
    EXPECT_EQ(r.right, 1);
    EXPECT_TRUE(r.equal);
    for (int n = 1; n <= 9; ++n) {
        oracle::u64 right = 0;
        for (const auto& w : oracle::dyck(n)) right += oracle::ladder(w);
        EXPECT_EQ(asinowski_check(n).right, right) << n;
        EXPECT_TRUE(asinowski_check(n).equal) << n;
    }
}

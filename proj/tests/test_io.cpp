#include <gtest/gtest.h>

#include <sstream>

#include "pathbij/pathbij.hpp"

using namespace pathbij;

namespace {

std::string data(const char* name) { return std::string(PATHBIJ_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Json, PathForms) {
    const auto p = dyck("uudd");
    const auto j = to_json(p);
    EXPECT_EQ(j.at("text"), "uudd");
    EXPECT_EQ(j.at("steps"), json({1, 1, -1, -1}));
    EXPECT_EQ(path_from_json(j), p);
    EXPECT_EQ(path_from_json(json("udud")), dyck("udud"));
    EXPECT_EQ(path_from_json(json{{"text", "ud"}}), dyck("ud"));
    const auto m = LatticePath({1, 0, -1}, StepSet::motzkin());
    EXPECT_FALSE(to_json(m).contains("text"));
    EXPECT_EQ(path_from_json(to_json(m)), m);
    EXPECT_THROW(path_from_json(json{{"steps", "x"}}), domain_error);
    EXPECT_THROW(path_from_json(json::object()), domain_error);
}

TEST(Json, RoundTrips) {
    const auto pair = parse_pair("((2,1,3),(3,2,1))");
    EXPECT_EQ(to_json(pair_from_json(to_json(pair))), to_json(pair));
    EXPECT_EQ(to_json(pair).at("text"), "((2,1,3),(3,2,1))");

    const auto k = parse_kcomposition("6_1+1_2+4_3+2_1", 3);
    EXPECT_EQ(kcomposition_from_json(to_json(k), 3), k);

    const GComposition g({2, 0, 0, 3, 1}, 4);
    EXPECT_EQ(to_json(gcomposition_from_json(to_json(g), 4)), to_json(g));

    const auto t = tuple_from_json(json{{"tuple", {std::vector<int>{1}, std::vector<int>{}}}});
    EXPECT_EQ(to_json(t).at("text"), "((1),())");
    EXPECT_EQ(to_json(tuple_from_json(to_json(t))), to_json(t));

    const MarkedPath mk{dyck("uudd"), 2};
    EXPECT_EQ(marked_from_json(to_json(mk)), mk);

    const LabeledPeakPath lp{dyck("uudd"), 2, 1};
    EXPECT_EQ(to_json(labeled_from_json(to_json(lp))), to_json(lp));

    const TwoColoredBridge tc{dyck("du"), dyck("ud")};
    EXPECT_EQ(to_json(two_colored_from_json(to_json(tc))), to_json(tc));

    ColoredReturnPath cr;
    cr.path = dyck("udud");
    cr.return_colors = {2, 1};
    cr.k = 2;
    EXPECT_EQ(to_json(colored_return_from_json(to_json(cr), 2)), to_json(cr));

    EXPECT_EQ(triangle_walk_from_json(triangle_walk_json({1, 2, 3, 1})), (TriangleWalk{1, 2, 3, 1}));
    EXPECT_THROW(pair_from_json(json::array({json::array({1})})), domain_error);
}

TEST(Json, EnumObjects) {
    EXPECT_EQ(to_json(EnumObject{Partition{4, 1}}), (json{{"parts", {4, 1}}}));
    EXPECT_EQ(to_json(EnumObject{Composition({1, 2})}).at("parts"), json({1, 2}));
}

TEST(Registry, TextAndJsonInputs) {
    EXPECT_EQ(apply_bijection("pair_walk", true, "((2,1,3),(3,2,1))").at("text"), "udduuuudud");
    EXPECT_EQ(apply_bijection("pair_walk", true, R"({"pair": [[2,1,3],[3,2,1]]})").at("text"), "udduuuudud");
    EXPECT_EQ(apply_bijection("pair_walk", false, "").at("text"), "((1),(1))");
    EXPECT_EQ(apply_bijection("three_pair", true, "6_1+1_2+4_3+2_1").at("text"), "((6,5,2),(6,1,6))");
    EXPECT_EQ(apply_bijection("marked_peak_bridge", true, "uudd@2").at("text"), "duud");
    EXPECT_EQ(apply_bijection("marked_peak_bridge", false, "duud").at("mark"), 2);

    MapOptions o;
    o.k = 3;
    const auto g = apply_bijection("k_g", true, "2_3+3_1+1_1", o);
    EXPECT_EQ(g.at("parts"), json({2, 0, 0, 3, 1}));
    o.g = 4;
    EXPECT_EQ(apply_bijection("k_g", false, "2,0,0,3,1", o).at("text"), "2_3+3_1+1_1");
}

TEST(Registry, EveryEntryIsReachable) {
    EXPECT_EQ(bijection_registry().size(), 14u);
    for (const auto& e : bijection_registry()) EXPECT_EQ(&find_bijection(e.name), &e);
    EXPECT_THROW(apply_bijection("nope", true, "ud"), domain_error);
    EXPECT_THROW(apply_bijection("pair_walk", true, "{broken"), domain_error);
    EXPECT_THROW(apply_bijection("marked_peak_bridge", true, "uudd"), domain_error);
}

TEST(BFile, Parsing) {
    std::istringstream in("# header\n\n0 1\n1 1\n  2 2\n3 123456789012345678901234567890\n");
    const auto b = parse_bfile(in, "A1");
    ASSERT_EQ(b.entries.size(), 4u);
    EXPECT_EQ(b.entries[3].second, BigInt("123456789012345678901234567890"));
    EXPECT_EQ(b.id, "A1");

    std::istringstream bad("0 1\n1 x\n");
    EXPECT_THROW(parse_bfile(bad), domain_error);
    std::istringstream extra("0 1 2\n");
    EXPECT_THROW(parse_bfile(extra), domain_error);
    std::istringstream order("1 1\n1 2\n");
    EXPECT_THROW(parse_bfile(order), domain_error);
    EXPECT_THROW(read_bfile(data("missing.txt")), domain_error);

    EXPECT_EQ(format_bfile({{1, 5}, {2, 7}}), "1 5\n2 7\n");
}

TEST(BFile, FixturesMatch) {
    for (const char* id : {"A287846", "A287845"}) {
        const auto& s = find_sequence(id);
        const auto cmp = compare_with_bfile(s, read_bfile(data((std::string(id) + ".txt").c_str()), id), 9);
        EXPECT_TRUE(cmp.match) << cmp.detail;
        EXPECT_EQ(cmp.compared, 9);
    }
    const auto& fib = find_sequence("A001519");
    const auto cmp = compare_with_bfile(fib, read_bfile(data("A001519.txt")), 10);
    EXPECT_TRUE(cmp.match) << cmp.detail;
    EXPECT_EQ(cmp.compared, 10);

    const auto over = compare_with_bfile(fib, read_bfile(data("A001519.txt")), 11);
    EXPECT_FALSE(over.match);
    EXPECT_EQ(over.first_mismatch, 11);
}

TEST(BFile, MismatchIsReported) {
    std::istringstream in("0 1\n1 1\n2 0\n3 3\n");
    const auto cmp = compare_with_bfile(find_sequence("A287846"), parse_bfile(in), 4);
    EXPECT_FALSE(cmp.match);
    EXPECT_EQ(cmp.first_mismatch, 3);
    EXPECT_EQ(cmp.compared, 4);
    EXPECT_THROW(compare_with_bfile(find_sequence("irreducible_pairs"), parse_bfile(in), 1), domain_error);
    EXPECT_THROW(find_sequence("A999999"), domain_error);
}

TEST(Sequences, EntriesUseOffsets) {
    const auto e = sequence_entries(find_sequence("total_peaks"), 3);
    ASSERT_EQ(e.size(), 3u);
    EXPECT_EQ(e[0], (std::pair<long long, BigInt>{0, 1}));
    EXPECT_EQ(e[2].second, 10);
    EXPECT_TRUE(sequence_entries(find_sequence("catalan"), 0).empty());
}

TEST(Verify, SuitesPass) {
    for (const char* s : {"roundtrips", "cardinalities", "statistics", "sequences"}) {
        const auto rep = run_suite(s, 6);
        EXPECT_TRUE(rep.passed()) << rep.to_text();
        EXPECT_FALSE(rep.checks.empty()) << s;
    }
    const auto rep = run_suite("roundtrips", 4);
    const auto j = rep.to_json();
    EXPECT_EQ(j.at("suite"), "roundtrips");
    EXPECT_EQ(j.at("passed"), true);
    EXPECT_NE(rep.to_text().find("passed"), std::string::npos);
    EXPECT_THROW(run_suite("everything", 4), domain_error);
    EXPECT_THROW(run_suite("all", 0), domain_error);
}

TEST(Congruences, Claims) {
    for (const char* c : {"rplus1", "e1odd", "ddelta", "narayana", "fine", "lastpart"}) {
        EXPECT_TRUE(check_congruence(c, 12).violations.empty()) << c;
    }
    const auto sd = check_congruence("stepdiv", 5);
    ASSERT_FALSE(sd.violations.empty());
    for (const auto& v : sd.violations) EXPECT_NE(v.find("s=0"), std::string::npos) << v;
    EXPECT_EQ(sd.to_json().at("claim"), "stepdiv");
    EXPECT_THROW(check_congruence("goldbach", 3), domain_error);
}

#include <gtest/gtest.h>

#include "pathbij/bijections.hpp"
#include "pathbij/paths.hpp"

using namespace pathbij;

namespace {

MarkedPath marked(const char* s, std::size_t pos) { return MarkedPath{dyck(s), pos}; }

// marked peak and image bridge from the worked figure: peak at height 6
const char* kLongPath = "uuduuddduuuuduuuuudddddduuuududdduuuuudddddduddd";
const char* kLongBridge = "dddudduuuuudddduddddduuuuuuuduuduuuuudddddduuudd";

}  // namespace

TEST(PairWalk, WorkedExample) {
    const auto w = pair_to_walk(parse_pair("((2,1,3),(3,2,1))"));
    EXPECT_EQ(render_path(w), "udduuuudud");
    EXPECT_EQ(to_string(walk_to_pair(w)), "((2,1,3),(3,2,1))");
}

TEST(PairWalk, SmallCases) {
    EXPECT_TRUE(pair_to_walk(parse_pair("((1),(1))")).empty());
    EXPECT_EQ(render_path(pair_to_walk(parse_pair("((2),(1,1))"))), "ud");
    EXPECT_EQ(to_string(walk_to_pair(dyck(""))), "((1),(1))");
    EXPECT_THROW(walk_to_pair(dyck("u")), domain_error);
}

TEST(ThreePair, WorkedExample) {
    const auto k = parse_kcomposition("6_1+1_2+4_3+2_1", 3);
    const auto p = three_to_pair(k);
    EXPECT_EQ(to_string(p), "((6,5,2),(6,1,6))");
    EXPECT_EQ(pair_to_three(p), k);
    EXPECT_EQ(to_string(three_to_pair(parse_kcomposition("5_1", 3))), "((5),(5))");
}

TEST(KG, ZerosEncodeColors) {
    const auto k = parse_kcomposition("2_3+3_1+1_1", 3);
    const auto g = k_to_g(k);
    EXPECT_EQ(g.parts, (std::vector<int>{2, 0, 0, 3, 1}));
    EXPECT_EQ(g.g, 4);
    EXPECT_EQ(g_to_k(g), k);
    EXPECT_EQ(k_to_g(parse_kcomposition("4_1", 2)).parts, (std::vector<int>{4}));
    EXPECT_THROW(parse_kcomposition("1_1+1_2", 2), domain_error);
}

TEST(MarkedPeakBridge, SmallCases) {
    EXPECT_EQ(render_path(marked_peak_to_bridge(marked("ud", 1))), "du");
    EXPECT_EQ(render_path(marked_peak_to_bridge(marked("uudd", 2))), "duud");
    EXPECT_EQ(bridge_to_marked_peak(dyck("duud")), marked("uudd", 2));
    EXPECT_THROW(marked_peak_to_bridge(marked("uudd", 1)), domain_error);
    EXPECT_THROW(bridge_to_marked_peak(dyck("uddu")), domain_error);
}

TEST(MarkedPeakBridge, LongExampleFromFigure) {
    const auto p = dyck(kLongPath);
    ASSERT_EQ(altitudes(p)[30], 6);
    const auto b = marked_peak_to_bridge(MarkedPath{p, 30});
    EXPECT_EQ(render_path(b), kLongBridge);
    EXPECT_EQ(stats(b).crossings, 5);
    EXPECT_EQ(bridge_to_marked_peak(b), (MarkedPath{p, 30}));
}

TEST(MarkedPeakBridge, StartWithUpVariant) {
    for (const auto& m : {marked("ud", 1), marked("uudd", 2), marked("uududd", 2), marked("uududd", 4)}) {
        const auto b = marked_peak_to_bridge(m, true);
        EXPECT_EQ(b.steps().front(), 1);
        EXPECT_EQ(bridge_to_marked_peak(b, true), m);
    }
}

TEST(LabeledPeakLtrMax, SmallCases) {
    EXPECT_EQ(labeled_peak_to_ltrmax({dyck("uudd"), 2, 2}), marked("uudd", 2));
    EXPECT_EQ(labeled_peak_to_ltrmax({dyck("uudd"), 2, 1}), marked("uddu", 1));
    EXPECT_EQ(labeled_peak_to_ltrmax({dyck("ud"), 1, 1}), marked("ud", 1));
    EXPECT_EQ(ltrmax_to_labeled_peak(marked("uddu", 1)), (LabeledPeakPath{dyck("uudd"), 2, 1}));
    EXPECT_THROW(labeled_peak_to_ltrmax({dyck("uudd"), 2, 3}), domain_error);
}

TEST(BridgeMeander, SmallCases) {
    EXPECT_EQ(render_path(bridge_to_meander(dyck("ud"))), "ud");
    EXPECT_EQ(render_path(bridge_to_meander(dyck("du"))), "uu");
    EXPECT_EQ(render_path(bridge_to_meander(dyck("uddu"))), "uduu");
    EXPECT_EQ(render_path(meander_to_bridge(dyck("uduu"))), "uddu");
    EXPECT_THROW(meander_to_bridge(dyck("du")), domain_error);
}

TEST(TwoColoredWalk, SmallCases) {
    EXPECT_TRUE(two_colored_to_walk({LatticePath(), LatticePath()}).empty());
    EXPECT_EQ(render_path(two_colored_to_walk({dyck("ud"), LatticePath()})), "ud");
    EXPECT_EQ(walk_to_two_colored(dyck("ud")), (TwoColoredBridge{dyck("ud"), LatticePath()}));
}

TEST(TwoColoredWalk, FirstComponentEndingBelow) {
    EXPECT_EQ(render_path(two_colored_to_walk({dyck("uddu"), dyck("ud")})), "udduud");
    EXPECT_EQ(render_path(two_colored_to_walk({dyck("ud"), dyck("udud")})), "uddudu");
    EXPECT_EQ(walk_to_two_colored(dyck("udduud")), (TwoColoredBridge{dyck("uddu"), dyck("ud")}));
}

TEST(LtrMaxTwoColored, SmallCases) {
    EXPECT_EQ(ltrmax_to_two_colored(marked("ud", 1)), (TwoColoredBridge{}));
    EXPECT_EQ(ltrmax_to_two_colored(marked("uudd", 2)), (TwoColoredBridge{dyck("ud"), LatticePath()}));
    EXPECT_EQ(two_colored_to_ltrmax({dyck("ud"), LatticePath()}), marked("uudd", 2));
}

TEST(Height2Composition, Plain) {
    EXPECT_EQ(height2_to_composition(dyck("uududd")), (Composition{3}));
    EXPECT_EQ(height2_to_composition(dyck("udud")), (Composition{1, 1}));
    EXPECT_EQ(height2_to_composition(dyck("uduudd")), (Composition{1, 2}));
    EXPECT_EQ(render_path(composition_to_height2(Composition{1, 2})), "uduudd");
    EXPECT_THROW(height2_to_composition(dyck("uuuddd")), domain_error);
}

TEST(Height2Composition, ColoredReturns) {
    const ColoredReturnPath x{dyck("udud"), {2}, 2};
    const auto k = colored_height2_to_kcomposition(x);
    EXPECT_EQ(k.k, 2);
    EXPECT_EQ(kcomposition_to_colored_height2(k), x);
}

TEST(Height2Tuples, SmallCases) {
    EXPECT_EQ(to_string(height2_to_tuple(dyck("uuddud"))), "((1),())");
    EXPECT_EQ(to_string(height2_to_tuple(dyck("uduudd"))), "((),(1))");
    EXPECT_EQ(to_string(height2_to_tuple(dyck(""))), "(())");
    EXPECT_EQ(render_path(tuple_to_height2(height2_to_tuple(dyck("uuddud")))), "uuddud");
}

TEST(HillsPyramids, SmallCases) {
    EXPECT_EQ(render_path(hills_pyramids_to_bridge(dyck("uduudd"))), "ud");
    EXPECT_EQ(render_path(hills_pyramids_to_bridge(dyck("uuddud"))), "du");
    EXPECT_TRUE(hills_pyramids_to_bridge(dyck("")).empty());
    EXPECT_EQ(render_path(bridge_to_hills_pyramids(dyck("du"))), "uuddud");
}

TEST(SummitsValleys, SmallCases) {
    EXPECT_EQ(render_path(summits_to_valleys(dyck("ud"))), "uudd");
    EXPECT_EQ(render_path(summits_to_valleys(dyck("du"))), "udud");
    EXPECT_EQ(render_path(valleys_to_summits(dyck("udud"))), "du");
    EXPECT_THROW(summits_to_valleys(dyck("uddu")), domain_error);
}

TEST(EvenFirstTriangleWalk, SmallCases) {
    EXPECT_EQ(even_first_to_triangle_walk(Composition{2, 1}), (TriangleWalk{1, 2, 3, 1}));
    EXPECT_EQ(even_first_to_triangle_walk(Composition{2}), (TriangleWalk{1, 2, 1}));
    EXPECT_EQ(triangle_walk_to_even_first({1, 2, 3, 1}), (Composition{2, 1}));
    EXPECT_THROW(even_first_to_triangle_walk(Composition{3}), domain_error);
    EXPECT_THROW(triangle_walk_to_even_first({1, 3, 1}), domain_error);
}

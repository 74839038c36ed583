#include "clanorb/family_a.hpp"
#include "clanorb/springer.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace clanorb;

namespace {

Clan C(const char* s) { return parse_clan(s); }

} // namespace

TEST(FamilyA, Dimensions)
{
    Family f = Family::a(2, 2);
    EXPECT_EQ(dimension_a(f, C("1,1,2,2")), 4);
    EXPECT_EQ(dimension_a(f, C("1,2,2,1")), 6);
    EXPECT_EQ(dimension_a(f, C("+,-,+,-")), 2);
    EXPECT_EQ(dimension_a(f, C("1,2,1,2")), 5);
    try {
        dimension_a(f, C("+,+,+,-"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::SignatureMismatch);
    }
}

TEST(FamilyA, Figure1Grading)
{
    std::map<int, int> rows;
    Family f = Family::a(2, 2);
    for (const auto& g : f.members())
        ++rows[f.dimension(g)];
    EXPECT_EQ(rows, (std::map<int, int>{{2, 6}, {3, 6}, {4, 5}, {5, 3}, {6, 1}}));
}

TEST(FamilyA, ClassifyExamples)
{
    Family f = Family::a(2, 2);
    EXPECT_EQ(classify_a(f, C("1,2,1,2")), Smoothness::NotRationallySmooth);
    EXPECT_EQ(classify_a(f, C("1,1,2,2")), Smoothness::Smooth);
    EXPECT_EQ(classify_a(f, C("1,-,+,1")), Smoothness::NotRationallySmooth);
    EXPECT_EQ(classify_a(f, C("1,+,-,1")), Smoothness::NotRationallySmooth);
    int bad = 0;
    for (const auto& g : f.members())
        bad += classify_a(f, g) == Smoothness::NotRationallySmooth;
    EXPECT_EQ(bad, 3);
}

TEST(FamilyA, OpenOrbitAvoidsPatterns)
{
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; q <= 5; ++q) {
            if (!p && !q)
                continue;
            Family f = Family::a(p, q);
            Clan top = gamma_circ_a(p, q);
            EXPECT_TRUE(f.contains(top));
            EXPECT_EQ(f.dimension(top), f.flag_dimension()) << f.name();
            EXPECT_EQ(classify_a(f, top), Smoothness::Smooth) << f.name();
        }
}

TEST(FamilyA, ClosedOrbitsAreSmooth)
{
    for (const auto& g : Family::a(3, 3).members())
        if (g.all_signs()) {
            EXPECT_EQ(classify_a(Family::a(3, 3), g), Smoothness::Smooth);
        }
}

TEST(FamilyA, IsogenyClasses)
{
    auto classes = isogeny_classes_a(2, 2);
    EXPECT_EQ(classes.size(), 12u); // 3 sign-free clans are fixed: (21 + 3) / 2
    auto find = [&](const Clan& g) {
        for (const auto& c : classes)
            if (std::find(c.begin(), c.end(), g) != c.end())
                return c;
        return std::vector<Clan>{};
    };
    EXPECT_EQ(find(C("1,2,1,2")).size(), 1u);
    auto pair = find(C("1,+,-,1"));
    ASSERT_EQ(pair.size(), 2u);
    EXPECT_NE(std::find(pair.begin(), pair.end(), C("1,-,+,1")), pair.end());
    EXPECT_EQ(isogeny_classes_a(3, 1).size(), Family::a(3, 1).members().size());
}

TEST(FamilyA, NegationPreservesVerdict)
{
    for (int p = 1; p <= 4; ++p) {
        Family f = Family::a(p, p);
        for (const auto& g : f.members())
            EXPECT_EQ(classify_a(f, g), classify_a(f, negate(g))) << to_string(g);
    }
}

TEST(FamilyA, SpringerData)
{
    auto roots = springer_data_a(C("+,-"));
    ASSERT_EQ(roots.size(), 1u);
    EXPECT_EQ(roots[0].moved, C("1,1"));
    EXPECT_EQ(to_string(roots[0].root), "e1-e2");
    EXPECT_THROW(springer_data_a(C("1,1")), Error);
    // one noncompact root per pair of opposite signs: p*q of them
    for (const auto& cl : Family::a(3, 2).members())
        if (cl.all_signs()) {
            EXPECT_EQ(springer_data_a(cl).size(), 6u);
        }
}

TEST(FamilyA, PrintedPatternsMissOneOrbitInRankSix)
{
    OrbitPoset P = build_poset(Family::a(3, 3));
    SpringerTable table(P);
    std::vector<Clan> disagree;
    for (OrbitId g = 0; g < P.size(); ++g)
        if (avoids(P.orbit(g), printed_patterns()) != table.rationally_smooth(g))
            disagree.push_back(P.orbit(g));
    ASSERT_EQ(disagree.size(), 1u);
    EXPECT_EQ(disagree[0], C("1,2,2,3,3,1"));
}

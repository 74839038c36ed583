#include "clanorb/isogeny.hpp"
#include "clanorb/springer.hpp"

#include <gtest/gtest.h>

using namespace clanorb;

namespace {

Clan C(const char* s) { return parse_clan(s); }

// Springer's inequality with nothing from the library but the noncompact
// roots and dimensions: the order is the prefix-count rank test for U(p,q).
int prefix_count(const Clan& g, int i, int sign)
{
    int c = 0;
    for (int k = 0; k < i; ++k)
        if (g[k] == sign || (g[k] >= 0 && g[k] < k))
            ++c;
    return c;
}

bool rank_le(const Clan& a, const Clan& b)
{
    const int n = a.size();
    for (int i = 0; i <= n; ++i) {
        if (prefix_count(a, i, kPlus) < prefix_count(b, i, kPlus) ||
            prefix_count(a, i, kMinus) < prefix_count(b, i, kMinus))
            return false;
        for (int j = i + 1; j <= n; ++j) {
            int sa = 0, sb = 0;
            for (int s = 0; s < i; ++s) {
                sa += a[s] > s && a[s] >= j;
                sb += b[s] > s && b[s] >= j;
            }
            if (sa > sb)
                return false;
        }
    }
    return true;
}

bool springer_smooth_by_rank(const Family& f, const Clan& g)
{
    for (const auto& cl : f.members()) {
        if (!cl.all_signs() || !rank_le(cl, g))
            continue;
        int s = 0;
        for (const auto& nr : springer_data_a(cl))
            s += rank_le(nr.moved, g);
        if (s > f.dimension(g) - f.dimension(cl))
            return false;
    }
    return true;
}

} // namespace

TEST(Springer, WorkedExample)
{
    OrbitPoset P = build_poset(Family::a(2, 2));
    SpringerReport r = springer_report(P, C("1,2,1,2"), C("+,-,-,+"));
    EXPECT_EQ(r.s_size, 4);
    EXPECT_EQ(r.dim_gap, 3);
    EXPECT_TRUE(r.violated);
    SpringerReport r2 = springer_report(P, C("1,2,1,2"), C("+,-,+,-"));
    EXPECT_EQ(r2.s_size, 3);
    EXPECT_EQ(r2.dim_gap, 3);
    EXPECT_FALSE(r2.violated);
    SpringerReport r3 = springer_report(P, C("+,-,+,-"), C("+,-,+,-"));
    EXPECT_EQ(r3.s_size, 0);
    EXPECT_EQ(r3.dim_gap, 0);
    EXPECT_FALSE(r3.violated);
}

TEST(Springer, Errors)
{
    OrbitPoset P = build_poset(Family::a(2, 2));
    try {
        springer_report(P, C("+,-,+,-"), C("+,+,-,-"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotBelow);
    }
    try {
        springer_report(P, C("1,2,2,1"), C("1,1,2,2"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotClosed);
    }
}

TEST(Springer, Verdicts)
{
    EXPECT_FALSE(rationally_smooth_springer(build_poset(Family::a(2, 2)), C("1,2,1,2")));
    EXPECT_TRUE(rationally_smooth_springer(build_poset(Family::c(2, 2)), C("1,2,3,4,3,4,1,2")));
    EXPECT_FALSE(rationally_smooth_springer(build_poset(Family::d(4)), C("1,+,-,1,2,+,-,2")));
}

TEST(Springer, TypeAMatchesRankOracle)
{
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {4, 2}}) {
        Family f = Family::a(p, q);
        OrbitPoset P = build_poset(f);
        SpringerTable t(P);
        for (OrbitId g = 0; g < P.size(); ++g)
            EXPECT_EQ(t.rationally_smooth(g), springer_smooth_by_rank(f, P.orbit(g))) << to_string(P.orbit(g));
    }
}

TEST(Springer, CrossValidationOnFigures)
{
    CrossValidation a = cross_validate(build_poset(Family::a(2, 2)));
    EXPECT_EQ(a.orbits, 21);
    EXPECT_EQ(a.nonsmooth, 3);
    EXPECT_TRUE(a.ok());
    CrossValidation c = cross_validate(build_poset(Family::c(2, 2)));
    EXPECT_EQ(c.orbits, 42);
    EXPECT_TRUE(c.ok());
    CrossValidation d = cross_validate(build_poset(Family::d(4)));
    EXPECT_EQ(d.orbits, 38);
    EXPECT_EQ(d.nonsmooth, 9);
    EXPECT_TRUE(d.ok());
    CrossValidation d3 = cross_validate(build_poset(Family::d(3)));
    EXPECT_EQ(d3.nonsmooth, 0);
    EXPECT_TRUE(d3.ok());
}

TEST(Springer, InvariantUnderFlipAndTau)
{
    for (const Family& f : {Family::a(2, 2), Family::a(3, 3), Family::c(2, 2)}) {
        OrbitPoset P = build_poset(f);
        SpringerTable t(P);
        for (OrbitId g = 0; g < P.size(); ++g)
            EXPECT_EQ(t.rationally_smooth(g), t.rationally_smooth(P.id_of(negate(P.orbit(g))))) << f.name();
    }
    for (int n = 2; n <= 4; ++n) {
        OrbitPoset P = build_poset(Family::d(n));
        SpringerTable t(P);
        for (OrbitId g = 0; g < P.size(); ++g)
            EXPECT_EQ(t.rationally_smooth(g), t.rationally_smooth(P.id_of(tau(P.orbit(g)))));
    }
}

TEST(Springer, QuotientLevelOnFigure2)
{
    OrbitPoset P = build_poset(Family::c(2, 2));
    SpringerTable t(P);
    OrbitClasses oc = isogeny_classes(P, Isogeny::Adjoint);
    int bad = 0;
    for (int k = 0; k < oc.size(); ++k) {
        bool q = rationally_smooth_quotient(t, oc, k);
        bad += !q;
        EXPECT_EQ(q, classify_class(P, oc, k) == Smoothness::Smooth);
    }
    EXPECT_EQ(bad, 13);
}

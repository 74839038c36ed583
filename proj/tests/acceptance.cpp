// Acceptance run: one PASS/FAIL line per criterion. "acceptance 5" runs criterion 5 only.

#include "clanorb/fixtures.hpp"
#include "clanorb/weyl.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace clanorb;

namespace {

// Wall-clock budgets in seconds; 0 means none.
constexpr double kBudget[12] = {0, 1.0, 5.0, 1.0, 5.0, 120.0, 120.0, 0, 0, 0, 0, 600.0};
constexpr std::size_t kShown = 5; // counterexamples printed per failing check

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> details;

    void fail(const std::string& why)
    {
        pass = false;
        if (details.size() < 4 * kShown)
            details.push_back(why);
    }
    void expect(bool ok, const std::string& why)
    {
        if (!ok)
            fail(why);
    }
};

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (int x : v)
        s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

Fixture fixture(const char* id) { return load_fixture(CLANORB_FIXTURE_DIR, id); }

void check_fixture(Outcome& out, const Fixture& fx, const OrbitPoset& P)
{
    FixtureComparison r = compare_fixture(fx, P);
    for (const auto& p : r.problems)
        out.fail(fx.id + ": " + p);
}

std::set<std::string> boxed_names(const OrbitPoset& P, Isogeny level, bool compressed)
{
    OrbitClasses oc = isogeny_classes(P, level);
    std::set<std::string> out;
    for (int k = 0; k < oc.size(); ++k)
        if (classify_class(P, oc, k) == Smoothness::NotRationallySmooth) {
            const Clan& g = P.orbit(oc.representative(k));
            out.insert(compressed ? encode_compressed(g) : to_string(g));
        }
    return out;
}

std::vector<Family> cross_validation_families()
{
    std::vector<Family> fs;
    for (int p = 0; p <= 6; ++p)
        for (int q = 0; p + q <= 6; ++q)
            if (p + q)
                fs.push_back(Family::a(p, q));
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q)
            if (p + q)
                fs.push_back(Family::c(p, q));
    fs.push_back(Family::c(2, 2));
    for (int n = 1; n <= 4; ++n)
        fs.push_back(Family::d(n));
    return fs;
}

// ---------------------------------------------------------------------------

Outcome criterion_1()
{
    Outcome out;
    OrbitPoset P = build_poset(Family::a(2, 2));
    std::map<int, int> rows;
    for (int d : P.dims())
        ++rows[d];
    std::vector<int> sizes;
    for (int d = 2; d <= 6; ++d)
        sizes.push_back(rows[d]);
    out.expect(P.size() == 21, "orbit count " + std::to_string(P.size()));
    out.expect(rows.size() == 5 && rows.begin()->first == 2, "dimensions do not span 2..6");
    out.expect(sizes == std::vector<int>{6, 6, 5, 3, 1}, "row sizes " + join(sizes));
    auto boxed = boxed_names(P, Isogeny::SC, false);
    out.expect(boxed == std::set<std::string>{"1+-1", "1212", "1-+1"}, "boxed set differs");
    check_fixture(out, fixture("fig1"), P);
    out.summary = "A(2,2): " + std::to_string(P.size()) + " orbits, rows " + join(sizes) + ", " +
                  std::to_string(boxed.size()) + " boxed";
    return out;
}

Outcome criterion_2()
{
    Outcome out;
    OrbitPoset P = build_poset(Family::c(2, 2));
    OrbitClasses oc = isogeny_classes(P, Isogeny::Adjoint);
    auto boxed = boxed_names(P, Isogeny::Adjoint, false);
    out.expect(P.size() == 42, "orbit count " + std::to_string(P.size()));
    out.expect(oc.size() == 27, "class count " + std::to_string(oc.size()));
    out.expect(boxed.size() == 13, "boxed classes " + std::to_string(boxed.size()));
    Fixture fx = fixture("fig2");
    bool erratum = false;
    for (const auto& e : fx.errata_applied)
        erratum = erratum || e.find("++----++") != std::string::npos;
    out.expect(erratum, "the ++----++ vertex erratum was not applied");
    check_fixture(out, fx, P);
    out.summary = "C(2,2): " + std::to_string(P.size()) + " orbits, " + std::to_string(oc.size()) +
                  " flip classes, " + std::to_string(boxed.size()) + " boxed, " +
                  std::to_string(fx.errata_applied.size()) + " errata applied";
    return out;
}

Outcome criterion_3()
{
    Outcome out;
    Fixture fx = fixture("fig3");
    OrbitPoset P = build_poset(comparison_family(fx));
    out.expect(P.size() == 10, "orbit count " + std::to_string(P.size()));
    auto boxed = boxed_names(P, Isogeny::SC, false);
    out.expect(boxed.empty(), "non-smooth orbits present");
    int vertex_errata = 0;
    for (const auto& e : fx.errata_applied)
        vertex_errata += e.rfind("vertex", 0) == 0;
    out.expect(vertex_errata == 2, "vertex errata applied: " + std::to_string(vertex_errata));
    check_fixture(out, fx, P);
    out.summary = "D(3): " + std::to_string(P.size()) + " orbits, " + std::to_string(boxed.size()) +
                  " boxed, figure convention flipped, " + std::to_string(vertex_errata) + " vertex errata";
    return out;
}

Outcome criterion_4()
{
    Outcome out;
    Fixture fx = fixture("fig4");
    OrbitPoset P = build_poset(comparison_family(fx));
    out.expect(P.size() == 38, "orbit count " + std::to_string(P.size()));
    auto boxed = boxed_names(P, Isogeny::SC, true);
    const std::set<std::string> expected{"AA++", "ABAB", "AA--", "A+A+", "ABBA", "A-A-", "a+-a", "abab", "a-+a"};
    out.expect(boxed == expected, "boxed set differs");
    check_fixture(out, fx, P);
    out.summary = "D(4): " + std::to_string(P.size()) + " orbits, " + std::to_string(boxed.size()) + " boxed";
    return out;
}

Outcome criterion_5()
{
    Outcome out;
    int families = 0, orbits = 0, nonsmooth = 0;
    for (const Family& f : cross_validation_families()) {
        CrossValidation cv = cross_validate(build_poset(f));
        ++families;
        orbits += cv.orbits;
        nonsmooth += cv.nonsmooth;
        for (const auto& m : cv.mismatches)
            out.fail(cv.family + " " + to_string(m.orbit) + ": patterns " + to_string(m.pattern) + ", Springer " +
                     (m.springer_smooth ? "smooth" : "not smooth"));
    }
    out.summary = std::to_string(families) + " families, " + std::to_string(orbits) + " orbits, " +
                  std::to_string(nonsmooth) + " not rationally smooth";
    return out;
}

// Pairs of family members whose order differs from the ambient U(p,q) order.
int restriction_mismatches(Outcome& out, const Family& f, const Family& ambient)
{
    OrbitPoset P = build_poset(f);
    OrbitPoset A = build_poset(ambient);
    int bad = 0;
    for (OrbitId a = 0; a < P.size(); ++a)
        for (OrbitId b = 0; b < P.size(); ++b) {
            bool own = P.le(a, b);
            bool amb = A.le(P.orbit(a), P.orbit(b));
            if (own != amb) {
                ++bad;
                out.fail(f.name() + ": " + to_string(P.orbit(a)) + (amb ? " <= " : " !<= ") + to_string(P.orbit(b)) +
                         " in " + ambient.name() + " but " + (own ? "<=" : "not <=") + " in " + f.name());
            }
        }
    return bad;
}

Outcome criterion_6()
{
    Outcome out;
    std::string c_report, d_report;
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q)
            if (p + q)
                c_report += " " + std::to_string(restriction_mismatches(out, Family::c(p, q), Family::a(2 * p, 2 * q)));
    for (int n = 1; n <= 4; ++n)
        d_report += " " + std::to_string(restriction_mismatches(out, Family::d(n), Family::a(n, n)));
    out.summary = "differing pairs, C p+q<=3:" + c_report + "; D n=1..4:" + d_report;
    return out;
}

Outcome criterion_7()
{
    Outcome out;
    std::vector<Family> fs = cross_validation_families();
    fs.push_back(Family::d(5));
    for (int n = 1; n <= 5; ++n)
        fs.push_back(Family::d(n, Convention::Figure));
    for (const Family& f : fs) {
        OrbitPoset P = build_poset(f);
        const std::string name = f.name();
        for (const auto& e : P.covers())
            out.expect(P.dim(e.hi) == P.dim(e.lo) + 1, name + ": ungraded cover");
        auto maxima = P.maxima();
        out.expect(maxima.size() == 1, name + ": " + std::to_string(maxima.size()) + " maximal orbits");
        if (maxima.size() == 1) {
            const Clan& top = P.orbit(maxima[0]);
            Clan expected = f.kind == Kind::A ? gamma_circ_a(f.p, f.q)
                            : f.kind == Kind::C ? gamma_circ_c(f.p, f.q)
                                                : gamma_circ_d(f.n);
            if (f.kind == Kind::D && f.convention == Convention::Figure && f.n % 2)
                expected = negate(expected);
            out.expect(top == expected, name + ": maximum " + to_string(top) + ", expected " + to_string(expected));
            int roots = f.kind == Kind::A ? f.n * (f.n - 1) / 2 : f.kind == Kind::C ? f.n * f.n : f.n * (f.n - 1);
            out.expect(P.dim(maxima[0]) == roots, name + ": open orbit dimension " + std::to_string(P.dim(maxima[0])));
        }
        std::vector<OrbitId> signs;
        for (OrbitId o = 0; o < P.size(); ++o)
            if (P.orbit(o).all_signs())
                signs.push_back(o);
        out.expect(P.minima() == signs, name + ": minima are not the all-sign clans");
        for (OrbitId o : signs)
            out.expect(P.dim(o) == f.d_k(), name + ": closed orbit off the bottom row");
    }
    out.summary = std::to_string(fs.size()) + " posets";
    return out;
}

Outcome criterion_8()
{
    Outcome out;
    std::vector<Family> fs;
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; p + q <= 5; ++q)
            if (p + q >= 2)
                fs.push_back(Family::a(p, q));
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; p + q <= 4; ++q)
            if (p + q)
                fs.push_back(Family::c(p, q));
    for (int n = 2; n <= 4; ++n) {
        fs.push_back(Family::d(n));
        fs.push_back(Family::d(n, Convention::Figure));
    }
    long words = 0;
    for (const Family& f : fs) {
        WellDefinedness w = check_reduced_words(f, 4);
        words += w.words;
        for (const auto& v : w.violations)
            out.fail(v);
    }
    out.summary = std::to_string(fs.size()) + " families, " + std::to_string(words) + " reduced words of length <= 4";
    return out;
}

// Sum over k pairs: C(n,2k) positions, (2k-1)!! matchings, C(n-2k,p-k) sign placements.
std::uint64_t closed_form(int p, int q)
{
    auto choose = [](int n, int k) -> std::uint64_t {
        if (k < 0 || k > n)
            return 0;
        std::uint64_t r = 1;
        for (int i = 1; i <= k; ++i)
            r = r * (n - k + i) / i;
        return r;
    };
    const int n = p + q;
    std::uint64_t total = 0;
    for (int k = 0; k <= std::min(p, q); ++k) {
        std::uint64_t matchings = 1;
        for (int odd = 2 * k - 1; odd > 1; odd -= 2)
            matchings *= odd;
        total += choose(n, 2 * k) * matchings * choose(n - 2 * k, p - k);
    }
    return total;
}

Outcome criterion_9()
{
    Outcome out;
    std::uint64_t total = 0;
    int cases = 0;
    for (int p = 0; p <= 8; ++p)
        for (int q = 0; p + q <= 8; ++q) {
            std::uint64_t formula = closed_form(p, q);
            std::uint64_t got = 0;
            std::set<Clan> seen;
            for_each_clan(p, q, [&](const Clan& g) {
                ++got;
                seen.insert(g);
                if (g.signature() != std::make_pair(p, q))
                    out.fail("wrong signature " + to_string(g));
            });
            out.expect(got == formula && seen.size() == got,
                       "(" + std::to_string(p) + "," + std::to_string(q) + "): enumerated " + std::to_string(got) +
                           ", formula " + std::to_string(formula));
            out.expect(clan_count(p, q) == formula, "clan_count disagrees at " + std::to_string(p) + "," +
                                                         std::to_string(q));
            total += got;
            ++cases;
        }
    out.summary = std::to_string(cases) + " signatures, " + std::to_string(total) + " clans, (4,4) -> " +
                  std::to_string(closed_form(4, 4));
    return out;
}

Outcome criterion_10()
{
    Outcome out;
    int checked = 0;
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; p + q <= 6; ++q) {
            if (!p && !q)
                continue;
            Family f = Family::a(p, q), g = Family::a(q, p);
            for (const auto& x : f.members()) {
                ++checked;
                out.expect(classify(f, x) == classify(g, negate(x)), f.name() + " " + to_string(x) + " vs its negation");
            }
        }
    for (int p = 1; p <= 2; ++p) {
        Family f = Family::c(p, p);
        for (const auto& x : f.members()) {
            ++checked;
            out.expect(classify(f, x) == classify(f, negate(x)), f.name() + " " + to_string(x) + " vs its negation");
        }
    }
    for (int n = 1; n <= 4; ++n)
        for (Convention conv : {Convention::Paper, Convention::Figure}) {
            Family f = Family::d(n, conv);
            OrbitPoset P = build_poset(f);
            std::vector<OrbitId> img(P.size());
            for (OrbitId o = 0; o < P.size(); ++o) {
                Clan t = tau(P.orbit(o));
                auto id = P.find(t);
                out.expect(id.has_value(), f.name() + ": tau leaves the family at " + to_string(P.orbit(o)));
                if (!id)
                    continue;
                img[o] = *id;
                out.expect(tau(t) == P.orbit(o), f.name() + ": tau is not an involution");
                out.expect(P.dim(*id) == P.dim(o), f.name() + ": tau changes the dimension of " + to_string(t));
                out.expect(classify(f, t) == classify(f, P.orbit(o)), f.name() + ": tau changes the verdict");
                ++checked;
            }
            for (OrbitId a = 0; a < P.size(); ++a)
                for (OrbitId b = 0; b < P.size(); ++b)
                    out.expect(P.le(a, b) == P.le(img[a], img[b]),
                               f.name() + ": tau breaks " + to_string(P.orbit(a)) + " vs " + to_string(P.orbit(b)));
        }
    out.summary = std::to_string(checked) + " orbits checked";
    return out;
}

Outcome criterion_11()
{
    Outcome out;
    Family f = Family::d(5);
    std::uint64_t ambient = clan_count(5, 5);
    OrbitPoset P = build_poset(f);
    CrossValidation cv = cross_validate(P);
    for (const auto& m : cv.mismatches)
        out.fail(to_string(m.orbit) + ": patterns " + to_string(m.pattern));
    int completed = 0;
    for (const auto& e : P.covers())
        completed += e.completed();
    out.summary = "D(5): " + std::to_string(ambient) + " ambient clans, " + std::to_string(P.size()) + " orbits, " +
                  std::to_string(P.covers().size()) + " covers (" + std::to_string(completed) + " completed), " +
                  std::to_string(cv.nonsmooth) + " not rationally smooth, " + std::to_string(cv.mismatches.size()) +
                  " mismatches";
    return out;
}

const std::vector<std::function<Outcome()>> kCriteria{
    criterion_1, criterion_2, criterion_3, criterion_4,  criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11};

bool run(int c)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = kCriteria[c - 1]();
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (kBudget[c] > 0 && secs > kBudget[c])
        out.fail("over budget: " + std::to_string(secs) + " s > " + std::to_string(kBudget[c]) + " s");
    std::ostringstream budget;
    if (kBudget[c] > 0)
        budget << " / " << kBudget[c] << " s";
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << c << " (" << std::fixed << std::setprecision(3)
              << secs << " s" << budget.str() << "): " << out.summary << "\n";
    for (std::size_t i = 0; i < out.details.size() && i < 4 * kShown; ++i)
        std::cout << "    " << out.details[i] << "\n";
    return out.pass;
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<int> which;
    for (int i = 1; i < argc; ++i) {
        int c = std::atoi(argv[i]);
        if (c < 1 || c > static_cast<int>(kCriteria.size())) {
            std::cerr << "usage: acceptance [criterion 1-11 ...]\n";
            return 2;
        }
        which.push_back(c);
    }
    if (which.empty())
        for (int c = 1; c <= static_cast<int>(kCriteria.size()); ++c)
            which.push_back(c);
    bool ok = true;
    for (int c : which)
        ok = run(c) && ok;
    return ok ? 0 : 1;
}

// clanorb: list, draw and verify K-orbit posets for U(p,q), Sp(p,q) and SO*(2n).

#include "clanorb/fixtures.hpp"
#include "clanorb/poset_io.hpp"

#include <CLI11.hpp>

#include <deque>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#ifndef CLANORB_FIXTURE_DIR
#define CLANORB_FIXTURE_DIR "data/figures"
#endif

using namespace clanorb;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct RunConfig {
    std::string family;
    std::optional<int> p, q, n;
    std::string isogeny = "sc";
    std::string convention = "paper";
    std::string format;
    std::string dot;
    std::string cache_dir;
    std::uint64_t max_orbits = kDefaultEnumerationCap;
    std::string fixture_dir = CLANORB_FIXTURE_DIR;
    std::string fixture;
    std::string target;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Isogeny isogeny_of(const std::string& s)
{
    if (s == "sc")
        return Isogeny::SC;
    if (s == "so")
        return Isogeny::SO;
    if (s == "so-prime")
        return Isogeny::SOPrime;
    return Isogeny::Adjoint;
}

Family family_of(const RunConfig& c)
{
    if (c.family.empty())
        throw UsageError("--family is required");
    const Convention conv = c.convention == "figure" ? Convention::Figure : Convention::Paper;
    if (c.family == "d") {
        if (!c.n)
            throw UsageError("family d takes --n");
        if (c.p || c.q)
            throw UsageError("family d takes --n, not --p/--q");
        return Family::d(*c.n, conv);
    }
    if (c.n)
        throw UsageError("family " + c.family + " takes --p and --q, not --n");
    if (!c.p || !c.q)
        throw UsageError("family " + c.family + " needs both --p and --q");
    if (conv == Convention::Figure)
        throw UsageError("--convention only applies to family d");
    return c.family == "a" ? Family::a(*c.p, *c.q) : Family::c(*c.p, *c.q);
}

OrbitPoset load_poset(const RunConfig& c, const Family& f)
{
    if (!c.cache_dir.empty())
        return cached_poset(f, c.cache_dir, c.max_orbits);
    return build_poset(f, c.max_orbits);
}

std::string format_or(const RunConfig& c, const std::string& fallback) { return c.format.empty() ? fallback : c.format; }

int cmd_list(const RunConfig& c)
{
    const Family f = family_of(c);
    const std::string fmt = format_or(c, "tsv");
    if (fmt == "dot")
        throw UsageError("list prints json or tsv; use 'poset --format dot' for drawings");
    OrbitPoset poset = load_poset(c, f);
    OrbitClasses oc = isogeny_classes(poset, isogeny_of(c.isogeny));
    auto rows = orbit_rows(poset, oc);
    if (fmt == "json")
        std::cout << rows_to_json(rows).dump(1) << "\n";
    else
        std::cout << rows_to_tsv(rows);
    return kPass;
}

int cmd_poset(const RunConfig& c)
{
    const Family f = family_of(c);
    OrbitPoset poset = load_poset(c, f);
    const Isogeny level = isogeny_of(c.isogeny);
    OrbitClasses oc = isogeny_classes(poset, level);

    if (!c.dot.empty()) {
        std::ofstream out(c.dot, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write " + c.dot);
        out << poset_to_dot(poset, oc);
        std::cout << f.name() << ": " << oc.size() << " vertices written to " << c.dot << "\n";
        return kPass;
    }
    const std::string fmt = format_or(c, "json");
    if (fmt == "dot") {
        std::cout << poset_to_dot(poset, oc);
    } else if (fmt == "tsv") {
        std::cout << "lo\thi\torigin\n";
        for (const auto& e : poset.covers())
            std::cout << to_string(poset.orbit(e.lo)) << '\t' << to_string(poset.orbit(e.hi)) << '\t'
                      << (e.root ? std::to_string(e.root->index) : "completed") << '\n';
    } else {
        nlohmann::json j = poset_to_json(poset);
        if (oc.size() != poset.size()) {
            j["isogeny"] = to_string(level);
            auto& cls = j["classes"] = nlohmann::json::array();
            for (const auto& k : oc.classes) {
                std::vector<std::string> names;
                for (OrbitId x : k)
                    names.push_back(to_string(poset.orbit(x), TextStyle::Comma));
                cls.push_back(names);
            }
        }
        std::cout << j.dump(1) << "\n";
    }
    return kPass;
}

int verify_springer(const RunConfig& c)
{
    const Family f = family_of(c);
    OrbitPoset poset = load_poset(c, f);
    CrossValidation cv = cross_validate(poset);
    std::cout << cv.family << ": " << cv.orbits << " orbits, " << cv.nonsmooth << " not rationally smooth by patterns, "
              << cv.springer_nonsmooth << " by Springer, " << cv.mismatches.size() << " mismatches\n";
    for (const auto& m : cv.mismatches)
        std::cout << "  mismatch " << to_string(m.orbit) << ": patterns say " << to_string(m.pattern)
                  << ", Springer says " << (m.springer_smooth ? "smooth" : "not-rationally-smooth") << "\n";

    const Isogeny level = isogeny_of(c.isogeny);
    OrbitClasses oc = isogeny_classes(poset, level);
    if (oc.size() != poset.size()) {
        SpringerTable table(poset);
        int bad = 0, differ = 0;
        for (int k = 0; k < oc.size(); ++k) {
            bool smooth = rationally_smooth_quotient(table, oc, k);
            bad += !smooth;
            differ += smooth != (classify_class(poset, oc, k) == Smoothness::Smooth);
        }
        std::cout << "  " << to_string(level) << " quotient: " << oc.size() << " classes, " << bad
                  << " fail the quotient inequality, " << differ << " differ from the orbit verdict (informational)\n";
    }
    std::cout << (cv.ok() ? "PASS" : "FAIL") << "\n";
    return cv.ok() ? kPass : kFail;
}

int verify_figures(const RunConfig& c)
{
    std::vector<std::string> ids{"fig1", "fig2", "fig3", "fig4"};
    if (!c.fixture.empty())
        ids = {c.fixture};
    bool ok = true;
    for (const auto& id : ids) {
        Fixture fx = load_fixture(c.fixture_dir, id);
        OrbitPoset poset = build_poset(comparison_family(fx), c.max_orbits);
        FixtureComparison r = compare_fixture(fx, poset);
        std::cout << id << " " << fx.family.name() << " [" << to_string(fx.isogeny) << "]: " << r.vertices
                  << " vertices, " << r.boxed << " boxed, " << r.weak_edges << " weak and " << r.dashed_edges
                  << " dashed edges: " << (r.ok() ? "match" : "DIFFER") << "\n";
        for (const auto& e : fx.errata_applied)
            std::cout << "  erratum " << e << "\n";
        for (const auto& pr : r.problems)
            std::cout << "  " << pr << "\n";
        ok = ok && r.ok();
    }
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kPass : kFail;
}

// Orbits reached from the closed orbits by the monoid action alone.
int action_closure_size(const Family& f, const std::vector<Clan>& members)
{
    std::unordered_set<Clan, ClanHash> seen;
    std::deque<Clan> todo;
    for (const auto& g : members)
        if (g.all_signs() && seen.insert(g).second)
            todo.push_back(g);
    while (!todo.empty()) {
        Clan g = todo.front();
        todo.pop_front();
        for (int a = 1; a <= f.rank(); ++a)
            if (auto h = monoid_action(f, g, RootLabel{a}); h && seen.insert(*h).second)
                todo.push_back(*h);
    }
    return static_cast<int>(seen.size());
}

int verify_counts(const RunConfig& c)
{
    const Family f = family_of(c);
    const Isogeny level = isogeny_of(c.isogeny);
    const bool fold = folds(f, level);
    std::vector<Clan> members = f.members(c.max_orbits);
    const int enumerated = static_cast<int>(members.size());
    const int reached = action_closure_size(f, members);
    bool ok = reached == enumerated;
    std::cout << f.name() << ": " << enumerated << " orbits";
    if (f.kind == Kind::A) {
        const auto formula = clan_count(f.p, f.q);
        std::cout << " (formula " << formula << ")";
        ok = ok && formula == static_cast<std::uint64_t>(enumerated);
    }
    std::cout << ", " << reached << " reached from the closed orbits\n";
    if (fold) {
        OrbitPoset poset = load_poset(c, f);
        std::cout << "  " << to_string(level) << ": " << isogeny_classes(poset, level).size() << " classes\n";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kPass : kFail;
}

int verify_oracle(const RunConfig& c)
{
    const Family f = family_of(c);
    if (f.kind != Kind::A)
        throw Error(Errc::BadConfig, "the raising-moves oracle is defined for family a only");
    OrbitPoset poset = load_poset(c, f);
    OracleComparison r = compare_with_oracle(poset);
    std::cout << f.name() << ": order has " << r.order_pairs << " strict relations, raising moves generate "
              << r.oracle_pairs << "; " << r.oracle_only << " outside the order, " << r.order_only
              << " not generated by the moves\n";
    for (const auto& [lo, hi] : r.order_only_examples)
        std::cout << "  not generated: " << to_string(lo) << " <= " << to_string(hi) << "\n";
    const bool ok = r.oracle_only == 0;
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kPass : kFail;
}

int cmd_verify(const RunConfig& c)
{
    if (c.target == "springer")
        return verify_springer(c);
    if (c.target == "figures")
        return verify_figures(c);
    if (c.target == "counts")
        return verify_counts(c);
    return verify_oracle(c);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"K-orbits on flag varieties via clans: U(p,q), Sp(p,q), SO*(2n)"};
    app.require_subcommand(1);
    RunConfig cfg;

    app.add_option("--family", cfg.family, "a: U(p,q), c: Sp(p,q), d: SO*(2n)")->check(CLI::IsMember({"a", "c", "d"}));
    app.add_option("--p", cfg.p, "first signature entry (families a, c)")->check(CLI::NonNegativeNumber);
    app.add_option("--q", cfg.q, "second signature entry (families a, c)")->check(CLI::NonNegativeNumber);
    app.add_option("--n", cfg.n, "rank (family d)")->check(CLI::PositiveNumber);
    app.add_option("--isogeny", cfg.isogeny, "group level")
        ->check(CLI::IsMember({"sc", "so", "so-prime", "adjoint"}))
        ->capture_default_str();
    app.add_option("--convention", cfg.convention, "parity convention for family d")
        ->check(CLI::IsMember({"paper", "figure"}))
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "dot", "tsv"}));
    app.add_option("--dot", cfg.dot, "write a Graphviz drawing to this path (poset)");
    app.add_option("--cache-dir", cfg.cache_dir, "reuse and store posets as JSON in this directory");
    app.add_option("--max-orbits", cfg.max_orbits, "refuse families with more ambient clans than this")
        ->capture_default_str();
    app.add_option("--fixture-dir", cfg.fixture_dir, "directory holding fig1..fig4 and errata.txt")
        ->capture_default_str();

    auto* list = app.add_subcommand("list", "one row per orbit or isogeny class");
    auto* poset = app.add_subcommand("poset", "the closure order as JSON, TSV covers or DOT");
    auto* verify = app.add_subcommand("verify", "springer | figures | counts | oracle");
    verify->add_option("target", cfg.target, "what to verify")
        ->required()
        ->check(CLI::IsMember({"springer", "figures", "counts", "oracle"}));
    verify->add_option("--fixture", cfg.fixture, "one figure only (verify figures)")
        ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4"}));
    for (auto* sub : {list, poset, verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*list)
            return cmd_list(cfg);
        if (*poset)
            return cmd_poset(cfg);
        return cmd_verify(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.code()) {
        case Errc::BadConfig:
        case Errc::SignatureMismatch:
        case Errc::RankTooLarge:
        case Errc::BadFixture:
            return kUsage;
        default:
            return kFail;
        }
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}

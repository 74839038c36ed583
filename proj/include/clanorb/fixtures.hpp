#pragma once

#include "clanorb/isogeny.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace clanorb {

/*
  Plain-text transcriptions of the four orbit diagrams. A fixture file
  has header lines (fixture, family, notation, isogeny, convention), then
  "vertex <name> [boxed]", "weak <lo> <hi> <label>" and "dashed <lo> <hi>"
  lines. Misprints are never edited in place: errata.txt lists them and
  load_fixture applies them, recording each one it used.
*/
struct FixtureEdge {
    std::string lo;
    std::string hi;
    std::optional<int> label; // nothing: dashed
};

struct Fixture {
    std::string id;
    Family family;
    bool compressed = false;
    Isogeny isogeny = Isogeny::SC;
    std::vector<std::string> vertices;
    std::set<std::string> boxed;
    std::vector<FixtureEdge> edges;
    std::vector<std::string> errata_applied;

    Clan decode(const std::string& name) const
    {
        Clan c = compressed ? decode_compressed(name) : parse_clan(name);
        if (family.kind == Kind::D && family.convention == Convention::Figure && family.n % 2)
            c = negate(c); // figure convention -> paper convention
        return c;
    }
};

namespace detail {

inline std::vector<std::string> words(const std::string& line)
{
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string w;
    while (is >> w)
        out.push_back(w);
    return out;
}

inline int to_int(const std::string& s, const std::string& ctx)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(Errc::BadFixture, "expected an integer in: " + ctx);
    }
}

inline std::optional<int> parse_style(const std::string& s, const std::string& ctx)
{
    if (s == "dashed")
        return std::nullopt;
    if (s.rfind("weak:", 0) == 0)
        return to_int(s.substr(5), ctx);
    throw Error(Errc::BadFixture, "edge style '" + s + "' in: " + ctx);
}

} // namespace detail

inline Fixture load_fixture(const std::string& dir, const std::string& id)
{
    std::ifstream in(dir + "/" + id + ".txt");
    if (!in)
        throw Error(Errc::BadFixture, "cannot open " + dir + "/" + id + ".txt");

    // errata first: vertex renames and edge restyles keyed by printed names
    std::map<std::string, std::string> rename;
    std::map<std::pair<std::string, std::string>, std::pair<std::optional<int>, std::optional<int>>> restyle;
    std::set<std::string> unused;
    std::ifstream er(dir + "/errata.txt");
    std::string line;
    while (er && std::getline(er, line)) {
        auto w = detail::words(line);
        if (w.empty() || w[0][0] == '#' || w[0] != id)
            continue;
        if (w.size() == 4 && w[1] == "vertex") {
            rename[w[2]] = w[3];
            unused.insert(line);
        } else if (w.size() == 6 && w[1] == "edge") {
            restyle[{w[2], w[3]}] = {detail::parse_style(w[4], line), detail::parse_style(w[5], line)};
            unused.insert(line);
        } else {
            throw Error(Errc::BadFixture, "errata line: " + line);
        }
    }

    Fixture fx;
    fx.id = id;
    std::optional<Family> family;
    Convention conv = Convention::Paper;
    std::vector<std::string> raw;
    while (std::getline(in, line)) {
        auto w = detail::words(line);
        if (w.empty() || w[0][0] == '#')
            continue;
        raw.push_back(line);
        if (w[0] == "convention" && w.size() == 2) {
            if (w[1] != "paper" && w[1] != "figure")
                throw Error(Errc::BadFixture, line);
            conv = w[1] == "paper" ? Convention::Paper : Convention::Figure;
        }
    }

    auto note = [&](const std::string& what) {
        if (std::find(fx.errata_applied.begin(), fx.errata_applied.end(), what) == fx.errata_applied.end())
            fx.errata_applied.push_back(what);
    };
    auto fix = [&](const std::string& name) {
        auto it = rename.find(name);
        if (it == rename.end())
            return name;
        for (const auto& u : std::set<std::string>(unused))
            if (detail::words(u)[1] == "vertex" && detail::words(u)[2] == name)
                unused.erase(u);
        note("vertex " + name + " -> " + it->second);
        return it->second;
    };

    for (const auto& l : raw) {
        auto w = detail::words(l);
        const std::string& key = w[0];
        if (key == "fixture") {
            if (w.size() != 2 || w[1] != id)
                throw Error(Errc::BadFixture, l);
        } else if (key == "family") {
            if (w.size() == 4 && w[1] == "a")
                family = Family::a(detail::to_int(w[2], l), detail::to_int(w[3], l));
            else if (w.size() == 4 && w[1] == "c")
                family = Family::c(detail::to_int(w[2], l), detail::to_int(w[3], l));
            else if (w.size() == 3 && w[1] == "d")
                family = Family::d(detail::to_int(w[2], l), conv);
            else
                throw Error(Errc::BadFixture, l);
        } else if (key == "notation") {
            if (w.size() != 2 || (w[1] != "plain" && w[1] != "compressed"))
                throw Error(Errc::BadFixture, l);
            fx.compressed = w[1] == "compressed";
        } else if (key == "isogeny") {
            static const std::map<std::string, Isogeny> levels{
                {"sc", Isogeny::SC}, {"so", Isogeny::SO}, {"so-prime", Isogeny::SOPrime}, {"adjoint", Isogeny::Adjoint}};
            if (w.size() != 2 || !levels.count(w[1]))
                throw Error(Errc::BadFixture, l);
            fx.isogeny = levels.at(w[1]);
        } else if (key == "convention") {
        } else if (key == "vertex") {
            if (w.size() < 2 || w.size() > 3 || (w.size() == 3 && w[2] != "boxed"))
                throw Error(Errc::BadFixture, l);
            std::string v = fix(w[1]);
            fx.vertices.push_back(v);
            if (w.size() == 3)
                fx.boxed.insert(v);
        } else if (key == "weak" || key == "dashed") {
            if ((key == "weak" && w.size() != 4) || (key == "dashed" && w.size() != 3))
                throw Error(Errc::BadFixture, l);
            std::optional<int> label;
            if (key == "weak")
                label = detail::to_int(w[3], l);
            auto rs = restyle.find({w[1], w[2]});
            if (rs != restyle.end() && rs->second.first == label) {
                label = rs->second.second;
                for (const auto& u : std::set<std::string>(unused))
                    if (detail::words(u)[1] == "edge" && detail::words(u)[2] == w[1] && detail::words(u)[3] == w[2])
                        unused.erase(u);
                note("edge " + w[1] + " -> " + w[2] + " restyled");
            }
            fx.edges.push_back({fix(w[1]), fix(w[2]), label});
        } else {
            throw Error(Errc::BadFixture, "unknown line: " + l);
        }
    }
    if (!family)
        throw Error(Errc::BadFixture, id + " has no family line");
    fx.family = *family;
    if (!unused.empty())
        throw Error(Errc::BadFixture, "erratum matches nothing: " + *unused.begin());
    return fx;
}

struct FixtureComparison {
    int vertices = 0;
    int classes = 0;
    int boxed = 0;
    int weak_edges = 0;
    int dashed_edges = 0;
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

/*
  Compares a fixture with a computed poset built in the paper convention.
  Vertices are matched by isogeny class, so a folded figure may show any
  member of each class. Weak edges carry their root labels; a dashed edge
  is a class cover that no weak edge explains.
*/
inline FixtureComparison compare_fixture(const Fixture& fx, const OrbitPoset& poset)
{
    FixtureComparison r;
    OrbitClasses oc = isogeny_classes(poset, fx.isogeny);
    r.classes = oc.size();
    r.vertices = static_cast<int>(fx.vertices.size());

    std::map<std::string, int> cls_of_name;
    std::map<int, std::string> name_of_cls;
    for (const auto& v : fx.vertices) {
        Clan c;
        try {
            c = fx.decode(v);
        } catch (const Error& e) {
            r.problems.push_back("vertex " + v + " does not parse: " + e.what());
            continue;
        }
        auto id = poset.find(c);
        if (!id) {
            r.problems.push_back("vertex " + v + " is not an orbit of " + poset.family().name());
            continue;
        }
        int k = oc.class_of[*id];
        if (name_of_cls.count(k))
            r.problems.push_back("vertices " + name_of_cls[k] + " and " + v + " are the same orbit class");
        name_of_cls[k] = v;
        cls_of_name[v] = k;
    }
    for (int k = 0; k < oc.size(); ++k)
        if (!name_of_cls.count(k))
            r.problems.push_back("orbit " + to_string(poset.orbit(oc.representative(k))) + " missing from figure");

    auto name = [&](int k) {
        auto it = name_of_cls.find(k);
        return it == name_of_cls.end() ? to_string(poset.orbit(oc.representative(k))) : it->second;
    };

    // boxes
    for (int k = 0; k < oc.size(); ++k) {
        bool bad = classify_class(poset, oc, k) == Smoothness::NotRationallySmooth;
        if (bad)
            ++r.boxed;
        bool printed = fx.boxed.count(name(k)) > 0;
        if (bad != printed)
            r.problems.push_back("vertex " + name(k) + (bad ? " is not rationally smooth but unboxed"
                                                            : " is smooth but boxed"));
    }

    // edges
    std::set<std::tuple<int, int, int>> weak_c, weak_f;
    std::set<std::pair<int, int>> dashed_c, dashed_f;
    for (const auto& cc : class_covers(poset, oc)) {
        if (cc.roots.empty())
            dashed_c.insert({cc.lo, cc.hi});
        for (int a : cc.roots)
            weak_c.insert({cc.lo, cc.hi, a});
    }
    for (const auto& e : fx.edges) {
        if (!cls_of_name.count(e.lo) || !cls_of_name.count(e.hi)) {
            r.problems.push_back("edge " + e.lo + " -> " + e.hi + " names an unknown vertex");
            continue;
        }
        int a = cls_of_name[e.lo];
        int b = cls_of_name[e.hi];
        if (e.label)
            weak_f.insert({a, b, *e.label});
        else
            dashed_f.insert({a, b});
    }
    r.weak_edges = static_cast<int>(weak_f.size());
    r.dashed_edges = static_cast<int>(dashed_f.size());
    for (const auto& [a, b, l] : weak_c)
        if (!weak_f.count({a, b, l}))
            r.problems.push_back("figure lacks weak edge " + name(a) + " -" + std::to_string(l) + "-> " + name(b));
    for (const auto& [a, b, l] : weak_f)
        if (!weak_c.count({a, b, l}))
            r.problems.push_back("figure has spurious weak edge " + name(a) + " -" + std::to_string(l) + "-> " +
                                 name(b));
    for (const auto& [a, b] : dashed_c)
        if (!dashed_f.count({a, b}))
            r.problems.push_back("figure lacks dashed edge " + name(a) + " -> " + name(b));
    for (const auto& [a, b] : dashed_f)
        if (!dashed_c.count({a, b}))
            r.problems.push_back("figure has spurious dashed edge " + name(a) + " -> " + name(b));
    return r;
}

/// The family a fixture is compared against: always the paper convention.
inline Family comparison_family(const Fixture& fx)
{
    Family f = fx.family;
    f.convention = Convention::Paper;
    return f;
}

} // namespace clanorb

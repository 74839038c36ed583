#pragma once

#include "clanorb/isogeny.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace clanorb {

inline constexpr int kCacheVersion = 1;

inline std::string family_tag(Kind k) { return k == Kind::A ? "a" : k == Kind::C ? "c" : "d"; }
inline std::string convention_tag(Convention c) { return c == Convention::Paper ? "paper" : "figure"; }

inline nlohmann::json poset_to_json(const OrbitPoset& poset)
{
    const Family& f = poset.family();
    nlohmann::json j;
    j["version"] = kCacheVersion;
    j["family"] = family_tag(f.kind);
    j["p"] = f.p;
    j["q"] = f.q;
    j["convention"] = convention_tag(f.convention);
    auto& orbits = j["orbits"] = nlohmann::json::array();
    for (const auto& g : poset.orbits())
        orbits.push_back(to_string(g, TextStyle::Comma));
    j["dims"] = poset.dims();
    auto& covers = j["covers"] = nlohmann::json::array();
    for (const auto& e : poset.covers()) {
        nlohmann::json c;
        c["lo"] = e.lo;
        c["hi"] = e.hi;
        if (e.root)
            c["origin"] = e.root->index;
        else
            c["origin"] = "completed";
        covers.push_back(c);
    }
    return j;
}

/// Rebuilds a poset from its JSON form, checking every invariant before use.
inline OrbitPoset poset_from_json(const nlohmann::json& j)
{
    try {
        if (!j.is_object() || !j.contains("version"))
            throw Error(Errc::CorruptCache, "not a poset document");
        if (j.at("version").get<int>() != kCacheVersion)
            throw Error(Errc::VersionMismatch,
                        "cache version " + j.at("version").dump() + ", expected " + std::to_string(kCacheVersion));
        const std::string fam = j.at("family").get<std::string>();
        const int p = j.at("p").get<int>();
        const int q = j.at("q").get<int>();
        const std::string conv = j.at("convention").get<std::string>();
        if (conv != "paper" && conv != "figure")
            throw Error(Errc::CorruptCache, "convention " + conv);
        Family f;
        if (fam == "a")
            f = Family::a(p, q);
        else if (fam == "c")
            f = Family::c(p, q);
        else if (fam == "d" && p == q)
            f = Family::d(p, conv == "paper" ? Convention::Paper : Convention::Figure);
        else
            throw Error(Errc::CorruptCache, "family " + fam);

        std::vector<Clan> orbits;
        for (const auto& s : j.at("orbits"))
            orbits.push_back(parse_clan(s.get<std::string>()));
        std::vector<CoverEdge> covers;
        for (const auto& c : j.at("covers")) {
            CoverEdge e{c.at("lo").get<int>(), c.at("hi").get<int>(), std::nullopt};
            const auto& o = c.at("origin");
            if (o.is_number_integer())
                e.root = RootLabel{o.get<int>()};
            else if (!(o.is_string() && o.get<std::string>() == "completed"))
                throw Error(Errc::CorruptCache, "cover origin " + o.dump());
            covers.push_back(e);
        }
        OrbitPoset poset(f, std::move(orbits), std::move(covers));

        if (j.at("dims").get<std::vector<int>>() != poset.dims())
            throw Error(Errc::CorruptCache, "stored dimensions disagree with the dimension formula");
        std::vector<Clan> sorted = poset.orbits();
        Family::sort_canonical(sorted);
        if (sorted != poset.orbits() || static_cast<int>(f.members().size()) != poset.size())
            throw Error(Errc::CorruptCache, "orbit list is not the sorted family");
        for (const auto& e : poset.covers()) {
            if (!e.root)
                continue;
            auto r = monoid_action(f, poset.orbit(e.lo), *e.root);
            if (!r || *r != poset.orbit(e.hi))
                throw Error(Errc::CorruptCache, "weak edge disagrees with the monoid action");
        }
        for (std::size_t i = 1; i < poset.covers().size(); ++i) {
            const auto& a = poset.covers()[i - 1];
            const auto& b = poset.covers()[i];
            if (a.lo == b.lo && a.hi == b.hi && (a.completed() || b.completed()))
                throw Error(Errc::CorruptCache, "completed edge duplicates another cover");
        }
        poset.open_orbit();
        std::vector<OrbitId> closed = poset.closed_orbits();
        if (poset.minima() != closed)
            throw Error(Errc::CorruptCache, "minimal orbits are not the closed orbits");
        return poset;
    } catch (const Error& e) {
        if (e.code() == Errc::VersionMismatch || e.code() == Errc::CorruptCache)
            throw;
        throw Error(Errc::CorruptCache, e.what());
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::CorruptCache, e.what());
    } catch (const std::logic_error& e) {
        throw Error(Errc::CorruptCache, e.what());
    }
}

inline std::string serialize_poset(const OrbitPoset& poset) { return poset_to_json(poset).dump(1) + "\n"; }

inline std::filesystem::path cache_path(const std::filesystem::path& dir, const Family& f)
{
    return dir / ("poset-" + family_tag(f.kind) + "-" + std::to_string(f.p) + "-" + std::to_string(f.q) + "-" +
                  convention_tag(f.convention) + ".json");
}

inline void cache_store(const OrbitPoset& poset, const std::filesystem::path& file)
{
    if (file.has_parent_path())
        std::filesystem::create_directories(file.parent_path());
    std::ofstream out(file, std::ios::binary);
    if (!out)
        throw Error(Errc::CorruptCache, "cannot write " + file.string());
    out << serialize_poset(poset);
}

inline OrbitPoset cache_load(const std::filesystem::path& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw Error(Errc::CorruptCache, "cannot read " + file.string());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::CorruptCache, file.string() + ": " + e.what());
    }
    return poset_from_json(j);
}

/// Loads the poset for f from dir when present and valid, else builds and stores it.
inline OrbitPoset cached_poset(const Family& f, const std::filesystem::path& dir,
                               std::uint64_t cap = kDefaultEnumerationCap)
{
    auto file = cache_path(dir, f);
    if (std::filesystem::exists(file)) {
        OrbitPoset p = cache_load(file);
        if (p.family() == f)
            return p;
    }
    OrbitPoset p = build_poset(f, cap);
    cache_store(p, file);
    return p;
}

// ---------------------------------------------------------------------------
// Orbit tables and drawings

struct OrbitRow {
    std::string clan;
    std::vector<std::string> members;
    int dim = 0;
    bool closed = false;
    Smoothness smooth = Smoothness::Smooth;
    bool springer_smooth = true;
    std::string witness;
};

inline std::vector<OrbitRow> orbit_rows(const OrbitPoset& poset, const OrbitClasses& oc)
{
    SpringerTable table(poset);
    const bool folded = oc.size() != poset.size();
    std::vector<OrbitRow> rows;
    for (int k = 0; k < oc.size(); ++k) {
        OrbitId rep = oc.representative(k);
        OrbitRow r;
        r.clan = to_string(poset.orbit(rep));
        for (OrbitId x : oc.classes[k])
            r.members.push_back(to_string(poset.orbit(x)));
        r.dim = poset.dim(rep);
        r.closed = poset.orbit(rep).all_signs();
        r.smooth = classify_class(poset, oc, k);
        r.springer_smooth = folded ? rationally_smooth_quotient(table, oc, k) : table.rationally_smooth(rep);
        r.witness = lemma_witness(poset.family(), poset.orbit(rep));
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(), [](const OrbitRow& a, const OrbitRow& b) { return a.clan < b.clan; });
    return rows;
}

inline std::string rows_to_tsv(const std::vector<OrbitRow>& rows)
{
    std::ostringstream os;
    os << "clan\tdim\tclosed\tsmooth\tspringer\twitness\tmembers\n";
    for (const auto& r : rows) {
        std::string members;
        for (const auto& m : r.members)
            members += (members.empty() ? "" : " ") + m;
        os << r.clan << '\t' << r.dim << '\t' << (r.closed ? "yes" : "no") << '\t' << to_string(r.smooth) << '\t'
           << (r.springer_smooth ? "smooth" : "not-rationally-smooth") << '\t' << (r.witness.empty() ? "-" : r.witness)
           << '\t' << members << '\n';
    }
    return os.str();
}

inline nlohmann::json rows_to_json(const std::vector<OrbitRow>& rows)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["clan"] = r.clan;
        j["members"] = r.members;
        j["dim"] = r.dim;
        j["closed"] = r.closed;
        j["smooth"] = r.smooth == Smoothness::Smooth;
        j["springer_smooth"] = r.springer_smooth;
        if (!r.witness.empty())
            j["witness"] = r.witness;
        arr.push_back(j);
    }
    return arr;
}

/// Graphviz drawing: one rank per dimension, dashed completed edges, boxed non-smooth orbits.
inline std::string poset_to_dot(const OrbitPoset& poset, const OrbitClasses& oc)
{
    std::ostringstream os;
    auto label = [&](int k) { return to_string(poset.orbit(oc.representative(k))); };
    os << "digraph \"" << poset.family().name() << "\" {\n";
    os << "  rankdir=LR;\n  node [shape=plaintext];\n";
    std::map<int, std::vector<int>> by_dim;
    for (int k = 0; k < oc.size(); ++k)
        by_dim[poset.dim(oc.representative(k))].push_back(k);
    for (auto& [d, ks] : by_dim) {
        std::sort(ks.begin(), ks.end(), [&](int a, int b) { return label(a) < label(b); });
        os << "  { rank=same; // dim " << d << "\n";
        for (int k : ks) {
            os << "    \"" << label(k) << "\"";
            if (classify_class(poset, oc, k) == Smoothness::NotRationallySmooth)
                os << " [shape=box]";
            os << ";\n";
        }
        os << "  }\n";
    }
    std::vector<std::string> edges;
    for (const auto& cc : class_covers(poset, oc)) {
        std::string head = "  \"" + label(cc.lo) + "\" -> \"" + label(cc.hi) + "\"";
        if (cc.roots.empty())
            edges.push_back(head + " [style=dashed];");
        for (int a : cc.roots)
            edges.push_back(head + " [label=\"" + std::to_string(a) + "\"];");
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges)
        os << e << "\n";
    os << "}\n";
    return os.str();
}

} // namespace clanorb

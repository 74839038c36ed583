#pragma once

#include "clanorb/springer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace clanorb {

inline std::string to_string(Isogeny level)
{
    switch (level) {
    case Isogeny::SC: return "sc";
    case Isogeny::SO: return "so";
    case Isogeny::SOPrime: return "so-prime";
    case Isogeny::Adjoint: return "adjoint";
    }
    return "?";
}

/// Orbits of a quotient group: classes of orbits of the simply connected one.
struct OrbitClasses {
    std::vector<std::vector<OrbitId>> classes; // each sorted; representative first
    std::vector<int> class_of;

    int size() const { return static_cast<int>(classes.size()); }
    OrbitId representative(int c) const { return classes[c].front(); }
};

/// The involution that fuses orbits at this level, or none.
inline bool folds(const Family& f, Isogeny level)
{
    switch (f.kind) {
    case Kind::A:
    case Kind::C:
        if (level == Isogeny::SO || level == Isogeny::SOPrime)
            throw Error(Errc::BadConfig, "isogeny level " + to_string(level) + " only exists for type D");
        return level == Isogeny::Adjoint && f.p == f.q;
    case Kind::D:
        if (f.n % 2)
            return false;
        return level == Isogeny::Adjoint || (level == Isogeny::SOPrime && (f.n / 2) % 2 == 1);
    }
    return false;
}

inline Clan fusing_involution(const Family& f, const Clan& g) { return f.kind == Kind::D ? tau(g) : negate(g); }

inline OrbitClasses isogeny_classes(const OrbitPoset& poset, Isogeny level)
{
    const Family& f = poset.family();
    const bool fold = folds(f, level);
    OrbitClasses out;
    out.class_of.assign(poset.size(), -1);
    for (OrbitId g = 0; g < poset.size(); ++g) {
        if (out.class_of[g] >= 0)
            continue;
        std::vector<OrbitId> cls{g};
        if (fold) {
            OrbitId h = poset.id_of(fusing_involution(f, poset.orbit(g)));
            if (h != g)
                cls.push_back(h);
        }
        std::sort(cls.begin(), cls.end());
        for (OrbitId x : cls)
            out.class_of[x] = out.size();
        out.classes.push_back(std::move(cls));
    }
    return out;
}

struct ClassCover {
    int lo = 0;
    int hi = 0;
    std::set<int> roots; // empty: only completed edges join the two classes
};

/// Covers between classes, induced from the orbit covers.
inline std::vector<ClassCover> class_covers(const OrbitPoset& poset, const OrbitClasses& oc)
{
    std::map<std::pair<int, int>, ClassCover> m;
    for (const auto& e : poset.covers()) {
        int a = oc.class_of[e.lo];
        int b = oc.class_of[e.hi];
        auto& cc = m[{a, b}];
        cc.lo = a;
        cc.hi = b;
        if (e.root)
            cc.roots.insert(e.root->index);
    }
    std::vector<ClassCover> out;
    for (auto& [k, v] : m)
        out.push_back(v);
    return out;
}

inline bool class_le(const OrbitPoset& poset, const OrbitClasses& oc, int a, int b)
{
    for (OrbitId x : oc.classes[a])
        for (OrbitId y : oc.classes[b])
            if (poset.le(x, y))
                return true;
    return false;
}

/*
  Springer's inequality evaluated on the quotient poset. For a closed class
  below the class of gamma, the roots are those of a member lying below a
  member of gamma's class, and a root counts when the class of its moved
  orbit lies below gamma's class.
*/
inline bool rationally_smooth_quotient(const SpringerTable& table, const OrbitClasses& oc, int cls)
{
    const OrbitPoset& poset = table.poset();
    const OrbitId rep = oc.representative(cls);
    for (OrbitId c : poset.closed_orbits()) {
        if (oc.representative(oc.class_of[c]) != c)
            continue;
        std::optional<OrbitId> member;
        for (OrbitId x : oc.classes[oc.class_of[c]])
            for (OrbitId y : oc.classes[cls])
                if (!member && poset.le(x, y))
                    member = x;
        if (!member)
            continue;
        int s = 0;
        for (const auto& [root, m] : table.moved(*member))
            if (class_le(poset, oc, oc.class_of[m], cls))
                ++s;
        if (s > poset.dim(rep) - poset.dim(*member))
            return false;
    }
    return true;
}

/// Pattern verdict of a class; every member must agree.
inline Smoothness classify_class(const OrbitPoset& poset, const OrbitClasses& oc, int cls)
{
    Smoothness s = classify(poset.family(), poset.orbit(oc.representative(cls)));
    for (OrbitId x : oc.classes[cls])
        if (classify(poset.family(), poset.orbit(x)) != s)
            throw std::logic_error("class of " + to_string(poset.orbit(x)) + " mixes verdicts");
    return s;
}

} // namespace clanorb

#pragma once

#include "clanorb/family.hpp"

#include <set>
#include <utility>
#include <vector>

namespace clanorb {

/// A root that moves a closed orbit, together with the orbit it moves to.
struct NoncompactRoot {
    PositiveRoot root;
    Clan moved;
};

inline int dimension_a(const Family& f, const Clan& g)
{
    if (f.kind != Kind::A)
        throw Error(Errc::SignatureMismatch, "dimension_a on " + f.name());
    return f.dimension(g);
}

inline Smoothness classify_a(const Family& f, const Clan& g)
{
    f.require(g);
    return avoids_bad_patterns(g) ? Smoothness::Smooth : Smoothness::NotRationallySmooth;
}

/// Classes of Sigma(p,q) under gamma ~ -gamma when p = q, singletons otherwise.
inline std::vector<std::vector<Clan>> isogeny_classes_a(int p, int q)
{
    Family f = Family::a(p, q);
    std::vector<std::vector<Clan>> out;
    std::set<Clan> done;
    for (const Clan& g : f.members()) {
        if (done.count(g))
            continue;
        std::vector<Clan> cls{g};
        done.insert(g);
        if (p == q) {
            Clan h = negate(g);
            if (h != g) {
                cls.push_back(h);
                done.insert(h);
            }
        }
        out.push_back(std::move(cls));
    }
    return out;
}

/// Noncompact imaginary roots of a closed U(p,q) orbit: e_i - e_j with opposite signs at i, j.
inline std::vector<NoncompactRoot> springer_data_a(const Clan& cl)
{
    if (!cl.all_signs())
        throw Error(Errc::NotClosed, to_string(cl));
    std::vector<NoncompactRoot> out;
    const int n = cl.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (cl[i] != cl[j]) {
                std::vector<int> m = cl.mates();
                m[i] = j;
                m[j] = i;
                out.push_back({{PositiveRoot::Shape::Diff, i + 1, j + 1}, Clan(std::move(m))});
            }
    return out;
}

} // namespace clanorb

#pragma once

#include "clanorb/family_a.hpp"

#include <optional>
#include <set>
#include <vector>

namespace clanorb {

inline std::vector<Clan> enumerate_sym(int p, int q, std::uint64_t cap = kDefaultEnumerationCap)
{
    return Family::c(p, q).members(cap);
}

inline int dimension_c(const Family& f, const Clan& g)
{
    if (f.kind != Kind::C)
        throw Error(Errc::SignatureMismatch, "dimension_c on " + f.name());
    return f.dimension(g);
}

/// gamma = (gamma1, gamma_circ_c(p', q'), reverse_rename(gamma1)) with gamma1 avoiding the bad patterns.
struct LemmaDecompositionC {
    Clan gamma1;
    Clan core;
    int r = 0;
    int s = 0;
    int p_core = 0;
    int q_core = 0;
};

/// Half the signs plus pairs of each kind in a block; nothing if odd.
inline std::optional<std::pair<int, int>> half_signature(const Clan& core)
{
    auto [a, b] = core.signature();
    if (a % 2 || b % 2)
        return std::nullopt;
    return std::pair{a / 2, b / 2};
}

inline std::optional<LemmaDecompositionC> lemma_form_c(const Clan& g)
{
    if (!is_symmetric(g))
        throw Error(Errc::NotSymmetric, to_string(g));
    const int L = g.size();
    for (int k = 0; 2 * k <= L; ++k) {
        auto g1 = subclan(g, 0, k);
        if (!g1)
            continue;
        auto core = subclan(g, k, L - k);
        if (!core)
            continue;
        auto tail = subclan(g, L - k, L);
        if (!tail || *tail != reverse_rename(*g1))
            continue;
        auto half = half_signature(*core);
        if (!half || *core != gamma_circ_c(half->first, half->second))
            continue;
        if (!avoids_bad_patterns(*g1))
            continue;
        auto [r, s] = g1->signature();
        return LemmaDecompositionC{*g1, *core, r, s, half->first, half->second};
    }
    return std::nullopt;
}

inline Smoothness classify_c(const Clan& g)
{
    if (!is_symmetric(g))
        throw Error(Errc::NotSymmetric, to_string(g));
    return avoids_bad_patterns(g) || lemma_form_c(g) ? Smoothness::Smooth : Smoothness::NotRationallySmooth;
}

/*
  Noncompact imaginary roots of a closed Sp(p,q) orbit. e_i - e_j moves
  when c_i, c_j differ and pairs (i,j), (2n+1-j, 2n+1-i); e_i + e_j moves
  when c_i, c_{2n+1-j} differ and pairs (i, 2n+1-j), (j, 2n+1-i). The long
  roots 2e_i are compact.
*/
inline std::vector<NoncompactRoot> springer_data_mirrored(const Clan& cl)
{
    if (!cl.all_signs())
        throw Error(Errc::NotClosed, to_string(cl));
    const int L = cl.size();
    const int n = L / 2;
    auto paired = [&](int a, int b, int c, int d) {
        std::vector<int> m = cl.mates();
        m[a] = b;
        m[b] = a;
        m[c] = d;
        m[d] = c;
        return Clan(std::move(m));
    };
    std::vector<NoncompactRoot> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (cl[i] != cl[j])
                out.push_back({{PositiveRoot::Shape::Diff, i + 1, j + 1}, paired(i, j, L - 1 - j, L - 1 - i)});
            if (cl[i] != cl[L - 1 - j])
                out.push_back({{PositiveRoot::Shape::Sum, i + 1, j + 1}, paired(i, L - 1 - j, j, L - 1 - i)});
        }
    }
    return out;
}

inline std::vector<NoncompactRoot> springer_data_c(const Clan& cl)
{
    if (!is_symmetric(cl))
        throw Error(Errc::NotSymmetric, to_string(cl));
    return springer_data_mirrored(cl);
}

inline std::vector<std::vector<Clan>> isogeny_classes_c(int p, int q)
{
    std::vector<std::vector<Clan>> out;
    std::set<Clan> done;
    for (const Clan& g : enumerate_sym(p, q)) {
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

} // namespace clanorb

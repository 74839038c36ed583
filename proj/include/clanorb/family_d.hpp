#pragma once

#include "clanorb/family_c.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace clanorb {

inline std::vector<Clan> enumerate_asym(int n, Convention conv = Convention::Paper,
                                        std::uint64_t cap = kDefaultEnumerationCap)
{
    return Family::d(n, conv).members(cap);
}

inline int dimension_d(const Family& f, const Clan& g)
{
    if (f.kind != Kind::D)
        throw Error(Errc::SignatureMismatch, "dimension_d on " + f.name());
    return f.dimension(g);
}

/*
  The outer involution. With s' the transposition of the two middle
  positions, exactly one of negate(s' x gamma) and s' x negate(s' x gamma)
  satisfies conditions (i)-(ii) with the parity of gamma. Works in either
  parity class, which the recursive classifier needs for inner blocks.
*/
inline Clan tau(const Clan& g)
{
    if (!is_antisymmetric_shape(g))
        throw Error(Errc::NotAntisymmetric, to_string(g));
    const int n = g.size() / 2;
    if (n == 0)
        return g;
    const Clan h = negate(swap_positions(g, n - 1, n));
    const Clan h2 = swap_positions(h, n - 1, n);
    const int par = antisymmetry_parity(g);
    const bool ok1 = is_antisymmetric_shape(h) && antisymmetry_parity(h) == par;
    const bool ok2 = is_antisymmetric_shape(h2) && antisymmetry_parity(h2) == par;
    if (ok1 == ok2)
        throw Error(Errc::NeitherAntisymmetric, "tau of " + to_string(g));
    return ok1 ? h : h2;
}

/*
  Witness that an antisymmetric clan has smooth closure although it may
  contain bad patterns. Reading the steps in order: a Flank step strips
  gamma1 from the left and its reversed negation from the right, a Twist
  step replaces the current block by its tau image. The final block is
  the base: plus or minus the open-orbit clan, the form (1,delta,2,1,
  delta^{-r},2) with (1,delta,1) avoiding the bad patterns, or a block
  that avoids them outright.
*/
struct LemmaDecompositionD {
    struct Step {
        enum class Kind { Flank, Twist };
        Kind kind = Kind::Flank;
        Clan gamma1;
    };
    enum class Base { OpenOrbit, FormB, Avoiding };

    std::vector<Step> steps;
    Base base = Base::OpenOrbit;
    Clan core;
    int core_sign = 1; // OpenOrbit: +1 for gamma_circ_d, -1 for its flip
    Clan delta;        // FormB only

    std::string describe() const
    {
        std::string s;
        for (const auto& st : steps) {
            if (st.kind == Step::Kind::Twist)
                s += "tau; ";
            else
                s += "flank " + to_string(st.gamma1, TextStyle::Comma) + "; ";
        }
        const int n = core.size() / 2;
        switch (base) {
        case Base::OpenOrbit:
            s += std::string(core_sign > 0 ? "" : "-") + "open(" + std::to_string(n) + ")";
            break;
        case Base::FormB: s += "form-b delta=" + to_string(delta, TextStyle::Comma); break;
        case Base::Avoiding: s += "avoiding " + to_string(core, TextStyle::Comma); break;
        }
        return s;
    }
};

namespace detail {

inline std::optional<LemmaDecompositionD> lemma_d_direct(const Clan& g);

inline std::optional<LemmaDecompositionD> lemma_d_any(const Clan& g)
{
    if (auto w = lemma_d_direct(g))
        return w;
    if (auto w = lemma_d_direct(tau(g))) {
        w->steps.insert(w->steps.begin(), {LemmaDecompositionD::Step::Kind::Twist, Clan()});
        return w;
    }
    return std::nullopt;
}

inline std::optional<Clan> form_b_delta(const Clan& g)
{
    const int L = g.size();
    const int n = L / 2;
    if (n < 2 || n % 2 || g[0] != n || g[n - 1] != L - 1)
        return std::nullopt;
    auto delta = subclan(g, 1, n - 1);
    auto tail = subclan(g, n + 1, L - 1);
    if (!delta || !tail || *tail != reverse_negate_rename(*delta))
        return std::nullopt;
    // (1, delta, 1) must avoid the patterns, not only delta
    std::vector<int> m{delta->size() + 1};
    for (int x : delta->mates())
        m.push_back(x < 0 ? x : x + 1);
    m.push_back(0);
    if (!avoids_bad_patterns(Clan(std::move(m))))
        return std::nullopt;
    return delta;
}

inline std::optional<LemmaDecompositionD> lemma_d_direct(const Clan& g)
{
    using W = LemmaDecompositionD;
    const int L = g.size();
    const int n = L / 2;
    const Clan open = gamma_circ_d(n);
    if (g == open || g == negate(open)) {
        W w;
        w.base = W::Base::OpenOrbit;
        w.core = g;
        w.core_sign = g == open ? 1 : -1;
        return w;
    }
    if (auto delta = form_b_delta(g)) {
        W w;
        w.base = W::Base::FormB;
        w.core = g;
        w.delta = *delta;
        return w;
    }
    for (int k = 1; k <= n; ++k) {
        auto g1 = subclan(g, 0, k);
        if (!g1)
            continue;
        auto core = subclan(g, k, L - k);
        auto tail = subclan(g, L - k, L);
        if (!core || !tail || *tail != reverse_negate_rename(*g1) || !avoids_bad_patterns(*g1))
            continue;
        std::optional<W> inner;
        if (avoids_bad_patterns(*core)) {
            inner = W{};
            inner->base = W::Base::Avoiding;
            inner->core = *core;
        } else {
            inner = lemma_d_any(*core);
        }
        if (inner) {
            inner->steps.insert(inner->steps.begin(), {W::Step::Kind::Flank, *g1});
            return inner;
        }
    }
    return std::nullopt;
}

} // namespace detail

inline std::optional<LemmaDecompositionD> lemma_form_d(const Clan& g)
{
    if (!is_antisymmetric_shape(g))
        throw Error(Errc::NotAntisymmetric, to_string(g));
    return detail::lemma_d_any(g);
}

inline Smoothness classify_d(const Clan& g)
{
    if (!is_antisymmetric_shape(g))
        throw Error(Errc::NotAntisymmetric, to_string(g));
    return avoids_bad_patterns(g) || lemma_form_d(g) ? Smoothness::Smooth : Smoothness::NotRationallySmooth;
}

/// Noncompact imaginary roots of a closed SO*(2n) orbit (only e_i - e_j and e_i + e_j exist).
inline std::vector<NoncompactRoot> springer_data_d(const Clan& cl)
{
    if (!is_antisymmetric_shape(cl))
        throw Error(Errc::NotAntisymmetric, to_string(cl));
    return springer_data_mirrored(cl);
}

/// Orbits of the group at the given isogeny level, as classes of clans.
inline std::vector<std::vector<Clan>> isogeny_orbits_d(int n, Isogeny level, Convention conv = Convention::Paper)
{
    const bool fold = n % 2 == 0 &&
                      (level == Isogeny::Adjoint || (level == Isogeny::SOPrime && (n / 2) % 2 == 1));
    std::vector<std::vector<Clan>> out;
    std::set<Clan> done;
    for (const Clan& g : enumerate_asym(n, conv)) {
        if (done.count(g))
            continue;
        std::vector<Clan> cls{g};
        done.insert(g);
        if (fold) {
            Clan t = tau(g);
            if (t != g) {
                cls.push_back(t);
                done.insert(t);
            }
        }
        out.push_back(std::move(cls));
    }
    return out;
}

/*
  Compressed notation for antisymmetric clans: only the first half is
  written. A sign at i stands for itself and the opposite sign at 2n+1-i;
  a lower-case letter at i, j is the pair (i, j) with its mirror; an
  upper-case letter at i, j is the pair (i, 2n+1-j) with its mirror.
*/
inline Clan decode_compressed(const std::string& s)
{
    const int n = static_cast<int>(s.size());
    const int L = 2 * n;
    std::vector<int> m(L, -3);
    auto link = [&](int a, int b) {
        if (m[a] != -3 || m[b] != -3 || a == b)
            throw Error(Errc::MalformedToken, "compressed clan " + s);
        m[a] = b;
        m[b] = a;
    };
    for (int i = 0; i < n; ++i) {
        char c = s[i];
        if (c == '+' || c == '-') {
            m[i] = c == '+' ? kPlus : kMinus;
            m[L - 1 - i] = c == '+' ? kMinus : kPlus;
        } else if (!std::isalpha(static_cast<unsigned char>(c))) {
            throw Error(Errc::MalformedToken, "compressed clan " + s);
        }
    }
    std::set<char> letters;
    for (char c : s)
        if (std::isalpha(static_cast<unsigned char>(c)))
            letters.insert(c);
    for (char c : letters) {
        std::vector<int> at;
        for (int i = 0; i < n; ++i)
            if (s[i] == c)
                at.push_back(i);
        if (at.size() != 2)
            throw Error(Errc::PairCountNotTwo, std::string("letter ") + c + " in " + s);
        int a = at[0];
        int b = std::islower(static_cast<unsigned char>(c)) ? at[1] : L - 1 - at[1];
        link(a, b);
        link(L - 1 - std::max(a, b), L - 1 - std::min(a, b));
    }
    for (int x : m)
        if (x == -3)
            throw Error(Errc::MalformedToken, "compressed clan " + s);
    return Clan(std::move(m));
}

inline std::string encode_compressed(const Clan& g)
{
    if (!is_antisymmetric_shape(g))
        throw Error(Errc::NotAntisymmetric, to_string(g));
    const int L = g.size();
    const int n = L / 2;
    std::string out(n, '?');
    char next = 'a';
    for (int i = 0; i < n; ++i) {
        if (out[i] != '?')
            continue;
        int x = g[i];
        if (x < 0) {
            out[i] = x == kPlus ? '+' : '-';
            continue;
        }
        if (next > 'z')
            throw Error(Errc::RankTooLarge, "too many pairs for compressed notation");
        if (x < n) {
            out[i] = out[x] = next;
        } else {
            char up = static_cast<char>(std::toupper(static_cast<unsigned char>(next)));
            out[i] = out[L - 1 - x] = up;
        }
        ++next;
    }
    return out;
}

} // namespace clanorb

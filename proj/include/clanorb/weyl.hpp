#pragma once

#include "clanorb/weak_closure.hpp"

#include <map>
#include <string>
#include <vector>

namespace clanorb {

/*
  Weyl groups of types A, C and D as signed permutations: entry i holds
  +-(k+1) when e_i maps to +-e_k. Only what the reduced-word check needs.
*/
using SignedPerm = std::vector<int>;

struct WeylGroup {
    Kind kind = Kind::A;
    int coords = 0; // A: p+q coordinates; C, D: n
    int rank = 0;

    static WeylGroup of(const Family& f)
    {
        return {f.kind, f.kind == Kind::A ? f.p + f.q : f.n, f.rank()};
    }

    SignedPerm identity() const
    {
        SignedPerm w(coords);
        for (int i = 0; i < coords; ++i)
            w[i] = i + 1;
        return w;
    }

    SignedPerm simple(int a) const
    {
        SignedPerm s = identity();
        if (a < rank || kind == Kind::A) {
            std::swap(s[a - 1], s[a]);
        } else if (kind == Kind::C) {
            s[coords - 1] = -coords;
        } else {
            s[coords - 2] = -coords;
            s[coords - 1] = -(coords - 1);
        }
        return s;
    }

    static SignedPerm compose(const SignedPerm& u, const SignedPerm& v)
    {
        SignedPerm w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            int x = v[i];
            int y = u[std::abs(x) - 1];
            w[i] = x > 0 ? y : -y;
        }
        return w;
    }

    std::vector<std::vector<int>> positive_roots() const
    {
        std::vector<std::vector<int>> out;
        for (int i = 0; i < coords; ++i) {
            for (int j = i + 1; j < coords; ++j) {
                std::vector<int> r(coords, 0);
                r[i] = 1;
                r[j] = -1;
                out.push_back(r);
                if (kind != Kind::A) {
                    r[j] = 1;
                    out.push_back(r);
                }
            }
            if (kind == Kind::C) {
                std::vector<int> r(coords, 0);
                r[i] = 2;
                out.push_back(r);
            }
        }
        return out;
    }

    /// Number of positive roots sent to negative roots.
    int length(const SignedPerm& w) const
    {
        int len = 0;
        for (const auto& r : positive_roots()) {
            std::vector<int> img(coords, 0);
            for (int i = 0; i < coords; ++i)
                if (r[i]) {
                    int x = w[i];
                    img[std::abs(x) - 1] += x > 0 ? r[i] : -r[i];
                }
            for (int c : img)
                if (c) {
                    if (c < 0)
                        ++len;
                    break;
                }
        }
        return len;
    }

    /// Reduced words of length <= max_len, grouped by the element they spell.
    std::map<SignedPerm, std::vector<std::vector<int>>> reduced_words(int max_len) const
    {
        std::map<SignedPerm, std::vector<std::vector<int>>> out;
        std::vector<std::pair<std::vector<int>, SignedPerm>> layer{{{}, identity()}};
        out[identity()].push_back({});
        for (int len = 1; len <= max_len; ++len) {
            std::vector<std::pair<std::vector<int>, SignedPerm>> next;
            for (const auto& [word, w] : layer) {
                for (int a = 1; a <= rank; ++a) {
                    SignedPerm v = compose(w, simple(a));
                    if (length(v) != len)
                        continue;
                    std::vector<int> wd = word;
                    wd.push_back(a);
                    out[v].push_back(wd);
                    next.emplace_back(std::move(wd), std::move(v));
                }
            }
            layer = std::move(next);
        }
        return out;
    }
};

/// s_{a1} . (s_{a2} . ( ... s_{ak} . gamma)), with a non-raising root fixing the orbit.
inline Clan act_word(const Family& f, const std::vector<int>& word, Clan g)
{
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        if (auto r = monoid_action(f, g, RootLabel{*it}))
            g = std::move(*r);
    return g;
}

struct WellDefinedness {
    int elements = 0;
    int words = 0;
    int orbits = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline WellDefinedness check_reduced_words(const Family& f, int max_len = 4)
{
    WeylGroup wg = WeylGroup::of(f);
    auto groups = wg.reduced_words(max_len);
    std::vector<Clan> orbits = f.members();
    WellDefinedness r;
    r.orbits = static_cast<int>(orbits.size());
    for (const auto& [w, words] : groups) {
        ++r.elements;
        r.words += static_cast<int>(words.size());
        if (words.size() < 2)
            continue;
        for (const Clan& g : orbits) {
            Clan first = act_word(f, words.front(), g);
            for (std::size_t k = 1; k < words.size(); ++k) {
                Clan other = act_word(f, words[k], g);
                if (other != first) {
                    std::string a, b;
                    for (int x : words.front())
                        a += std::to_string(x);
                    for (int x : words[k])
                        b += std::to_string(x);
                    r.violations.push_back(f.name() + " " + to_string(g) + ": s" + a + " -> " + to_string(first) +
                                           " but s" + b + " -> " + to_string(other));
                }
            }
        }
    }
    return r;
}

} // namespace clanorb

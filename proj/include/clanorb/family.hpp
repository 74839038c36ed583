#pragma once

#include "clanorb/clan.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

namespace clanorb {

enum class Kind { A, C, D };

/// Which quotient of the simply connected group acts; see isogeny.hpp.
enum class Isogeny { SC, SO, SOPrime, Adjoint };

enum class Smoothness { Smooth, NotRationallySmooth };

inline std::string to_string(Smoothness s) { return s == Smoothness::Smooth ? "smooth" : "not-rationally-smooth"; }

/// Simple root index in the family's standard numbering (1-based).
struct RootLabel {
    int index = 0;
    auto operator<=>(const RootLabel&) const = default;
};

/// Positive root e_i - e_j, e_i + e_j or 2e_i (1-based coordinates, i < j).
struct PositiveRoot {
    enum class Shape { Diff, Sum, Long };
    Shape shape = Shape::Diff;
    int i = 0;
    int j = 0;
    auto operator<=>(const PositiveRoot&) const = default;
};

inline std::string to_string(const PositiveRoot& r)
{
    switch (r.shape) {
    case PositiveRoot::Shape::Diff: return "e" + std::to_string(r.i) + "-e" + std::to_string(r.j);
    case PositiveRoot::Shape::Sum: return "e" + std::to_string(r.i) + "+e" + std::to_string(r.j);
    case PositiveRoot::Shape::Long: return "2e" + std::to_string(r.i);
    }
    return "?";
}

/*
  Open orbits. For U(p,q) the nested clan (1..k, signs, k..1); for Sp(p,q)
  the crossed clan (1..2k, 2|p-q| signs, 2k-1,2k,...,1,2); for SO*(2n)
  the crossed clan with a central "-,+" when n is odd.
*/
inline Clan gamma_circ_a(int p, int q)
{
    const int k = std::min(p, q);
    std::string s;
    for (int i = 1; i <= k; ++i)
        s += std::to_string(i) + ",";
    for (int i = 0; i < std::abs(p - q); ++i)
        s += p > q ? "+," : "-,";
    for (int i = k; i >= 1; --i)
        s += std::to_string(i) + ",";
    if (!s.empty())
        s.pop_back();
    return parse_clan(s);
}

inline std::string crossed_tail(int m)
{
    std::string s;
    for (int j = m; j >= 1; --j)
        s += std::to_string(2 * j - 1) + "," + std::to_string(2 * j) + ",";
    return s;
}

inline Clan gamma_circ_c(int p, int q)
{
    const int k = 2 * std::min(p, q);
    std::string s;
    for (int i = 1; i <= k; ++i)
        s += std::to_string(i) + ",";
    for (int i = 0; i < 2 * std::abs(p - q); ++i)
        s += p > q ? "+," : "-,";
    s += crossed_tail(k / 2);
    if (!s.empty())
        s.pop_back();
    return parse_clan(s);
}

inline Clan gamma_circ_d(int n)
{
    const int m = n / 2;
    std::string s;
    for (int i = 1; i <= 2 * m; ++i)
        s += std::to_string(i) + ",";
    if (n % 2)
        s += "-,+,";
    s += crossed_tail(m);
    if (!s.empty())
        s.pop_back();
    return parse_clan(s);
}

struct Family {
    Kind kind = Kind::A;
    int p = 0;
    int q = 0;
    int n = 0;
    Convention convention = Convention::Paper;

    static Family a(int p, int q) { return check({Kind::A, p, q, p + q, Convention::Paper}); }
    static Family c(int p, int q) { return check({Kind::C, p, q, p + q, Convention::Paper}); }
    static Family d(int n, Convention conv = Convention::Paper) { return check({Kind::D, n, n, n, conv}); }

    /// Number of simple roots.
    int rank() const
    {
        switch (kind) {
        case Kind::A: return std::max(n - 1, 0);
        case Kind::C: return n;
        case Kind::D: return n >= 2 ? n : 0;
        }
        return 0;
    }

    int clan_length() const { return kind == Kind::A ? n : 2 * n; }

    int d_k() const
    {
        switch (kind) {
        case Kind::A: return (p * (p - 1) + q * (q - 1)) / 2;
        case Kind::C: return p * p + q * q;
        case Kind::D: return n * (n - 1) / 2;
        }
        return 0;
    }

    /// Dimension of the full flag variety, i.e. the number of positive roots.
    int flag_dimension() const
    {
        switch (kind) {
        case Kind::A: return n * (n - 1) / 2;
        case Kind::C: return n * n;
        case Kind::D: return n * (n - 1);
        }
        return 0;
    }

    /// Signature of the ambient clan set.
    std::pair<int, int> ambient_signature() const
    {
        switch (kind) {
        case Kind::A: return {p, q};
        case Kind::C: return {2 * p, 2 * q};
        case Kind::D: return {n, n};
        }
        return {0, 0};
    }

    bool contains(const Clan& g) const
    {
        if (g.size() != clan_length() || g.signature() != ambient_signature())
            return false;
        switch (kind) {
        case Kind::A: return true;
        case Kind::C: return is_symmetric(g);
        case Kind::D: return is_antisymmetric(g, convention);
        }
        return false;
    }

    void require(const Clan& g) const
    {
        if (g.size() != clan_length() || g.signature() != ambient_signature())
            throw Error(Errc::SignatureMismatch, to_string(g) + " is not in " + name());
        if (kind == Kind::C && !is_symmetric(g))
            throw Error(Errc::NotSymmetric, to_string(g));
        if (kind == Kind::D && !is_antisymmetric(g, convention))
            throw Error(Errc::NotAntisymmetric, to_string(g) + " under the " +
                                                    (convention == Convention::Paper ? "paper" : "figure") +
                                                    " convention");
    }

    int dimension(const Clan& g) const
    {
        require(g);
        return dimension_unchecked(g);
    }

    int dimension_unchecked(const Clan& g) const
    {
        switch (kind) {
        case Kind::A: return d_k() + length_stat(g);
        case Kind::C: return d_k() + (length_stat(g) + crossing_count(g)) / 2;
        case Kind::D: return d_k() + (length_stat(g) - crossing_count(g)) / 2;
        }
        return 0;
    }

    /// All clans of the family, sorted by canonical text.
    std::vector<Clan> members(std::uint64_t cap = kDefaultEnumerationCap) const
    {
        auto [ap, aq] = ambient_signature();
        if (clan_count(ap, aq) > cap)
            throw Error(Errc::RankTooLarge, name() + " needs " + std::to_string(clan_count(ap, aq)) +
                                                " ambient clans, cap is " + std::to_string(cap));
        std::vector<Clan> out;
        for_each_clan(ap, aq, [&](const Clan& g) {
            if (contains(g))
                out.push_back(g);
        });
        sort_canonical(out);
        return out;
    }

    /// The clan of the dense orbit, up to the sign flip the figure convention needs for odd n.
    Clan open_orbit_formula() const
    {
        switch (kind) {
        case Kind::A: return gamma_circ_a(p, q);
        case Kind::C: return gamma_circ_c(p, q);
        case Kind::D: {
            Clan g = gamma_circ_d(n);
            return contains(g) ? g : negate(g);
        }
        }
        return {};
    }

    std::string name() const
    {
        switch (kind) {
        case Kind::A: return "A(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case Kind::C: return "C(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case Kind::D:
            return "D(" + std::to_string(n) + (convention == Convention::Figure ? ",figure" : "") + ")";
        }
        return "?";
    }

    static void sort_canonical(std::vector<Clan>& v)
    {
        std::vector<std::pair<std::string, Clan>> keyed;
        keyed.reserve(v.size());
        for (auto& g : v)
            keyed.emplace_back(to_string(g), std::move(g));
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = std::move(keyed[i].second);
    }

    bool operator==(const Family&) const = default;

private:
    static Family check(Family f)
    {
        if (f.p < 0 || f.q < 0 || f.n < 0)
            throw Error(Errc::SignatureMismatch, "negative rank");
        if (f.kind == Kind::D && f.n < 1)
            throw Error(Errc::SignatureMismatch, "SO*(2n) needs n >= 1");
        if (f.kind != Kind::D && f.p + f.q < 1)
            throw Error(Errc::SignatureMismatch, "empty signature");
        return f;
    }
};

} // namespace clanorb

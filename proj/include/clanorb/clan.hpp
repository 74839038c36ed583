#pragma once

#include "clanorb/error.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clanorb {

/*
  A clan is stored as its involution: entry i holds the position of the
  mate of i, or one of the two sign codes below. Storing mates instead of
  pair ids makes every clan canonical, so equality is plain vector
  equality. Positions are 0-based throughout the library; operations the
  user addresses by position (moves, roots) take 1-based indices.
*/
inline constexpr int kPlus = -1;
inline constexpr int kMinus = -2;

inline bool is_sign(int m) { return m < 0; }
inline int flip_sign(int m) { return m == kPlus ? kMinus : kPlus; }

class Clan {
public:
    Clan() = default;

    explicit Clan(std::vector<int> mates) : m_(std::move(mates))
    {
        const int n = size();
        for (int i = 0; i < n; ++i) {
            int m = m_[i];
            if (m == kPlus || m == kMinus)
                continue;
            if (m < 0 || m >= n || m == i || m_[m] != i)
                throw Error(Errc::PairCountNotTwo, "mate table is not an involution");
        }
    }

    int size() const { return static_cast<int>(m_.size()); }
    bool empty() const { return m_.empty(); }
    int operator[](int i) const { return m_[i]; }
    const std::vector<int>& mates() const { return m_; }

    bool sign_at(int i) const { return m_[i] < 0; }
    bool opens_at(int i) const { return m_[i] > i; }

    int plus_count() const { return static_cast<int>(std::count(m_.begin(), m_.end(), kPlus)); }
    int minus_count() const { return static_cast<int>(std::count(m_.begin(), m_.end(), kMinus)); }
    int pair_count() const { return (size() - plus_count() - minus_count()) / 2; }
    std::pair<int, int> signature() const
    {
        return {pair_count() + plus_count(), pair_count() + minus_count()};
    }
    bool all_signs() const
    {
        return std::all_of(m_.begin(), m_.end(), [](int m) { return m < 0; });
    }

    auto operator<=>(const Clan&) const = default;
    bool operator==(const Clan&) const = default;

private:
    std::vector<int> m_;
};

struct ClanHash {
    std::size_t operator()(const Clan& g) const noexcept
    {
        std::size_t h = 1469598103934665603ULL;
        for (int m : g.mates()) {
            h ^= static_cast<std::size_t>(m + 3);
            h *= 1099511628211ULL;
        }
        return h;
    }
};

// ---------------------------------------------------------------------------
// Text form

enum class TextStyle { Auto, Compact, Comma };

inline Clan parse_clan(std::string_view text)
{
    std::vector<std::string> toks;
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return std::string(s);
    };
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            auto pos = text.find(',', start);
            toks.push_back(trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
            if (pos == std::string_view::npos)
                break;
            start = pos + 1;
        }
    } else {
        for (char c : text) {
            if (c == ' ' || c == '\t')
                continue;
            toks.emplace_back(1, c);
        }
    }

    std::vector<int> mates(toks.size(), 0);
    std::map<long, std::vector<int>> where;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        const std::string& t = toks[i];
        if (t == "+") {
            mates[i] = kPlus;
        } else if (t == "-") {
            mates[i] = kMinus;
        } else {
            if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw Error(Errc::MalformedToken, "bad token '" + t + "' in \"" + std::string(text) + "\"");
            long id = std::stol(t);
            if (id <= 0)
                throw Error(Errc::MalformedToken, "pair ids are positive: '" + t + "'");
            where[id].push_back(static_cast<int>(i));
        }
    }
    for (auto& [id, pos] : where) {
        if (pos.size() != 2)
            throw Error(Errc::PairCountNotTwo,
                        "pair id " + std::to_string(id) + " occurs " + std::to_string(pos.size()) + " times");
        mates[pos[0]] = pos[1];
        mates[pos[1]] = pos[0];
    }
    return Clan(std::move(mates));
}

inline std::string to_string(const Clan& g, TextStyle style = TextStyle::Auto)
{
    if (style == TextStyle::Auto)
        style = g.pair_count() <= 9 ? TextStyle::Compact : TextStyle::Comma;
    std::vector<int> id(g.size(), 0);
    int next = 0;
    std::string out;
    for (int i = 0; i < g.size(); ++i) {
        if (style == TextStyle::Comma && i > 0)
            out += ',';
        int m = g[i];
        if (m == kPlus) {
            out += '+';
        } else if (m == kMinus) {
            out += '-';
        } else {
            if (m > i)
                id[i] = ++next;
            else
                id[i] = id[m];
            out += std::to_string(id[i]);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Clan& g) { return os << to_string(g); }

// ---------------------------------------------------------------------------
// Enumeration

inline std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

/// Number of clans of signature (p,q).
inline std::uint64_t clan_count(int p, int q)
{
    const int n = p + q;
    std::uint64_t total = 0;
    std::uint64_t dfact = 1; // (2k-1)!!
    for (int k = 0; 2 * k <= n; ++k) {
        if (k > 0)
            dfact *= static_cast<std::uint64_t>(2 * k - 1);
        if (k > p || k > q)
            continue;
        total += binomial(n, 2 * k) * dfact * binomial(n - 2 * k, p - k);
    }
    return total;
}

inline constexpr std::uint64_t kDefaultEnumerationCap = 5'000'000;

/// Visits every clan of signature (p,q) in no particular order.
inline void for_each_clan(int p, int q, const std::function<void(const Clan&)>& visit)
{
    const int n = p + q;
    std::vector<int> g(n, 0);
    std::vector<bool> used(n, false);
    std::function<void(int, int, int)> rec = [&](int i, int pp, int qq) {
        while (i < n && used[i])
            ++i;
        if (i == n) {
            if (pp == 0 && qq == 0)
                visit(Clan(g));
            return;
        }
        used[i] = true;
        if (pp > 0) {
            g[i] = kPlus;
            rec(i + 1, pp - 1, qq);
        }
        if (qq > 0) {
            g[i] = kMinus;
            rec(i + 1, pp, qq - 1);
        }
        if (pp > 0 && qq > 0) {
            for (int j = i + 1; j < n; ++j) {
                if (used[j])
                    continue;
                used[j] = true;
                g[i] = j;
                g[j] = i;
                rec(i + 1, pp - 1, qq - 1);
                used[j] = false;
            }
        }
        used[i] = false;
    };
    if (p < 0 || q < 0)
        return;
    rec(0, p, q);
}

inline std::vector<Clan> enumerate_clans(int p, int q, std::uint64_t cap = kDefaultEnumerationCap)
{
    if (p < 0 || q < 0)
        throw Error(Errc::SignatureMismatch, "negative signature");
    if (clan_count(p, q) > cap)
        throw Error(Errc::RankTooLarge, "Sigma(" + std::to_string(p) + "," + std::to_string(q) + ") has " +
                                            std::to_string(clan_count(p, q)) + " clans, cap is " +
                                            std::to_string(cap));
    std::vector<Clan> out;
    out.reserve(clan_count(p, q));
    for_each_clan(p, q, [&](const Clan& g) { out.push_back(g); });
    return out;
}

// ---------------------------------------------------------------------------
// Basic transformations

inline Clan negate(const Clan& g)
{
    std::vector<int> m = g.mates();
    for (int& x : m)
        if (x < 0)
            x = flip_sign(x);
    return Clan(std::move(m));
}

inline Clan reverse_rename(const Clan& g)
{
    const int n = g.size();
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) {
        int x = g[n - 1 - i];
        m[i] = x < 0 ? x : n - 1 - x;
    }
    return Clan(std::move(m));
}

inline Clan reverse_negate_rename(const Clan& g) { return negate(reverse_rename(g)); }

inline Clan concat(const Clan& a, const Clan& b)
{
    std::vector<int> m = a.mates();
    const int off = a.size();
    for (int x : b.mates())
        m.push_back(x < 0 ? x : x + off);
    return Clan(std::move(m));
}

template <typename... Rest>
Clan concat(const Clan& a, const Clan& b, const Rest&... rest)
{
    return concat(concat(a, b), rest...);
}

/// The block [lo, hi) as a clan, or nothing when a pair straddles the boundary.
inline std::optional<Clan> subclan(const Clan& g, int lo, int hi)
{
    std::vector<int> m;
    for (int i = lo; i < hi; ++i) {
        int x = g[i];
        if (x >= 0 && (x < lo || x >= hi))
            return std::nullopt;
        m.push_back(x < 0 ? x : x - lo);
    }
    return Clan(std::move(m));
}

/// Exchanges the entries at 0-based positions a and b.
inline Clan swap_positions(const Clan& g, int a, int b)
{
    const int n = g.size();
    auto perm = [&](int i) { return i == a ? b : i == b ? a : i; };
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) {
        int x = g[i];
        m[perm(i)] = x < 0 ? x : perm(x);
    }
    return Clan(std::move(m));
}

/// w x gamma: the entry at position i moves to position w(i) (both 1-based).
inline Clan apply_permutation(const std::vector<int>& w, const Clan& g)
{
    const int n = g.size();
    if (static_cast<int>(w.size()) != n)
        throw Error(Errc::LengthMismatch, "permutation has " + std::to_string(w.size()) + " entries, clan has " +
                                              std::to_string(n));
    std::vector<bool> seen(n, false);
    for (int x : w) {
        if (x < 1 || x > n || seen[x - 1])
            throw Error(Errc::InvalidPermutation, "not a permutation of 1.." + std::to_string(n));
        seen[x - 1] = true;
    }
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) {
        int x = g[i];
        m[w[i] - 1] = x < 0 ? x : w[x] - 1;
    }
    return Clan(std::move(m));
}

// ---------------------------------------------------------------------------
// Statistics

inline int length_stat(const Clan& g)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < g.size(); ++i)
        if (g.opens_at(i))
            pairs.emplace_back(i, g[i]);
    int total = 0;
    for (auto [i, j] : pairs) {
        int nested = 0;
        for (auto [s, t] : pairs)
            if (s < i && i < t && t < j)
                ++nested;
        total += j - i - nested;
    }
    return total;
}

/// Pairs (s,t) with s <= n < t <= 2n+1-s in 1-based positions, for length 2n.
inline int crossing_count(const Clan& g)
{
    if (g.size() % 2)
        throw Error(Errc::OddLength, to_string(g));
    const int n = g.size() / 2;
    int c = 0;
    for (int s = 0; s < g.size(); ++s) {
        int t = g[s];
        if (t > s && s <= n - 1 && n <= t && t <= 2 * n - 1 - s)
            ++c;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Patterns

inline bool includes_pattern(const Clan& g, const Clan& pat)
{
    const int m = pat.size();
    const int n = g.size();
    if (m > n)
        return false;
    std::vector<int> chosen(m, -1);
    std::function<bool(int, int)> rec = [&](int k, int from) -> bool {
        if (k == m)
            return true;
        int pk = pat[k];
        if (pk >= 0 && pk < k) {
            // closing mate: its position is forced by the opener
            int pos = g[chosen[pk]];
            if (pos < from)
                return false;
            chosen[k] = pos;
            return rec(k + 1, pos + 1);
        }
        int room = m - k - 1;
        for (int pos = from; pos < n - room; ++pos) {
            int x = g[pos];
            bool ok = pk < 0 ? x == pk : x > pos;
            if (!ok)
                continue;
            chosen[k] = pos;
            if (rec(k + 1, pos + 1))
                return true;
        }
        return false;
    };
    return rec(0, 0);
}

/// The seven patterns exactly as listed in the smoothness theorem for U(p,q).
inline const std::vector<Clan>& printed_patterns()
{
    static const std::vector<Clan> pats = [] {
        std::vector<Clan> v;
        for (auto s : {"1+-1", "1-+1", "1212", "1+221", "1-221", "122+1", "122-1"})
            v.push_back(parse_clan(s));
        return v;
    }();
    return pats;
}

/// The printed seven plus (1,2,2,3,3,1), which the U(3,3) Springer check forces.
inline const std::vector<Clan>& bad_patterns()
{
    static const std::vector<Clan> pats = [] {
        std::vector<Clan> v = printed_patterns();
        v.push_back(parse_clan("122331"));
        return v;
    }();
    return pats;
}

inline bool avoids(const Clan& g, const std::vector<Clan>& pats)
{
    return std::none_of(pats.begin(), pats.end(), [&](const Clan& p) { return includes_pattern(g, p); });
}

inline bool avoids_bad_patterns(const Clan& g) { return avoids(g, bad_patterns()); }

// ---------------------------------------------------------------------------
// Symmetry predicates for the doubled families

enum class Convention { Paper, Figure };

inline bool is_symmetric(const Clan& g)
{
    const int L = g.size();
    if (L % 2)
        throw Error(Errc::OddLength, to_string(g));
    for (int i = 0; i < L; ++i) {
        int x = g[i];
        int mi = L - 1 - i;
        if (x < 0) {
            if (g[mi] != x)
                return false;
        } else if (x == mi || g[mi] != L - 1 - x) {
            return false;
        }
    }
    return true;
}

/// Conditions (i) and (ii) of antisymmetry, without the parity condition.
inline bool is_antisymmetric_shape(const Clan& g)
{
    const int L = g.size();
    if (L % 2)
        throw Error(Errc::OddLength, to_string(g));
    for (int i = 0; i < L; ++i) {
        int x = g[i];
        int mi = L - 1 - i;
        if (x < 0) {
            if (g[mi] >= 0 || g[mi] == x)
                return false;
        } else if (x == mi || g[mi] != L - 1 - x) {
            return false;
        }
    }
    return true;
}

/// Plus signs in the first half plus pairs lying entirely in the first half, mod 2.
inline int antisymmetry_parity(const Clan& g)
{
    const int n = g.size() / 2;
    int c = 0;
    for (int i = 0; i < n; ++i)
        if (g[i] == kPlus || (g[i] > i && g[i] < n))
            ++c;
    return c % 2;
}

inline int required_parity(int n, Convention conv) { return conv == Convention::Paper ? 0 : n % 2; }

inline bool is_antisymmetric(const Clan& g, Convention conv = Convention::Paper)
{
    return is_antisymmetric_shape(g) && antisymmetry_parity(g) == required_parity(g.size() / 2, conv);
}

} // namespace clanorb

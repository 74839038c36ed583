#pragma once

#include "clanorb/family.hpp"

#include <boost/dynamic_bitset.hpp>

#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace clanorb {

using OrbitId = int;

namespace detail {

// Raising move on entries i0, i0+1 (0-based).
inline std::optional<Clan> move0(const Clan& g, int i0)
{
    const int a = g[i0];
    const int b = g[i0 + 1];
    if (a >= 0 && b >= 0) {
        if (a == i0 + 1 || a > b)
            return std::nullopt;
        return swap_positions(g, i0, i0 + 1); // (a)
    }
    if (a < 0 && b >= 0) {
        if (b > i0 + 1)
            return swap_positions(g, i0, i0 + 1); // (a')
        return std::nullopt;
    }
    if (a >= 0 && b < 0) {
        if (a < i0)
            return swap_positions(g, i0, i0 + 1); // (a'')
        return std::nullopt;
    }
    if (a == b)
        return std::nullopt;
    std::vector<int> m = g.mates(); // (b)
    m[i0] = i0 + 1;
    m[i0 + 1] = i0;
    return Clan(std::move(m));
}

// The two lifted moves of a root whose preimage in the ambient group is a
// pair of commuting simple reflections.
inline std::optional<Clan> paired_move(const Clan& g, int i0, int j0)
{
    auto x = move0(g, i0);
    auto y = move0(g, j0);
    if (x.has_value() != y.has_value())
        throw std::logic_error("mirror moves disagree on " + to_string(g));
    if (!x)
        return std::nullopt;
    // Both raise individually; when the second no longer raises after the
    // first, the lifted root is compact imaginary and the orbit is fixed.
    return move0(*x, j0);
}

} // namespace detail

/// Raising move at 1-based position i (acts on entries i and i+1).
inline std::optional<Clan> simple_move_a(const Clan& g, int i)
{
    if (i < 1 || i >= g.size())
        throw Error(Errc::InvalidRoot, "position " + std::to_string(i) + " outside 1.." + std::to_string(g.size() - 1));
    return detail::move0(g, i - 1);
}

/// s_alpha . O_gamma when it is a strictly larger orbit; nothing otherwise.
inline std::optional<Clan> monoid_action(const Family& f, const Clan& g, RootLabel alpha)
{
    const int a = alpha.index;
    if (a < 1 || a > f.rank())
        throw Error(Errc::InvalidRoot, "alpha_" + std::to_string(a) + " in " + f.name());
    const int n = f.n;
    std::optional<Clan> r;
    if (f.kind == Kind::A) {
        r = detail::move0(g, a - 1);
    } else if (a < n) {
        r = detail::paired_move(g, a - 1, 2 * n - a - 1);
    } else if (f.kind == Kind::C) {
        r = detail::move0(g, n - 1);
    } else {
        Clan h = swap_positions(g, n - 1, n);
        auto d = detail::paired_move(h, n - 2, n);
        if (d)
            r = swap_positions(*d, n - 1, n);
    }
    if (r && (!f.contains(*r) || f.dimension_unchecked(*r) != f.dimension_unchecked(g) + 1))
        throw std::logic_error("alpha_" + std::to_string(a) + " sends " + to_string(g) + " to " + to_string(*r) +
                               ", which is not one dimension higher in " + f.name());
    return r;
}

/// Cover edge of the closure order; a missing root marks a completed (dashed) edge.
struct CoverEdge {
    OrbitId lo = 0;
    OrbitId hi = 0;
    std::optional<RootLabel> root;

    bool completed() const { return !root.has_value(); }
    auto operator<=>(const CoverEdge& o) const
    {
        auto key = [](const CoverEdge& e) { return std::tuple(e.lo, e.hi, e.root ? e.root->index : 1 << 30); };
        return key(*this) <=> key(o);
    }
    bool operator==(const CoverEdge&) const = default;
};

struct WeakGraph {
    Family family;
    std::vector<Clan> orbits;
    std::vector<int> dims;
    std::vector<std::vector<OrbitId>> up; // up[o][alpha], -1 when alpha does not raise o
    std::vector<CoverEdge> edges;
};

inline WeakGraph weak_order_graph(const Family& f, std::uint64_t cap = kDefaultEnumerationCap)
{
    WeakGraph w{f, f.members(cap), {}, {}, {}};
    const int N = static_cast<int>(w.orbits.size());
    std::unordered_map<Clan, OrbitId, ClanHash> index;
    for (int i = 0; i < N; ++i)
        index.emplace(w.orbits[i], i);
    w.dims.resize(N);
    w.up.assign(N, std::vector<OrbitId>(f.rank() + 1, -1));
    for (int i = 0; i < N; ++i) {
        w.dims[i] = f.dimension_unchecked(w.orbits[i]);
        for (int a = 1; a <= f.rank(); ++a) {
            auto r = monoid_action(f, w.orbits[i], RootLabel{a});
            if (!r)
                continue;
            auto it = index.find(*r);
            if (it == index.end())
                throw std::logic_error("monoid action left the family: " + to_string(*r));
            w.up[i][a] = it->second;
            w.edges.push_back({i, it->second, RootLabel{a}});
        }
    }

    // The orbit set must be the upward closure of the closed orbits.
    std::vector<bool> seen(N, false);
    std::deque<OrbitId> queue;
    for (int i = 0; i < N; ++i)
        if (w.orbits[i].all_signs()) {
            seen[i] = true;
            queue.push_back(i);
        }
    while (!queue.empty()) {
        OrbitId o = queue.front();
        queue.pop_front();
        for (int a = 1; a <= f.rank(); ++a) {
            OrbitId t = w.up[o][a];
            if (t >= 0 && !seen[t]) {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    for (int i = 0; i < N; ++i)
        if (!seen[i])
            throw std::logic_error(to_string(w.orbits[i]) + " is not reached from a closed orbit in " + f.name());
    return w;
}

class OrbitPoset {
public:
    OrbitPoset() = default;

    /// Validates the parts and builds the reachability table.
    OrbitPoset(Family f, std::vector<Clan> orbits, std::vector<CoverEdge> covers)
        : family_(f), orbits_(std::move(orbits)), covers_(std::move(covers))
    {
        const int N = size();
        for (int i = 0; i < N; ++i) {
            family_.require(orbits_[i]);
            if (!index_.emplace(orbits_[i], i).second)
                throw Error(Errc::CorruptCache, "duplicate orbit " + to_string(orbits_[i]));
            dims_.push_back(family_.dimension_unchecked(orbits_[i]));
        }
        up_.assign(N, std::vector<OrbitId>(family_.rank() + 1, -1));
        std::sort(covers_.begin(), covers_.end());
        for (const auto& e : covers_) {
            if (e.lo < 0 || e.lo >= N || e.hi < 0 || e.hi >= N)
                throw Error(Errc::UnknownOrbit, "cover endpoint out of range");
            if (dims_[e.hi] != dims_[e.lo] + 1)
                throw Error(Errc::NotGraded, to_string(orbits_[e.lo]) + " -> " + to_string(orbits_[e.hi]));
            if (e.root) {
                if (e.root->index < 1 || e.root->index > family_.rank())
                    throw Error(Errc::InvalidRoot, "label " + std::to_string(e.root->index));
                up_[e.lo][e.root->index] = e.hi;
            }
        }
        build_reachability();
    }

    const Family& family() const { return family_; }
    int size() const { return static_cast<int>(orbits_.size()); }
    const std::vector<Clan>& orbits() const { return orbits_; }
    const Clan& orbit(OrbitId id) const { return orbits_.at(id); }
    int dim(OrbitId id) const { return dims_.at(id); }
    const std::vector<int>& dims() const { return dims_; }
    const std::vector<CoverEdge>& covers() const { return covers_; }

    std::optional<OrbitId> find(const Clan& g) const
    {
        auto it = index_.find(g);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    OrbitId id_of(const Clan& g) const
    {
        auto id = find(g);
        if (!id)
            throw Error(Errc::UnknownOrbit, to_string(g) + " in " + family_.name());
        return *id;
    }

    /// Target of the weak alpha-edge out of o, if any.
    std::optional<OrbitId> raise(OrbitId o, RootLabel alpha) const
    {
        OrbitId t = up_.at(o).at(alpha.index);
        if (t < 0)
            return std::nullopt;
        return t;
    }

    bool le(OrbitId a, OrbitId b) const { return below_.at(b).test(a); }
    bool le(const Clan& a, const Clan& b) const { return le(id_of(a), id_of(b)); }

    /// Every orbit below o, o included.
    const boost::dynamic_bitset<>& below(OrbitId o) const { return below_.at(o); }

    std::vector<OrbitId> closed_orbits() const
    {
        std::vector<OrbitId> out;
        for (int i = 0; i < size(); ++i)
            if (orbits_[i].all_signs())
                out.push_back(i);
        return out;
    }

    std::vector<OrbitId> closed_below(OrbitId o) const
    {
        std::vector<OrbitId> out;
        for (OrbitId c : closed_orbits())
            if (le(c, o))
                out.push_back(c);
        return out;
    }

    std::vector<OrbitId> minima() const
    {
        std::vector<bool> has_lower(size(), false);
        for (const auto& e : covers_)
            has_lower[e.hi] = true;
        std::vector<OrbitId> out;
        for (int i = 0; i < size(); ++i)
            if (!has_lower[i])
                out.push_back(i);
        return out;
    }

    std::vector<OrbitId> maxima() const
    {
        std::vector<bool> has_upper(size(), false);
        for (const auto& e : covers_)
            has_upper[e.lo] = true;
        std::vector<OrbitId> out;
        for (int i = 0; i < size(); ++i)
            if (!has_upper[i])
                out.push_back(i);
        return out;
    }

    OrbitId open_orbit() const
    {
        auto m = maxima();
        if (m.size() != 1)
            throw std::logic_error(family_.name() + " has " + std::to_string(m.size()) + " maximal orbits");
        return m.front();
    }

private:
    void build_reachability()
    {
        const int N = size();
        std::vector<std::vector<OrbitId>> lower(N);
        for (const auto& e : covers_)
            lower[e.hi].push_back(e.lo);
        std::vector<OrbitId> order(N);
        for (int i = 0; i < N; ++i)
            order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](OrbitId a, OrbitId b) { return dims_[a] < dims_[b]; });
        below_.assign(N, boost::dynamic_bitset<>(N));
        for (OrbitId o : order) {
            below_[o].set(o);
            for (OrbitId l : lower[o])
                below_[o] |= below_[l];
        }
    }

    Family family_;
    std::vector<Clan> orbits_;
    std::vector<int> dims_;
    std::vector<CoverEdge> covers_;
    std::unordered_map<Clan, OrbitId, ClanHash> index_;
    std::vector<std::vector<OrbitId>> up_;
    std::vector<boost::dynamic_bitset<>> below_;
};

/*
  Completes the weak order to the closure order. Whenever O4 -> O2 is a
  cover (weak or already completed) and alpha raises O4 to O3 and O2 to
  O1 with O3 != O2, the edge O3 -> O1 is a cover too. Completed edges never
  serve as alpha-edges; they only feed the premise.
*/
inline OrbitPoset complete_closure(const WeakGraph& w)
{
    const int rank = w.family.rank();
    std::set<std::pair<OrbitId, OrbitId>> present;
    std::deque<std::pair<OrbitId, OrbitId>> work;
    for (const auto& e : w.edges)
        if (present.emplace(e.lo, e.hi).second)
            work.emplace_back(e.lo, e.hi);
    std::vector<CoverEdge> covers = w.edges;
    while (!work.empty()) {
        auto [o4, o2] = work.front();
        work.pop_front();
        for (int a = 1; a <= rank; ++a) {
            OrbitId o3 = w.up[o4][a];
            OrbitId o1 = w.up[o2][a];
            if (o3 < 0 || o1 < 0 || o3 == o2)
                continue;
            if (!present.emplace(o3, o1).second)
                continue;
            if (w.dims[o1] != w.dims[o3] + 1)
                throw Error(Errc::NotGraded, "completion produced " + to_string(w.orbits[o3]) + " -> " +
                                                 to_string(w.orbits[o1]));
            covers.push_back({o3, o1, std::nullopt});
            work.emplace_back(o3, o1);
        }
    }
    return OrbitPoset(w.family, w.orbits, std::move(covers));
}

inline OrbitPoset build_poset(const Family& f, std::uint64_t cap = kDefaultEnumerationCap)
{
    return complete_closure(weak_order_graph(f, cap));
}

/*
  The explicit raising operations for U(p,q): turn two opposite signs into
  a pair, push a number away from its mate past a sign on the same side, or
  exchange two numbers whose mates are in the same order. Used only as a
  cross-check of the computed A-order.
*/
inline std::vector<Clan> raising_moves_oracle(const Clan& g)
{
    const int n = g.size();
    std::set<Clan> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int a = g[i];
            const int b = g[j];
            if (a < 0 && b < 0) {
                if (a != b) {
                    std::vector<int> m = g.mates();
                    m[i] = j;
                    m[j] = i;
                    out.insert(Clan(std::move(m)));
                }
            } else if (a >= 0 && b < 0) {
                if (a < i)
                    out.insert(swap_positions(g, i, j));
            } else if (a < 0 && b >= 0) {
                if (b > j)
                    out.insert(swap_positions(g, i, j));
            } else if (a != j && a < b) {
                out.insert(swap_positions(g, i, j));
            }
        }
    }
    return {out.begin(), out.end()};
}

struct OracleComparison {
    long order_pairs = 0;  // strict relations of the computed order
    long oracle_pairs = 0; // strict relations generated by the raising moves
    long oracle_only = 0;  // must stay zero: the moves always go up
    long order_only = 0;
    std::vector<std::pair<Clan, Clan>> order_only_examples;
};

/// Compares the computed U(p,q) order with the order the raising moves generate.
inline OracleComparison compare_with_oracle(const OrbitPoset& poset, std::size_t max_examples = 5)
{
    if (poset.family().kind != Kind::A)
        throw Error(Errc::BadConfig, "the raising-moves oracle is defined for type A only");
    const int N = poset.size();
    std::vector<std::vector<OrbitId>> lower(N);
    for (OrbitId g = 0; g < N; ++g)
        for (const Clan& h : raising_moves_oracle(poset.orbit(g)))
            lower[poset.id_of(h)].push_back(g);
    std::vector<OrbitId> order(N);
    for (int i = 0; i < N; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](OrbitId a, OrbitId b) { return poset.dim(a) < poset.dim(b); });
    std::vector<boost::dynamic_bitset<>> below(N, boost::dynamic_bitset<>(N));
    for (OrbitId o : order) {
        below[o].set(o);
        for (OrbitId l : lower[o]) {
            if (poset.dim(l) >= poset.dim(o))
                throw std::logic_error("raising move does not raise " + to_string(poset.orbit(l)));
            below[o] |= below[l];
        }
    }
    OracleComparison r;
    for (OrbitId b = 0; b < N; ++b) {
        const auto& ord = poset.below(b);
        r.order_pairs += static_cast<long>(ord.count()) - 1;
        r.oracle_pairs += static_cast<long>(below[b].count()) - 1;
        r.oracle_only += static_cast<long>((below[b] - ord).count());
        auto missing = ord - below[b];
        r.order_only += static_cast<long>(missing.count());
        for (auto a = missing.find_first(); a != missing.npos && r.order_only_examples.size() < max_examples;
             a = missing.find_next(a))
            r.order_only_examples.emplace_back(poset.orbit(static_cast<OrbitId>(a)), poset.orbit(b));
    }
    return r;
}

} // namespace clanorb

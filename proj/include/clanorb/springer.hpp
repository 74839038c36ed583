#pragma once

#include "clanorb/classify.hpp"
#include "clanorb/weak_closure.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace clanorb {

struct SpringerReport {
    OrbitId orbit = 0;
    OrbitId closed = 0;
    std::vector<PositiveRoot> roots_in_S;
    int s_size = 0;
    int dim_gap = 0;
    bool violated = false;
};

/*
  Moved orbits of every closed orbit, computed once per poset. A root
  alpha counts for (gamma, cl) when it is noncompact imaginary for cl and
  s_alpha . cl lies below gamma; gamma fails rational smoothness when the
  count exceeds dim gamma - dim cl.
*/
class SpringerTable {
public:
    explicit SpringerTable(const OrbitPoset& poset) : poset_(&poset)
    {
        for (OrbitId c : poset.closed_orbits()) {
            auto& row = moved_[c];
            for (const auto& nr : noncompact_roots(poset.family(), poset.orbit(c))) {
                OrbitId m = poset.id_of(nr.moved);
                if (poset.dim(m) <= poset.dim(c))
                    throw std::logic_error("noncompact root " + to_string(nr.root) + " does not raise " +
                                           to_string(poset.orbit(c)));
                row.emplace_back(nr.root, m);
            }
        }
    }

    const OrbitPoset& poset() const { return *poset_; }

    const std::vector<std::pair<PositiveRoot, OrbitId>>& moved(OrbitId cl) const
    {
        auto it = moved_.find(cl);
        if (it == moved_.end())
            throw Error(Errc::NotClosed, to_string(poset_->orbit(cl)));
        return it->second;
    }

    SpringerReport report(OrbitId g, OrbitId cl) const
    {
        const auto& row = moved(cl);
        if (!poset_->le(cl, g))
            throw Error(Errc::NotBelow, to_string(poset_->orbit(cl)) + " is not below " + to_string(poset_->orbit(g)));
        SpringerReport r;
        r.orbit = g;
        r.closed = cl;
        for (const auto& [root, m] : row)
            if (poset_->le(m, g))
                r.roots_in_S.push_back(root);
        r.s_size = static_cast<int>(r.roots_in_S.size());
        r.dim_gap = poset_->dim(g) - poset_->dim(cl);
        r.violated = r.s_size > r.dim_gap;
        return r;
    }

    bool rationally_smooth(OrbitId g) const
    {
        for (OrbitId cl : poset_->closed_below(g))
            if (report(g, cl).violated)
                return false;
        return true;
    }

private:
    const OrbitPoset* poset_;
    std::map<OrbitId, std::vector<std::pair<PositiveRoot, OrbitId>>> moved_;
};

inline SpringerReport springer_report(const OrbitPoset& poset, const Clan& g, const Clan& cl)
{
    return SpringerTable(poset).report(poset.id_of(g), poset.id_of(cl));
}

inline bool rationally_smooth_springer(const OrbitPoset& poset, const Clan& g)
{
    return SpringerTable(poset).rationally_smooth(poset.id_of(g));
}

struct Mismatch {
    Clan orbit;
    Smoothness pattern;
    bool springer_smooth;
};

struct CrossValidation {
    std::string family;
    int orbits = 0;
    int nonsmooth = 0; // by the pattern classifier
    int springer_nonsmooth = 0;
    std::vector<Mismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

inline CrossValidation cross_validate(const OrbitPoset& poset)
{
    SpringerTable table(poset);
    CrossValidation cv;
    cv.family = poset.family().name();
    cv.orbits = poset.size();
    for (OrbitId g = 0; g < poset.size(); ++g) {
        Smoothness pat = classify(poset.family(), poset.orbit(g));
        bool spr = table.rationally_smooth(g);
        if (pat == Smoothness::NotRationallySmooth)
            ++cv.nonsmooth;
        if (!spr)
            ++cv.springer_nonsmooth;
        if ((pat == Smoothness::Smooth) != spr)
            cv.mismatches.push_back({poset.orbit(g), pat, spr});
    }
    return cv;
}

} // namespace clanorb

#pragma once

#include "clanorb/family_d.hpp"

#include <string>

namespace clanorb {

/// Pattern-based verdict for any family.
inline Smoothness classify(const Family& f, const Clan& g)
{
    f.require(g);
    switch (f.kind) {
    case Kind::A: return classify_a(f, g);
    case Kind::C: return classify_c(g);
    case Kind::D: return classify_d(g);
    }
    return Smoothness::Smooth;
}

/// Human-readable exceptional-form witness, empty when there is none.
inline std::string lemma_witness(const Family& f, const Clan& g)
{
    if (f.kind == Kind::C) {
        if (auto w = lemma_form_c(g))
            return "flank " + (w->gamma1.empty() ? std::string("()") : to_string(w->gamma1, TextStyle::Comma)) +
                   "; open(" + std::to_string(w->p_core) + "," + std::to_string(w->q_core) + ")";
    } else if (f.kind == Kind::D) {
        if (auto w = lemma_form_d(g))
            return w->describe();
    }
    return {};
}

inline std::vector<NoncompactRoot> noncompact_roots(const Family& f, const Clan& cl)
{
    f.require(cl);
    switch (f.kind) {
    case Kind::A: return springer_data_a(cl);
    case Kind::C: return springer_data_c(cl);
    case Kind::D: return springer_data_d(cl);
    }
    return {};
}

} // namespace clanorb

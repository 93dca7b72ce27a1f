#pragma once

#include "germlab/parser.hpp"
#include "germlab/rng.hpp"

#include <string>
#include <vector>

namespace testutil {

using namespace germlab;

inline RingPtr ring_xy(MonomialOrder ord = MonomialOrder::degrevlex()) {
    return PolyRing::create({"x", "y"}, std::move(ord));
}

inline RingPtr ring_xyz(MonomialOrder ord = MonomialOrder::degrevlex()) {
    return PolyRing::create({"x", "y", "z"}, std::move(ord));
}

inline Poly P(const RingPtr& r, const std::string& text) { return parse_poly(text, r); }

/// Random sparse polynomial: up to max_terms terms, exponents <= max_exp,
/// integer coefficients in [-9, 9].
inline Poly random_poly(const RingPtr& r, Rng& rng, int max_terms = 5, int max_exp = 3) {
    std::vector<Term> terms;
    int nt = static_cast<int>(rng.int_in(0, max_terms));
    for (int t = 0; t < nt; ++t) {
        Mono m(r->nvars());
        for (int v = 0; v < r->nvars(); ++v)
            m.set(v, static_cast<int>(rng.int_in(0, max_exp)));
        terms.push_back({m, Rat(rng.int_in(-9, 9))});
    }
    return Poly::from_terms(r, std::move(terms));
}

} // namespace testutil

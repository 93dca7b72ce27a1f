#pragma once

#include <optional>
#include <vector>

#include "germlab/poly.hpp"

namespace germlab {

/// A finite generating set of an ideal. The empty list denotes the zero
/// ideal; zero generators are dropped on construction.
struct IdealBasis {
    RingPtr ring;
    std::vector<Poly> gens;

    static IdealBasis make(RingPtr ring, std::vector<Poly> gens) {
        IdealBasis I{std::move(ring), {}};
        I.gens.reserve(gens.size());
        for (auto& g : gens) {
            if (g.is_zero())
                continue;
            check_same_ring(g.ring(), I.ring);
            I.gens.push_back(std::move(g));
        }
        return I;
    }
};

/// Output of the completion algorithm. basis is inter-reduced with leading
/// coefficients 1; leading_ideal lists the minimal generators of the ideal
/// of leading monomials. When pedigree tracking was requested, pedigree[k]
/// holds cofactors expressing basis[k] over the input generators.
struct StandardBasis {
    IdealBasis ideal;
    MonomialOrder order;
    std::vector<Poly> basis;
    std::vector<Mono> leading_ideal;
    std::vector<std::vector<Poly>> pedigree;

    bool has_pedigree() const { return !pedigree.empty(); }
};

struct Staircase {
    bool finite = false;
    std::vector<Mono> monomials; // standard monomials, deterministic order
};

struct SBOptions {
    /// Work modulo m^(D+1): every polynomial is truncated above total degree
    /// D. Only meaningful for negdegrevlex; the adaptive colength driver
    /// certifies the result exactly via the Nakayama criterion.
    std::optional<int> truncate_degree;
    /// With truncation, pedigrees hold modulo m^(D+1) and require every
    /// generator to vanish at the origin.
    bool track_pedigree = false;
};

StandardBasis standard_basis(const IdealBasis& I, const MonomialOrder& order, const SBOptions& opts = {});

/// Weak normal form: the leading monomial of the result is not divisible by
/// the leading ideal; zero iff p lies in the ideal (in the localized ring
/// for local orders, by Mora reduction with implicit unit multipliers).
Poly weak_normal_form(const Poly& p, const StandardBasis& B);

/// Fully reduced normal form: no term divisible by the leading ideal.
Poly normal_form(const Poly& p, const StandardBasis& B);

/// Standard monomials under the leading ideal of B.
Staircase staircase(const StandardBasis& B);

/// Vector-space dimension of the local quotient ring; nullopt means
/// infinite (non-zero-dimensional ideal). Exact: results are certified with
/// the Nakayama degree criterion before the truncation bound is trusted.
std::optional<long> colength(const IdealBasis& I, const MonomialOrder& local_order);

/// One certified attempt at truncation degree D. `certified` is false when
/// a standard monomial of degree D survives (the bound was too tight).
struct ColengthProbe {
    bool certified = false;
    long count = 0;
};
ColengthProbe colength_at(const IdealBasis& I, int truncate_degree);

/// Intersection with the subring generated by the variables NOT in
/// drop_vars, via a block order (degrevlex on the dropped block) >>
/// (degrevlex on the kept block). Generators that are linear in a dropped
/// variable with constant coefficient are substituted away first; the
/// elimination ideal is unchanged. The result lives in a fresh degrevlex
/// ring on the kept variables, inter-reduced.
IdealBasis eliminate(const IdealBasis& I, const std::vector<std::string>& drop_vars);

/// Division with cofactors in the local ring: unit * p = sum(cofactors[i] *
/// gens[i]) + remainder with unit(0) != 0. The identity is verified exactly
/// before returning.
struct LiftedNF {
    Poly remainder;
    Poly unit;
    std::vector<Poly> cofactors;
};

LiftedNF lifted_division(const Poly& p, const IdealBasis& gens, const MonomialOrder& local_order);

/// Division with cofactors modulo m^(D+1): unit * p = sum(cof * gens) +
/// remainder holds after truncation above D, with a constant unit. All
/// generators must vanish at the origin. Much cheaper than the exact
/// version; the identity is verified modulo the truncation.
LiftedNF lifted_division_mod(const Poly& p, const IdealBasis& gens, int truncate_degree);

} // namespace germlab

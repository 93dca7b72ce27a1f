#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "germlab/stdbasis.hpp"

namespace germlab {

/// A map germ f = (f1, f2) : (X, 0) -> (C^2, 0) on the isolated complete
/// intersection surface X = V(phi) in (C^n, 0). An empty phi means X = C^2.
/// Optional weights/degrees declare a weighted-homogeneous structure, which
/// validate() checks term by term.
struct GermProblem {
    RingPtr ring; // the n source variables, local order active
    std::vector<Poly> phi;
    std::array<Poly, 2> f;
    std::optional<std::vector<long>> weights;
    std::optional<std::vector<long>> phi_degrees;
    std::optional<std::array<long, 2>> f_degrees;

    int nvars() const { return ring->nvars(); }
    void validate() const;
};

struct IdentityChecks {
    bool fold_cusp_balance = false;    // 2(c + d) = mu(Delta) - mu(S)
    bool degree_formula = false;       // c + mu(X) = mu(S) + m - 2
    bool disc_milnor_consistent = false; // mu_disc = mu(Delta) - 2c - d = d + mu(S)
    bool pullback_formula = false;     // (m-1) mu(Delta) = mu(f^-1 Delta) + m - 2
    bool all() const { return fold_cusp_balance && degree_formula && disc_milnor_consistent && pullback_formula; }
};

struct InvariantReport {
    long mu_X = 0;
    long mu_S = 0;
    long mu_Delta = 0;
    long m = 0;          // degree of f
    long c = 0;          // cusps of a stabilization
    long d = 0;          // double folds of a stabilization
    long mu_disc = 0;    // discriminant Milnor number
    long mu_preimage = 0;
    long m0_X = 0;
    long m0_S = 0;
    long m0_preimage = 0;
    Poly discriminant;   // reduced equation of f(S) in (u, v)
    IdentityChecks checks;
    bool afinite = false;
    bool submersion = false; // S empty: stable germ, curve invariants vacuous
    std::vector<std::string> notes;
};

/// Ideal of the singular locus S = V(phi, delta), where delta is the
/// determinant of the Jacobian of (f1, f2, phi_1, ..., phi_{n-2}) in the
/// source variables (that fixed row order; the sign never matters).
IdealBasis singular_locus_ideal(const GermProblem& P);

/// The determinant delta itself.
Poly jacobian_determinant(const GermProblem& P);

/// Milnor number of the isolated complete intersection V(gens) via the
/// Le-Greuel chain on generic invertible linear combinations of the
/// generators. `trials` independent randomizations must agree; the
/// coefficient bound escalates once (x10) before giving up.
long milnor_icis(const IdealBasis& gens, std::uint64_t seed, int trials);

/// Degree of f: colength of <phi, f1, f2> in the local ring.
long degree_m(const GermProblem& P);

/// Number of cusps in a stabilization: colength of <phi> plus the maximal
/// minors of the Jacobian of (f1, f2, phi, delta).
long cusp_count(const GermProblem& P);

/// Reduced equation g(u, v) of the discriminant f(S), by elimination of the
/// source variables from <phi, delta, u - f1, v - f2>. Canonical form:
/// integer coefficients, content 1, positive leading coefficient.
Poly discriminant_equation(const GermProblem& P);

/// Milnor number of a plane curve germ: local colength of <g_u, g_v>.
/// Factors of g invertible at the origin do not change the value.
long mu_plane_curve(const Poly& g);

/// d from the fold/cusp balance; rejects parity violations.
long double_fold_count(long mu_Delta, long mu_S, long c);

/// mu_disc via both closed forms, asserting they agree.
long discriminant_milnor_number(long mu_Delta, long c, long d, long mu_S);

/// Milnor number of the reduced preimage curve f^{-1}(Delta). The naive
/// pullback g(f1, f2) vanishes to second order along every fold branch of
/// S; dividing it by delta inside O_X leaves exactly the reduced curve,
/// computed with an exact cofactor division.
long preimage_curve_milnor(const GermProblem& P, const Poly& g, std::uint64_t seed, int trials);

/// Multiplicity m0 of the reduced germ V(gens) of the stated dimension:
/// minimal colength after cutting with `dim` generic linear forms.
long germ_multiplicity(const IdealBasis& gens, int dim, std::uint64_t seed, int trials);

/// Runs the whole invariant pipeline and evaluates the identity web.
InvariantReport analyze(const GermProblem& P, std::uint64_t seed, int trials);

// Shared internals, exposed for the family diagnostics.
namespace detail {

/// mu of the curve V(phi, extra) on the ICIS surface V(phi) by one
/// deterministic Le-Greuel step: colength(<phi> + maximal minors of
/// J(phi, extra)) - mu_X. Requires mu_X = mu(V(phi)).
long mu_curve_on_surface(const GermProblem& P, const Poly& extra, long mu_X);

/// Colength of <gens> + <generic linear sections>; linear forms are
/// substituted away so the computation runs in fewer variables.
std::optional<long> colength_with_sections(const IdealBasis& gens, const std::vector<Poly>& sections);

struct PreimageCurve {
    Poly equation; // cuts the reduced curve on X
    long mu;
    long m0;
};
PreimageCurve preimage_curve(const GermProblem& P, const Poly& g, long mu_X, std::uint64_t seed, int trials);

Poly pullback(const GermProblem& P, const Poly& g);

} // namespace detail

} // namespace germlab

#include "germlab/invariants.hpp"

#include <algorithm>
#include <functional>

#include "germlab/matrixops.hpp"
#include "germlab/rng.hpp"

namespace germlab {

namespace {

const long kCoeffBound = 101; // genericity draws: integers in [-101, 101]

MonomialOrder local_order() { return MonomialOrder::negdegrevlex(); }

std::vector<int> all_vars(const RingPtr& r) {
    std::vector<int> v(static_cast<size_t>(r->nvars()));
    for (int i = 0; i < r->nvars(); ++i)
        v[static_cast<size_t>(i)] = i;
    return v;
}

IdealBasis join(const IdealBasis& a, std::vector<Poly> extra) {
    std::vector<Poly> gens = a.gens;
    for (auto& e : extra)
        gens.push_back(std::move(e));
    return IdealBasis::make(a.ring, std::move(gens));
}

long require_finite(const std::optional<long>& col, const std::string& what) {
    if (!col)
        throw DegenerateError(what);
    return *col;
}

/// Invertible square matrix with integer entries in [-bound, bound].
std::vector<std::vector<Rat>> random_invertible(int k, Rng& rng, long bound) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::vector<Rat>> M(static_cast<size_t>(k), std::vector<Rat>(static_cast<size_t>(k)));
        for (auto& row : M)
            for (auto& x : row)
                x = Rat(rng.int_in(-bound, bound));
        // Gaussian elimination over Q for the determinant test.
        auto A = M;
        bool singular = false;
        for (int col = 0; col < k && !singular; ++col) {
            int pivot = -1;
            for (int row = col; row < k; ++row)
                if (A[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
                    pivot = row;
                    break;
                }
            if (pivot < 0) {
                singular = true;
                break;
            }
            std::swap(A[static_cast<size_t>(col)], A[static_cast<size_t>(pivot)]);
            for (int row = col + 1; row < k; ++row) {
                Rat f = A[static_cast<size_t>(row)][static_cast<size_t>(col)] /
                        A[static_cast<size_t>(col)][static_cast<size_t>(col)];
                for (int j = col; j < k; ++j)
                    A[static_cast<size_t>(row)][static_cast<size_t>(j)] -=
                        f * A[static_cast<size_t>(col)][static_cast<size_t>(j)];
            }
        }
        if (!singular)
            return M;
    }
    throw InternalError("could not draw an invertible matrix");
}

long milnor_chain_once(const IdealBasis& gens, std::uint64_t seed, long bound) {
    const RingPtr& ring = gens.ring;
    int k = static_cast<int>(gens.gens.size());
    Rng rng(seed);
    std::vector<Poly> g;
    if (k == 1) {
        g = gens.gens; // scalar multiples have the same Jacobian ideal
    } else {
        auto M = random_invertible(k, rng, bound);
        for (int i = 0; i < k; ++i) {
            Poly gi = Poly::zero(ring);
            for (int j = 0; j < k; ++j)
                gi = gi + gens.gens[static_cast<size_t>(j)].scaled(M[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            if (gi.is_zero())
                throw GenericityError("degenerate combination in the Milnor chain");
            g.push_back(std::move(gi));
        }
    }
    long mu = 0;
    std::vector<Poly> prefix;
    for (int j = 1; j <= k; ++j) {
        std::vector<Poly> funcs(g.begin(), g.begin() + j);
        auto minors = minors_ideal(jacobian_matrix(funcs, all_vars(ring)), j);
        std::vector<Poly> ideal_gens = prefix;
        for (auto& m : minors)
            ideal_gens.push_back(std::move(m));
        auto col = colength(IdealBasis::make(ring, std::move(ideal_gens)), local_order());
        long c = require_finite(col, "non-isolated singularity: infinite colength at step " +
                                         std::to_string(j) + " of the Milnor chain");
        mu = c - mu;
        if (mu < 0)
            throw GenericityError("negative Milnor number in the chain (non-generic combination)");
        prefix.push_back(g[static_cast<size_t>(j - 1)]);
    }
    return mu;
}

/// Runs `trials` randomizations, escalating the coefficient bound once.
long randomized_agreement(const std::string& task, std::uint64_t seed, int trials,
                          const std::function<long(std::uint64_t, long)>& once) {
    if (trials < 1)
        trials = 1;
    for (long bound : {kCoeffBound, kCoeffBound * 10}) {
        std::vector<long> vals;
        bool failed = false;
        for (int t = 0; t < trials; ++t) {
            try {
                vals.push_back(once(derive_seed(seed, task, static_cast<std::uint64_t>(t) |
                                                          (bound > kCoeffBound ? 0x1000000ULL : 0ULL)),
                                    bound));
            } catch (const GenericityError&) {
                failed = true;
                break;
            }
        }
        if (failed)
            continue;
        bool agree = std::all_of(vals.begin(), vals.end(), [&](long v) { return v == vals.front(); });
        if (agree)
            return vals.front();
    }
    throw GenericityError("randomized trials disagree for " + task + " even after escalating the bound");
}

} // namespace

void GermProblem::validate() const {
    const int n = nvars();
    if (n < 2)
        throw InputError("a germ problem needs at least two source variables");
    if (static_cast<int>(phi.size()) != n - 2)
        throw InputError("expected " + std::to_string(n - 2) + " defining equations for a surface in " +
                         std::to_string(n) + " variables, got " + std::to_string(phi.size()));
    for (const char* reserved : {"u", "v"})
        if (ring->index_of(reserved))
            throw InputError(std::string("variable name '") + reserved +
                             "' is reserved for the discriminant plane");
    for (const auto& p : phi) {
        check_same_ring(p.ring(), ring);
        if (p.is_zero())
            throw InputError("zero defining equation");
        if (p.coeff_at_origin() != 0)
            throw InputError("defining equations must vanish at the origin");
    }
    for (const auto& fi : f) {
        check_same_ring(fi.ring(), ring);
        if (fi.coeff_at_origin() != 0)
            throw InputError("the map components must vanish at the origin");
    }
    if (weights) {
        if (static_cast<int>(weights->size()) != n)
            throw InputError("expected one weight per variable");
        for (long w : *weights)
            if (w <= 0)
                throw InputError("weights must be positive");
        std::span<const long> w(*weights);
        auto declared_degree = [&](const Poly& p, std::optional<long> declared, const char* which) {
            if (p.is_zero())
                return declared.value_or(0L);
            long d0 = declared ? *declared : p.terms().front().m.weighted_deg(w);
            if (!is_weighted_homogeneous(p, w, d0))
                throw InputError(std::string(which) +
                                 " is not weighted homogeneous of the declared degree");
            return d0;
        };
        for (size_t i = 0; i < phi.size(); ++i) {
            std::optional<long> dec;
            if (phi_degrees && i < phi_degrees->size())
                dec = (*phi_degrees)[i];
            declared_degree(phi[i], dec, "a defining equation");
        }
        for (size_t i = 0; i < 2; ++i) {
            std::optional<long> dec;
            if (f_degrees)
                dec = (*f_degrees)[i];
            declared_degree(f[i], dec, "a map component");
        }
    }
}

Poly jacobian_determinant(const GermProblem& P) {
    std::vector<Poly> rows = {P.f[0], P.f[1]};
    for (const auto& p : P.phi)
        rows.push_back(p);
    return determinant(jacobian_matrix(rows, all_vars(P.ring)));
}

IdealBasis singular_locus_ideal(const GermProblem& P) {
    Poly delta = jacobian_determinant(P);
    if (delta.is_zero())
        throw DegenerateError("the Jacobian determinant vanishes identically: "
                              "f does not have finite singularity type on X");
    std::vector<Poly> gens = P.phi;
    gens.push_back(std::move(delta));
    return IdealBasis::make(P.ring, std::move(gens));
}

long milnor_icis(const IdealBasis& gens, std::uint64_t seed, int trials) {
    if (gens.gens.empty())
        return 0; // smooth ambient germ
    if (static_cast<int>(gens.gens.size()) > gens.ring->nvars())
        throw InputError("more generators than variables in a complete intersection");
    if (gens.gens.size() == 1)
        return milnor_chain_once(gens, derive_seed(seed, "milnor-single"), kCoeffBound);
    return randomized_agreement("milnor-icis", seed, trials,
                                [&](std::uint64_t s, long bound) { return milnor_chain_once(gens, s, bound); });
}

long degree_m(const GermProblem& P) {
    std::vector<Poly> gens = P.phi;
    gens.push_back(P.f[0]);
    gens.push_back(P.f[1]);
    auto col = colength(IdealBasis::make(P.ring, std::move(gens)), local_order());
    return require_finite(col, "f^{-1}(0) meets X in a positive-dimensional germ: the degree is undefined");
}

long cusp_count(const GermProblem& P) {
    Poly delta = jacobian_determinant(P);
    if (delta.is_zero())
        throw DegenerateError("the Jacobian determinant vanishes identically");
    std::vector<Poly> rows = {P.f[0], P.f[1]};
    for (const auto& p : P.phi)
        rows.push_back(p);
    rows.push_back(delta);
    auto minors = minors_ideal(jacobian_matrix(rows, all_vars(P.ring)), P.nvars());
    std::vector<Poly> gens = P.phi;
    for (auto& m : minors)
        gens.push_back(std::move(m));
    auto col = colength(IdealBasis::make(P.ring, std::move(gens)), local_order());
    return require_finite(col, "the cusp scheme is not isolated: f is not A-finite");
}

Poly discriminant_equation(const GermProblem& P) {
    const RingPtr& R = P.ring;
    Poly delta = jacobian_determinant(P);
    if (delta.is_zero())
        throw DegenerateError("the Jacobian determinant vanishes identically");

    std::vector<std::string> big_names = R->vars();
    big_names.push_back("u");
    big_names.push_back("v");
    RingPtr big = PolyRing::create(big_names, MonomialOrder::degrevlex());
    std::vector<int> emb;
    for (const auto& name : R->vars())
        emb.push_back(*big->index_of(name));

    std::vector<Poly> gens;
    for (const auto& p : P.phi)
        gens.push_back(p.map_to(big, emb));
    gens.push_back(delta.map_to(big, emb));
    gens.push_back(Poly::variable(big, *big->index_of("u")) - P.f[0].map_to(big, emb));
    gens.push_back(Poly::variable(big, *big->index_of("v")) - P.f[1].map_to(big, emb));

    IdealBasis E = eliminate(IdealBasis::make(big, std::move(gens)), R->vars());
    if (E.gens.empty())
        throw DegenerateError("the restriction of f to its singular locus is not finite: "
                              "no discriminant equation exists");
    // The image of a curve is a plane curve: principal ideal, so the reduced
    // basis has one element. Guard with the minimal-degree pick anyway.
    const Poly* best = &E.gens.front();
    for (const auto& g : E.gens)
        if (g.total_degree() < best->total_degree())
            best = &g;
    Poly g = best->primitive_part();
    if (g.coeff_at_origin() != 0)
        throw DegenerateError("the singular locus does not pass through the origin");
    return g;
}

long mu_plane_curve(const Poly& g) {
    if (g.is_zero())
        throw InputError("zero polynomial has no curve Milnor number");
    if (g.coeff_at_origin() != 0)
        throw InputError("the curve must pass through the origin");
    const RingPtr& r = g.ring();
    if (r->nvars() != 2)
        throw InputError("plane curve expected");
    auto col = colength(IdealBasis::make(r, {g.derivative(0), g.derivative(1)}), local_order());
    return require_finite(col, "the plane curve is not reduced at the origin: f is not A-finite");
}

long double_fold_count(long mu_Delta, long mu_S, long c) {
    long diff = mu_Delta - mu_S;
    if (diff < 0 || diff % 2 != 0)
        throw DegenerateError("mu(Delta) - mu(S) is not a non-negative even number: "
                              "the input is not A-finite or genericity failed upstream");
    long d = diff / 2 - c;
    if (d < 0)
        throw DegenerateError("negative double-fold count: "
                              "the input is not A-finite or genericity failed upstream");
    return d;
}

long discriminant_milnor_number(long mu_Delta, long c, long d, long mu_S) {
    long a = mu_Delta - 2 * c - d;
    long b = d + mu_S;
    if (a != b)
        throw InternalError("discriminant Milnor number expressions disagree: " + std::to_string(a) +
                            " vs " + std::to_string(b));
    return a;
}

namespace detail {

Poly pullback(const GermProblem& P, const Poly& g) {
    // g lives in (u, v); substitute u -> f1, v -> f2.
    const RingPtr& guv = g.ring();
    std::vector<std::optional<Poly>> subs(static_cast<size_t>(guv->nvars()));
    subs[static_cast<size_t>(*guv->index_of("u"))] = P.f[0];
    subs[static_cast<size_t>(*guv->index_of("v"))] = P.f[1];
    return g.compose(P.ring, subs);
}

long mu_curve_on_surface(const GermProblem& P, const Poly& extra, long mu_X) {
    const int n = P.nvars();
    std::vector<Poly> funcs = P.phi;
    funcs.push_back(extra);
    auto minors = minors_ideal(jacobian_matrix(funcs, all_vars(P.ring)), n - 1);
    std::vector<Poly> gens = P.phi;
    for (auto& m : minors)
        gens.push_back(std::move(m));
    auto col = colength(IdealBasis::make(P.ring, std::move(gens)), local_order());
    long total = require_finite(col, "the curve is not an isolated complete intersection at the origin");
    long mu = total - mu_X;
    if (mu < 0)
        throw InternalError("curve Milnor number came out negative");
    return mu;
}

std::optional<long> colength_with_sections(const IdealBasis& gens, const std::vector<Poly>& sections) {
    const RingPtr& R = gens.ring;
    std::vector<Poly> work = gens.gens;
    std::vector<Poly> cuts = sections;
    std::vector<bool> removed(static_cast<size_t>(R->nvars()), false);

    // Substitute each linear form away: x_p := solution, highest-index
    // variable with nonzero coefficient.
    for (size_t li = 0; li < cuts.size(); ++li) {
        const Poly& ell = cuts[li];
        int pick = -1;
        Rat coeff;
        for (const auto& t : ell.terms()) {
            if (t.m.deg() != 1)
                throw InternalError("sections must be linear forms");
            for (int v = R->nvars() - 1; v >= 0; --v)
                if (t.m[v] == 1 && v > pick) {
                    pick = v;
                    coeff = t.c;
                }
        }
        if (pick < 0)
            return std::nullopt; // zero section: cannot cut
        Poly image = ell.axpy(-coeff, Mono::one(R->nvars()), Poly::variable(R, pick)).scaled(Rat(-1) / coeff);
        std::vector<std::optional<Poly>> subs(static_cast<size_t>(R->nvars()));
        subs[static_cast<size_t>(pick)] = image;
        for (auto& w : work)
            w = w.compose(R, subs);
        for (size_t lj = li + 1; lj < cuts.size(); ++lj)
            cuts[lj] = cuts[lj].compose(R, subs);
        removed[static_cast<size_t>(pick)] = true;
    }

    std::vector<std::string> left;
    std::vector<int> index_map(static_cast<size_t>(R->nvars()), -1);
    for (int v = 0; v < R->nvars(); ++v)
        if (!removed[static_cast<size_t>(v)]) {
            index_map[static_cast<size_t>(v)] = static_cast<int>(left.size());
            left.push_back(R->var_name(v));
        }

    if (left.empty()) {
        // Everything substituted: the quotient is C unless a unit remains.
        for (const auto& w : work)
            if (!w.is_zero())
                return 0;
        return 1;
    }
    RingPtr sub = PolyRing::create(left, local_order());
    std::vector<Poly> mapped;
    for (const auto& w : work)
        if (!w.is_zero())
            mapped.push_back(w.map_to(sub, index_map));
    return colength(IdealBasis::make(sub, std::move(mapped)), local_order());
}

PreimageCurve preimage_curve(const GermProblem& P, const Poly& g, long mu_X, std::uint64_t seed, int trials) {
    Poly delta = jacobian_determinant(P);
    Poly h = pullback(P, g);
    if (h.is_zero())
        throw DegenerateError("the discriminant pulls back to zero on X");

    // h vanishes twice along every fold branch of S and once along the
    // residual branches; delta cuts S exactly once. On the normal surface X
    // the quotient h/delta is regular and cuts the reduced preimage curve.
    // Everything downstream works modulo a power of the maximal ideal, so
    // the quotient is computed by truncated division with a degree margin,
    // certified through the Nakayama criterion of the colength run.
    std::vector<Poly> divisor_gens = {delta};
    for (const auto& p : P.phi)
        divisor_gens.push_back(p);
    IdealBasis divisor = IdealBasis::make(P.ring, std::move(divisor_gens));
    const int n = P.nvars();
    const int margin = 6;

    for (int D = 6; D <= 512; D += std::max(2, D / 4)) {
        LiftedNF L = lifted_division_mod(h, divisor, D + margin);
        if (!L.remainder.is_zero())
            throw DegenerateError("the pulled-back discriminant is not divisible by the Jacobian "
                                  "determinant on X: the input is not A-finite");
        Poly q = L.cofactors[0];
        if (q.is_zero())
            throw DegenerateError("trivial preimage equation");

        std::vector<Poly> funcs = P.phi;
        funcs.push_back(q);
        auto minors = minors_ideal(jacobian_matrix(funcs, all_vars(P.ring)), n - 1);
        std::vector<Poly> gens = P.phi;
        for (auto& mp : minors)
            gens.push_back(std::move(mp));
        ColengthProbe probe = colength_at(IdealBasis::make(P.ring, std::move(gens)), D);
        if (!probe.certified)
            continue;

        long mu = probe.count - mu_X;
        if (mu < 0)
            throw InternalError("preimage curve Milnor number came out negative");
        PreimageCurve out{q, mu, 0};
        std::vector<Poly> curve = P.phi;
        curve.push_back(q);
        out.m0 = germ_multiplicity(IdealBasis::make(P.ring, std::move(curve)), 1,
                                   derive_seed(seed, "preimage-multiplicity"), trials);
        return out;
    }
    throw DegenerateError("the preimage curve is not an isolated complete intersection at the origin");
}

} // namespace detail

long preimage_curve_milnor(const GermProblem& P, const Poly& g, std::uint64_t seed, int trials) {
    long mu_X = P.phi.empty() ? 0
                              : milnor_icis(IdealBasis::make(P.ring, P.phi),
                                            derive_seed(seed, "mu_X"), trials);
    return detail::preimage_curve(P, g, mu_X, seed, trials).mu;
}

long germ_multiplicity(const IdealBasis& gens, int dim, std::uint64_t seed, int trials) {
    if (dim != 1 && dim != 2)
        throw InputError("germ multiplicity supports dimensions 1 and 2");
    for (const auto& gp : gens.gens)
        if (gp.coeff_at_origin() != 0)
            throw InputError("the germ must pass through the origin");
    const RingPtr& R = gens.ring;
    if (trials < 1)
        trials = 1;

    std::optional<long> best;
    for (long bound : {kCoeffBound, kCoeffBound * 10}) {
        for (int t = 0; t < trials; ++t) {
            Rng rng(derive_seed(seed, "multiplicity", static_cast<std::uint64_t>(t) |
                                                         (bound > kCoeffBound ? 0x1000000ULL : 0ULL)));
            std::vector<Poly> cuts;
            for (int i = 0; i < dim; ++i) {
                Poly ell = Poly::zero(R);
                bool nonzero = false;
                while (!nonzero) {
                    std::vector<Term> terms;
                    for (int v = 0; v < R->nvars(); ++v) {
                        long cv = rng.int_in(-bound, bound);
                        if (cv == 0)
                            continue;
                        Mono mo(R->nvars());
                        mo.set(v, 1);
                        terms.push_back({mo, Rat(cv)});
                        nonzero = true;
                    }
                    if (nonzero)
                        ell = Poly::from_terms(R, std::move(terms));
                }
                cuts.push_back(std::move(ell));
            }
            auto col = detail::colength_with_sections(gens, cuts);
            if (col && (!best || *col < *best))
                best = col;
        }
        if (best)
            break;
    }
    if (!best)
        throw DegenerateError("all generic sections have infinite colength: "
                              "the germ does not have the stated dimension");
    if (*best <= 0)
        throw DegenerateError("the germ is empty or does not pass through the origin");
    return *best;
}

InvariantReport analyze(const GermProblem& P, std::uint64_t seed, int trials) {
    P.validate();
    InvariantReport rep;
    rep.mu_X = P.phi.empty() ? 0
                             : milnor_icis(IdealBasis::make(P.ring, P.phi),
                                           derive_seed(seed, "mu_X"), trials);

    IdealBasis S = singular_locus_ideal(P); // throws if delta == 0
    auto s_col = colength(S, local_order());
    if (s_col && *s_col == 0) {
        // f is a submersion on a smooth germ: stable, no curve invariants.
        rep.submersion = true;
        rep.m = degree_m(P);
        rep.m0_X = 1;
        rep.discriminant = Poly::zero(PolyRing::create({"u", "v"}, MonomialOrder::degrevlex()));
        rep.checks = {true, true, true, true};
        rep.afinite = true;
        rep.notes.push_back("submersion germ, no singularity: curve invariants are vacuously zero");
        return rep;
    }

    Poly delta = jacobian_determinant(P);
    rep.mu_S = detail::mu_curve_on_surface(P, delta, rep.mu_X);
    rep.m = degree_m(P);
    rep.c = cusp_count(P);
    rep.discriminant = discriminant_equation(P);
    rep.mu_Delta = mu_plane_curve(rep.discriminant);
    rep.d = double_fold_count(rep.mu_Delta, rep.mu_S, rep.c);
    rep.mu_disc = discriminant_milnor_number(rep.mu_Delta, rep.c, rep.d, rep.mu_S);

    auto pre = detail::preimage_curve(P, rep.discriminant, rep.mu_X, seed, trials);
    rep.mu_preimage = pre.mu;
    rep.m0_preimage = pre.m0;

    rep.m0_X = P.phi.empty() ? 1
                             : germ_multiplicity(IdealBasis::make(P.ring, P.phi), 2,
                                                 derive_seed(seed, "m0_X"), trials);
    rep.m0_S = germ_multiplicity(S, 1, derive_seed(seed, "m0_S"), trials);

    rep.checks.fold_cusp_balance = 2 * (rep.c + rep.d) == rep.mu_Delta - rep.mu_S;
    rep.checks.degree_formula = rep.c + rep.mu_X == rep.mu_S + rep.m - 2;
    rep.checks.disc_milnor_consistent =
        rep.mu_disc == rep.mu_Delta - 2 * rep.c - rep.d && rep.mu_disc == rep.d + rep.mu_S;
    rep.checks.pullback_formula = (rep.m - 1) * rep.mu_Delta == rep.mu_preimage + rep.m - 2;
    rep.afinite = true;
    return rep;
}

} // namespace germlab

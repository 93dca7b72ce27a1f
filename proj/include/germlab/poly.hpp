#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "germlab/monomial.hpp"
#include "germlab/rational.hpp"
#include "germlab/ring.hpp"

namespace germlab {

struct Term {
    Mono m;
    Rat c;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Canonical form: nonzero coefficients, pairwise distinct monomials, terms
/// sorted descending by the ring's active order. Immutable in spirit: all
/// operations return new values.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }

    static Poly constant(RingPtr ring, Rat c) {
        Poly p(std::move(ring));
        if (c != 0)
            p.terms_.push_back({Mono::one(p.ring_->nvars()), std::move(c)});
        return p;
    }

    static Poly variable(RingPtr ring, int i) {
        Poly p(std::move(ring));
        Mono m(p.ring_->nvars());
        m.set(i, 1);
        p.terms_.push_back({m, Rat(1)});
        return p;
    }

    static Poly monomial(RingPtr ring, Mono m, Rat c) {
        Poly p(std::move(ring));
        if (c != 0)
            p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    /// Builds canonical form from arbitrary term data (combines duplicates,
    /// drops zeros, sorts).
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t nterms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

    /// Nonzero constant term at the origin, i.e. unit in the local ring.
    bool is_unit_at_origin() const;

    const Term& leading_term() const {
        if (terms_.empty())
            throw InternalError("leading term of zero polynomial");
        return terms_.front();
    }
    const Mono& leading_mono() const { return leading_term().m; }
    const Rat& leading_coeff() const { return leading_term().c; }

    /// Total degree (max over terms); -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_)
            d = std::max(d, t.m.deg());
        return d;
    }

    /// Order of vanishing at 0 (min total degree over terms); -1 for zero.
    int order_at_origin() const {
        int d = -1;
        for (const auto& t : terms_)
            d = (d < 0) ? t.m.deg() : std::min(d, t.m.deg());
        return d;
    }

    /// ecart = total degree - degree of the leading monomial. Drives local
    /// division: prefer reducers whose tail reaches least far up in degree.
    int ecart() const { return total_degree() - leading_mono().deg(); }

    Rat coeff_at_origin() const {
        for (const auto& t : terms_)
            if (t.m.is_one())
                return t.c;
        return Rat(0);
    }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& c) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// this + c * x^m * q, the reduction/merge primitive.
    Poly axpy(const Rat& c, const Mono& m, const Poly& q) const;

    /// s * this + c * x^m * q in one merge; the fraction-free reduction step.
    Poly scaled_axpy(const Rat& s, const Rat& c, const Mono& m, const Poly& q) const;

    Poly pow(unsigned long e) const;

    Poly derivative(int var) const;

    /// Substitutes polynomials for the variables listed in `subs` (nullopt
    /// entries stay untouched). The results live in `target` (which may be
    /// the same ring).
    Poly compose(const RingPtr& target, const std::vector<std::optional<Poly>>& subs) const;

    /// Replaces the given variables by rational constants.
    Poly specialize(const std::vector<std::pair<int, Rat>>& bindings) const;

    /// Reinterprets into `target`: variable i of this ring maps to variable
    /// index_map[i] of the target; all dropped variables must have exponent 0.
    Poly map_to(const RingPtr& target, const std::vector<int>& index_map) const;

    /// Same variables, different active order.
    Poly with_ring(const RingPtr& target) const;

    /// Drops all terms of total degree > bound (work modulo m^{bound+1}).
    Poly truncated_above(int bound) const;

    /// Divides by the rational content and normalizes the leading coefficient
    /// to be positive: integer coefficients with gcd 1.
    Poly primitive_part() const;

    Poly monic() const { return is_zero() ? *this : scaled(Rat(1) / leading_coeff()); }

    Rat content() const;

    /// Exact division by a single polynomial; nullopt if not divisible.
    std::optional<Poly> divided_by(const Poly& d) const;

    /// Canonical text form, e.g. "-6*x^2-3*y^2-12*z^3".
    std::string to_string() const;

private:
    void assert_compatible(const Poly& o) const { check_same_ring(ring_, o.ring_); }

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Weighted-homogeneity probe: all terms share weighted degree `degree`.
bool is_weighted_homogeneous(const Poly& p, std::span<const long> weights, long degree);

} // namespace germlab

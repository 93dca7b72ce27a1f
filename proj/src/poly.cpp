#include "germlab/poly.hpp"

#include <algorithm>
#include <sstream>

namespace germlab {

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    const auto& ord = ring->order();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
    Poly p(std::move(ring));
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (t.c == 0)
            continue;
        if (!p.terms_.empty() && p.terms_.back().m == t.m) {
            p.terms_.back().c += t.c;
            if (p.terms_.back().c == 0)
                p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Poly::is_unit_at_origin() const {
    for (const auto& t : terms_)
        if (t.m.is_one())
            return t.c != 0;
    return false;
}

Poly Poly::operator-() const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({t.m, -t.c});
    return r;
}

Poly Poly::axpy(const Rat& c, const Mono& m, const Poly& q) const {
    assert_compatible(q);
    if (c == 0 || q.is_zero())
        return *this;
    const auto& ord = ring_->order();
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + q.terms_.size());
    size_t i = 0, j = 0;
    Rat prod;
    while (i < terms_.size() && j < q.terms_.size()) {
        Mono mj = m.is_one() ? q.terms_[j].m : q.terms_[j].m.mul(m);
        int cmp = ord.compare(terms_[i].m, mj);
        if (cmp > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
            prod = c * q.terms_[j].c;
            r.terms_.push_back({std::move(mj), prod});
            ++j;
        } else {
            prod = terms_[i].c + c * q.terms_[j].c;
            if (prod != 0)
                r.terms_.push_back({terms_[i].m, prod});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        r.terms_.push_back(terms_[i]);
    for (; j < q.terms_.size(); ++j) {
        Mono mj = m.is_one() ? q.terms_[j].m : q.terms_[j].m.mul(m);
        r.terms_.push_back({std::move(mj), c * q.terms_[j].c});
    }
    return r;
}

Poly Poly::scaled_axpy(const Rat& s, const Rat& c, const Mono& m, const Poly& q) const {
    assert_compatible(q);
    if (s == 1)
        return axpy(c, m, q);
    if (s == 0)
        return Poly::zero(ring_).axpy(c, m, q);
    const auto& ord = ring_->order();
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + q.terms_.size());
    size_t i = 0, j = 0;
    Rat prod;
    while (i < terms_.size() && j < q.terms_.size()) {
        Mono mj = m.is_one() ? q.terms_[j].m : q.terms_[j].m.mul(m);
        int cmp = ord.compare(terms_[i].m, mj);
        if (cmp > 0) {
            r.terms_.push_back({terms_[i].m, s * terms_[i].c});
            ++i;
        } else if (cmp < 0) {
            prod = c * q.terms_[j].c;
            r.terms_.push_back({std::move(mj), prod});
            ++j;
        } else {
            prod = s * terms_[i].c + c * q.terms_[j].c;
            if (prod != 0)
                r.terms_.push_back({terms_[i].m, prod});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        r.terms_.push_back({terms_[i].m, s * terms_[i].c});
    for (; j < q.terms_.size(); ++j) {
        Mono mj = m.is_one() ? q.terms_[j].m : q.terms_[j].m.mul(m);
        r.terms_.push_back({std::move(mj), c * q.terms_[j].c});
    }
    return r;
}

Poly Poly::operator+(const Poly& o) const { return axpy(Rat(1), Mono::one(ring_->nvars()), o); }
Poly Poly::operator-(const Poly& o) const { return axpy(Rat(-1), Mono::one(ring_->nvars()), o); }

Poly Poly::scaled(const Rat& c) const {
    if (c == 0)
        return Poly(ring_);
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({t.m, c * t.c});
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    assert_compatible(o);
    if (is_zero() || o.is_zero())
        return Poly(ring_);
    // Chain merges when one factor is short, hash-accumulate otherwise.
    if (terms_.size() <= 4 || o.terms_.size() <= 4) {
        const Poly& small = terms_.size() <= o.terms_.size() ? *this : o;
        const Poly& big = terms_.size() <= o.terms_.size() ? o : *this;
        Poly r(ring_);
        for (const auto& t : small.terms_)
            r = r.axpy(t.c, t.m, big);
        return r;
    }
    std::unordered_map<Mono, Rat, MonoHash> acc;
    acc.reserve(terms_.size() * o.terms_.size() / 2);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            auto [it, fresh] = acc.try_emplace(a.m.mul(b.m));
            if (fresh)
                it->second = a.c * b.c;
            else
                it->second += a.c * b.c;
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0)
            out.push_back({m, std::move(c)});
    return from_terms(ring_, std::move(out));
}

bool Poly::operator==(const Poly& o) const {
    if (!ring_ || !o.ring_)
        return terms_.empty() && o.terms_.empty();
    assert_compatible(o);
    if (terms_.size() != o.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c)
            return false;
    return true;
}

Poly Poly::pow(unsigned long e) const {
    Poly r = constant(ring_, Rat(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return r;
}

Poly Poly::derivative(int var) const {
    if (var < 0 || var >= ring_->nvars())
        throw InputError("derivative with respect to unknown variable");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        int e = t.m[var];
        if (e == 0)
            continue;
        Mono m = t.m;
        m.set(var, e - 1);
        out.push_back({m, t.c * e});
    }
    return from_terms(ring_, std::move(out));
}

Poly Poly::compose(const RingPtr& target, const std::vector<std::optional<Poly>>& subs) const {
    if (static_cast<int>(subs.size()) != ring_->nvars())
        throw InputError("compose: one substitution slot per variable required");
    // Identity images for untouched variables; requires same names in target.
    std::vector<Poly> images;
    images.reserve(subs.size());
    for (size_t i = 0; i < subs.size(); ++i) {
        if (subs[i]) {
            check_same_ring(subs[i]->ring(), target);
            images.push_back(*subs[i]);
        } else {
            auto idx = target->index_of(ring_->var_name(static_cast<int>(i)));
            if (!idx)
                throw InputError("compose: variable '" + ring_->var_name(static_cast<int>(i)) +
                                 "' has no image in the target ring");
            images.push_back(Poly::variable(target, *idx));
        }
    }
    // Power cache per variable keeps repeated exponents cheap.
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](size_t v, int e) -> const Poly& {
        auto& cache = powers[v];
        if (cache.empty())
            cache.push_back(Poly::constant(target, Rat(1)));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * images[v]);
        return cache[static_cast<size_t>(e)];
    };
    Poly acc = Poly::zero(target);
    for (const auto& t : terms_) {
        Poly prod = Poly::constant(target, t.c);
        for (int v = 0; v < ring_->nvars(); ++v) {
            int e = t.m[v];
            if (e > 0)
                prod = prod * power(static_cast<size_t>(v), e);
        }
        acc = acc + prod;
    }
    return acc;
}

Poly Poly::specialize(const std::vector<std::pair<int, Rat>>& bindings) const {
    std::vector<std::optional<Poly>> subs(static_cast<size_t>(ring_->nvars()));
    for (const auto& [var, value] : bindings) {
        if (var < 0 || var >= ring_->nvars())
            throw InputError("specialize: unknown variable index");
        subs[static_cast<size_t>(var)] = Poly::constant(ring_, value);
    }
    return compose(ring_, subs);
}

Poly Poly::map_to(const RingPtr& target, const std::vector<int>& index_map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Mono m(target->nvars());
        for (int i = 0; i < ring_->nvars(); ++i) {
            int e = t.m[i];
            if (e == 0)
                continue;
            int j = index_map[static_cast<size_t>(i)];
            if (j < 0)
                throw InternalError("map_to drops a variable with nonzero exponent");
            m.set(j, m[j] + e);
        }
        out.push_back({m, t.c});
    }
    return from_terms(target, std::move(out));
}

Poly Poly::with_ring(const RingPtr& target) const {
    if (ring_->vars() != target->vars())
        throw InternalError("with_ring requires identical variables");
    std::vector<Term> copy = terms_;
    return from_terms(target, std::move(copy));
}

Poly Poly::truncated_above(int bound) const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        if (t.m.deg() <= bound)
            r.terms_.push_back(t);
    return r;
}

Rat Poly::content() const {
    if (terms_.empty())
        return Rat(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

Poly Poly::primitive_part() const {
    if (terms_.empty())
        return *this;
    Rat c = content();
    if (leading_coeff() < 0)
        c = -c;
    return scaled(Rat(1) / c);
}

std::optional<Poly> Poly::divided_by(const Poly& d) const {
    assert_compatible(d);
    if (d.is_zero())
        throw InputError("division by zero polynomial");
    Poly rem = *this;
    std::vector<Term> qterms;
    const auto& dl = d.leading_term();
    while (!rem.is_zero()) {
        const auto& rl = rem.leading_term();
        if (!dl.m.divides(rl.m))
            return std::nullopt;
        Rat c = rl.c / dl.c;
        Mono m = dl.m.quotient_of(rl.m);
        qterms.push_back({m, c});
        rem = rem.axpy(-c, m, d);
    }
    return from_terms(ring_, std::move(qterms));
}

std::string Poly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        Rat c = t.c;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? "-" : "+");
            if (c < 0)
                c = -c;
        }
        first = false;
        std::vector<std::string> factors;
        if (t.m.is_one() || c != 1)
            factors.push_back(rat_to_string(c));
        for (int v = 0; v < ring_->nvars(); ++v) {
            int e = t.m[v];
            if (e == 0)
                continue;
            std::string f = ring_->var_name(v);
            if (e >= 2)
                f += "^" + std::to_string(e);
            factors.push_back(std::move(f));
        }
        for (size_t k = 0; k < factors.size(); ++k) {
            if (k)
                out << "*";
            out << factors[k];
        }
    }
    return out.str();
}

bool is_weighted_homogeneous(const Poly& p, std::span<const long> weights, long degree) {
    for (const auto& t : p.terms())
        if (t.m.weighted_deg(weights) != degree)
            return false;
    return true;
}

} // namespace germlab

#include "germlab/stdbasis.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <tuple>

namespace germlab {

namespace {

constexpr int kTruncStart = 6;
constexpr int kTruncCeiling = 512;     // staircase safety ceiling
constexpr long kStaircaseCap = 400000; // monomial count guard
constexpr int kTailPassCap = 20000;    // tail reduction guard, untruncated local

/// Completion engine shared by global Buchberger and local Mora runs.
class Engine {
public:
    Engine(RingPtr work_ring, SBOptions opts)
        : ring_(std::move(work_ring)), ord_(ring_->order()), opts_(opts),
          local_(ord_.is_local()) {
        if (!local_ && !ord_.is_global())
            throw InputError("mixed local/global orders are not supported");
        if (opts_.truncate_degree && ord_.kind() != MonomialOrder::Kind::NegDegRevLex)
            throw InternalError("degree truncation requires negdegrevlex");
    }

    struct Elem {
        Poly p; // primitive integer form during the run
        int ecart;
        std::vector<Poly> rep; // over the input generators, if tracked
    };

    const std::vector<Elem>& elems() const { return elems_; }
    const std::vector<int>& survivors() const { return survivors_; }
    const RingPtr& ring() const { return ring_; }

    /// Loads an already-completed basis as trusted reducers (normal forms
    /// against a finished StandardBasis: no pair processing needed).
    void load_trusted(const std::vector<Poly>& basis) {
        ngens_ = basis.size();
        loading_ = true;
        for (const auto& b : basis) {
            Poly g = trunc(b.with_ring(ring_));
            if (!g.is_zero())
                add_elem(std::move(g), {});
        }
        loading_ = false;
        std::priority_queue<std::tuple<int, int, int>, std::vector<std::tuple<int, int, int>>, PairOrder>()
            .swap(queue_);
        pending_.clear();
    }

    void run(const std::vector<Poly>& gens) {
        ngens_ = gens.size();
        for (size_t i = 0; i < gens.size(); ++i) {
            // Truncated pedigrees hold modulo m^(D+1); that needs every
            // generator inside the maximal ideal.
            if (opts_.truncate_degree && opts_.track_pedigree &&
                gens[i].coeff_at_origin() != 0)
                throw InternalError("truncated pedigree requires generators vanishing at 0");
            Poly g = trunc(gens[i].with_ring(ring_));
            if (g.is_zero())
                continue;
            std::vector<Poly> rep;
            if (opts_.track_pedigree) {
                rep.assign(ngens_, Poly::zero(ring_));
                rep[i] = Poly::constant(ring_, Rat(1));
            }
            add_elem(std::move(g), std::move(rep));
        }
        while (!queue_.empty()) {
            auto [deg, i, j] = queue_.top();
            queue_.pop();
            pending_.erase({i, j});
            if (skip_pair(i, j))
                continue;
            auto [s, srep] = spoly(i, j);
            if (s.is_zero())
                continue;
            auto [r, rrep] = reduce(std::move(s), std::move(srep), nullptr);
            if (!r.is_zero())
                add_elem(std::move(r), std::move(rrep));
        }
        finalize();
    }

    /// Weak normal form of p against the finished basis. If `lift` is given,
    /// maintains unit * p = sum(cof_k * gen_k) + h using the basis pedigrees.
    struct Lift {
        Poly unit;
        std::vector<Poly> cof; // over input generators
    };

    Poly weak_nf(const Poly& p, Lift* lift) {
        Poly h = trunc(p.with_ring(ring_));
        if (lift) {
            lift->unit = Poly::constant(ring_, Rat(1));
            lift->cof.assign(ngens_, Poly::zero(ring_));
        }
        Rat scale(1);
        auto [r, rep] = reduce(std::move(h), {}, lift, &scale);
        (void)rep;
        if (scale != 1) {
            Rat inv = Rat(1) / scale;
            r = r.scaled(inv);
            if (lift) {
                lift->unit = lift->unit.scaled(inv);
                for (auto& q : lift->cof)
                    q = q.scaled(inv);
            }
        }
        return r;
    }

    /// Fully reduced normal form (no term divisible by the leading ideal).
    Poly full_nf(const Poly& p) {
        Poly h = trunc(p.with_ring(ring_));
        Poly done = Poly::zero(ring_);
        long steps = 0;
        while (!h.is_zero()) {
            Rat scale(1);
            auto [r, rep] = reduce(std::move(h), {}, nullptr, &scale);
            (void)rep;
            if (scale != 1)
                r = r.scaled(Rat(1) / scale);
            if (r.is_zero())
                break;
            // Leading term is now irreducible; set it aside and keep going.
            done = done + Poly::monomial(ring_, r.leading_mono(), r.leading_coeff());
            h = r.axpy(Rat(-1), Mono::one(ring_->nvars()),
                       Poly::monomial(ring_, r.leading_mono(), r.leading_coeff()));
            if (++steps > kTailPassCap)
                throw Error("normal form tail reduction exceeded the safety ceiling");
        }
        return done;
    }

private:
    Poly trunc(Poly p) const {
        if (opts_.truncate_degree)
            return p.truncated_above(*opts_.truncate_degree);
        return p;
    }

    /// Rewrites every tail term divisible by a current leading monomial.
    /// In the truncated (finite) and global cases this terminates and keeps
    /// basis elements short, which bounds all later merge costs.
    Poly tail_reduce(Poly p) {
        size_t i = 1;
        long guard = 0;
        while (i < p.nterms() && guard < kTailPassCap) {
            const Term& t = p.terms()[i];
            int hit = -1;
            for (int k = 0; k < static_cast<int>(elems_.size()); ++k)
                if (elems_[static_cast<size_t>(k)].p.leading_mono().divides(t.m)) {
                    hit = k;
                    break;
                }
            if (hit < 0) {
                ++i;
                continue;
            }
            const Poly& g = elems_[static_cast<size_t>(hit)].p;
            const Rat gamma = coeff_gcd(t.c, g.leading_coeff());
            const Rat s = g.leading_coeff() / gamma;
            const Rat tt = t.c / gamma;
            // scaling moves no monomials: the already-scanned prefix stays
            // irreducible and scanning continues at the same index
            p = trunc(p.scaled_axpy(s, -tt, g.leading_mono().quotient_of(t.m), g));
            if (++guard % 16 == 0) {
                Rat c = p.content();
                if (c != 0 && c != 1)
                    p = p.scaled(Rat(1) / c);
            }
        }
        return p;
    }

    void add_elem(Poly p, std::vector<Poly> rep) {
        if (!loading_ && !opts_.track_pedigree && !elems_.empty())
            p = tail_reduce(std::move(p));
        // Primitive integer form keeps coefficient growth in check.
        Rat c = p.content();
        if (p.leading_coeff() < 0)
            c = -c;
        if (c != 1) {
            p = p.scaled(Rat(1) / c);
            for (auto& r : rep)
                r = r.scaled(Rat(1) / c);
        }
        int idx = static_cast<int>(elems_.size());
        elems_.push_back({std::move(p), 0, std::move(rep)});
        elems_.back().ecart = elems_.back().p.ecart();
        if (!loading_)
            for (int k = 0; k < idx; ++k)
                push_pair(k, idx);
    }

    void push_pair(int i, int j) {
        const Mono lcm = Mono::lcm(elems_[static_cast<size_t>(i)].p.leading_mono(),
                                   elems_[static_cast<size_t>(j)].p.leading_mono());
        if (opts_.truncate_degree && lcm.deg() > *opts_.truncate_degree)
            return; // the s-polynomial would vanish modulo m^(D+1)
        queue_.push({lcm.deg(), i, j});
        pending_.insert({i, j});
    }

    bool skip_pair(int i, int j) const {
        const Mono& mi = elems_[static_cast<size_t>(i)].p.leading_mono();
        const Mono& mj = elems_[static_cast<size_t>(j)].p.leading_mono();
        // Product criterion (global orders only).
        if (!local_ && mi.coprime_with(mj))
            return true;
        // Chain criterion.
        const Mono lcm = Mono::lcm(mi, mj);
        for (int k = 0; k < static_cast<int>(elems_.size()); ++k) {
            if (k == i || k == j)
                continue;
            if (!elems_[static_cast<size_t>(k)].p.leading_mono().divides(lcm))
                continue;
            if (!pending_.count(ordered(i, k)) && !pending_.count(ordered(j, k)))
                return true;
        }
        return false;
    }

    static std::pair<int, int> ordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

    std::pair<Poly, std::vector<Poly>> spoly(int i, int j) {
        const Elem& a = elems_[static_cast<size_t>(i)];
        const Elem& b = elems_[static_cast<size_t>(j)];
        const Mono lcm = Mono::lcm(a.p.leading_mono(), b.p.leading_mono());
        const Mono ma = a.p.leading_mono().quotient_of(lcm);
        const Mono mb = b.p.leading_mono().quotient_of(lcm);
        const Rat ca = b.p.leading_coeff();
        const Rat cb = -a.p.leading_coeff();
        Poly s = Poly::zero(ring_).axpy(ca, ma, a.p).axpy(cb, mb, b.p);
        s = trunc(std::move(s));
        std::vector<Poly> rep;
        if (opts_.track_pedigree) {
            rep.reserve(ngens_);
            for (size_t k = 0; k < ngens_; ++k)
                rep.push_back(trunc(Poly::zero(ring_).axpy(ca, ma, a.rep[k]).axpy(cb, mb, b.rep[k])));
        }
        return {std::move(s), std::move(rep)};
    }

    struct Saved {
        Poly p;
        int ecart;
        std::vector<Poly> rep;
        Poly unit;
        std::vector<Poly> cof;
    };

    static Rat coeff_gcd(const Rat& a, const Rat& b) {
        if (a.get_den() != 1 || b.get_den() != 1)
            return Rat(1);
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
        return Rat(g);
    }

    /// Weak normal form core. Local orders use Mora's ecart rule with saved
    /// intermediates (implicit unit multipliers); global orders reduce by
    /// index order. Reduction steps are fraction-free (h := s*h - t*m*g with
    /// integer s, t) with periodic content strips; `scale` accumulates the
    /// factor applied to h so callers can undo it. `rep` carries a
    /// combination over the input generators (completion phase), `lift` the
    /// division bookkeeping (public division); both are kept exactly
    /// consistent under the scaling.
    std::pair<Poly, std::vector<Poly>> reduce(Poly h, std::vector<Poly> rep, Lift* lift,
                                              Rat* scale_out = nullptr) {
        std::vector<Saved> saved;
        Rat scale(1);
        const bool tracking = !rep.empty() || lift;
        // Truncated arithmetic lives in O/m^(D+1): the order on the finitely
        // many surviving monomials is finite, so plain leading reduction
        // terminates and Mora's saved intermediates are unnecessary.
        const bool allow_save = local_ && !opts_.truncate_degree;
        auto strip = [&](long stride, long step) {
            if (h.is_zero() || step % stride != 0)
                return;
            Rat c = h.content();
            if (c == 1 || c == 0)
                return;
            Rat inv = Rat(1) / c;
            h = h.scaled(inv);
            scale *= inv;
            for (auto& r : rep)
                r = r.scaled(inv);
            if (lift) {
                lift->unit = lift->unit.scaled(inv);
                for (auto& q : lift->cof)
                    q = q.scaled(inv);
            }
        };
        strip(1, 0);
        long steps = 0;
        while (!h.is_zero()) {
            const Mono& lm = h.leading_mono();
            // Best reducer: minimal ecart among basis elements and saved
            // intermediates whose leading monomial divides lm; ties prefer
            // fewer terms, then basis over saved, then lowest index.
            int best = -1, best_saved = -1, best_ecart = 0;
            size_t best_size = 0;
            for (int k = 0; k < static_cast<int>(elems_.size()); ++k) {
                const Elem& e = elems_[static_cast<size_t>(k)];
                if (!e.p.leading_mono().divides(lm))
                    continue;
                if (best < 0 || e.ecart < best_ecart ||
                    (e.ecart == best_ecart && e.p.nterms() < best_size)) {
                    best = k;
                    best_ecart = e.ecart;
                    best_size = e.p.nterms();
                    if (!local_)
                        break; // global: first match by index
                }
            }
            if (local_) {
                for (int k = 0; k < static_cast<int>(saved.size()); ++k) {
                    const Saved& s = saved[static_cast<size_t>(k)];
                    if (!s.p.leading_mono().divides(lm))
                        continue;
                    if ((best < 0 && best_saved < 0) || s.ecart < best_ecart) {
                        best = -1;
                        best_saved = k;
                        best_ecart = s.ecart;
                    }
                }
            }
            if (best < 0 && best_saved < 0)
                break;
            int hecart = h.ecart();
            if (allow_save && best_ecart > hecart) {
                // Mora: remember the current state; it may reduce later
                // intermediates (this realizes division by units).
                Saved snap;
                snap.p = h;
                snap.ecart = hecart;
                if (!rep.empty())
                    snap.rep = rep;
                if (lift) {
                    snap.unit = lift->unit;
                    snap.cof = lift->cof;
                }
                saved.push_back(std::move(snap));
            }
            const Poly& g = best >= 0 ? elems_[static_cast<size_t>(best)].p
                                      : saved[static_cast<size_t>(best_saved)].p;
            const Mono m = g.leading_mono().quotient_of(lm);
            const Rat gamma = coeff_gcd(h.leading_coeff(), g.leading_coeff());
            const Rat s = g.leading_coeff() / gamma;
            const Rat t = h.leading_coeff() / gamma;
            h = trunc(h.scaled_axpy(s, -t, m, g));
            scale *= s;
            if (best >= 0) {
                const Elem& e = elems_[static_cast<size_t>(best)];
                if (!rep.empty())
                    for (size_t k = 0; k < ngens_; ++k)
                        rep[k] = trunc(rep[k].scaled_axpy(s, -t, m, e.rep[k]));
                if (lift) {
                    lift->unit = lift->unit.scaled(s);
                    for (size_t k = 0; k < ngens_; ++k)
                        lift->cof[k] = trunc(lift->cof[k].scaled_axpy(s, t, m, e.rep[k]));
                }
            } else {
                const Saved& sv = saved[static_cast<size_t>(best_saved)];
                if (!rep.empty())
                    for (size_t k = 0; k < ngens_; ++k)
                        rep[k] = trunc(rep[k].scaled_axpy(s, -t, m, sv.rep[k]));
                if (lift) {
                    lift->unit = lift->unit.scaled_axpy(s, -t, m, sv.unit);
                    for (size_t k = 0; k < ngens_; ++k)
                        lift->cof[k] = trunc(lift->cof[k].scaled_axpy(s, -t, m, sv.cof[k]));
                }
            }
            strip(tracking ? 32 : 4, ++steps);
        }
        if (scale_out)
            *scale_out = scale;
        return {std::move(h), std::move(rep)};
    }

    void finalize() {
        // Minimal leading set: drop elements whose leading monomial is
        // divisible by another survivor's.
        size_t n = elems_.size();
        std::vector<bool> dead(n, false);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                if (i == j || dead[j])
                    continue;
                const Mono& mi = elems_[i].p.leading_mono();
                const Mono& mj = elems_[j].p.leading_mono();
                if (mj.divides(mi) && (mi != mj || j < i)) {
                    dead[i] = true;
                    break;
                }
            }
        }
        survivors_.clear();
        for (size_t i = 0; i < n; ++i)
            if (!dead[i])
                survivors_.push_back(static_cast<int>(i));

        // Tail inter-reduction: rewrite tail terms divisible by another
        // survivor's leading monomial. Terminates outright when truncated;
        // capped otherwise (local tails can be infinite power series).
        for (int idx : survivors_) {
            Elem& e = elems_[static_cast<size_t>(idx)];
            long guard = 0;
            bool changed = true;
            while (changed && guard < kTailPassCap) {
                changed = false;
                const auto& terms = e.p.terms();
                for (size_t t = 1; t < terms.size(); ++t) {
                    for (int other : survivors_) {
                        if (other == idx)
                            continue;
                        const Elem& o = elems_[static_cast<size_t>(other)];
                        if (!o.p.leading_mono().divides(terms[t].m))
                            continue;
                        const Rat c = terms[t].c / o.p.leading_coeff();
                        const Mono m = o.p.leading_mono().quotient_of(terms[t].m);
                        e.p = trunc(e.p.axpy(-c, m, o.p));
                        if (opts_.track_pedigree)
                            for (size_t k = 0; k < ngens_; ++k)
                                e.rep[k] = trunc(e.rep[k].axpy(-c, m, o.rep[k]));
                        changed = true;
                        ++guard;
                        break;
                    }
                    if (changed)
                        break;
                }
            }
        }

        // Monic normalization.
        for (int idx : survivors_) {
            Elem& e = elems_[static_cast<size_t>(idx)];
            Rat lc = e.p.leading_coeff();
            if (lc != 1) {
                e.p = e.p.scaled(Rat(1) / lc);
                for (auto& r : e.rep)
                    r = r.scaled(Rat(1) / lc);
            }
        }

        // Deterministic output order: descending leading monomial.
        std::sort(survivors_.begin(), survivors_.end(), [&](int a, int b) {
            return ord_.compare(elems_[static_cast<size_t>(a)].p.leading_mono(),
                                elems_[static_cast<size_t>(b)].p.leading_mono()) > 0;
        });
    }

    RingPtr ring_;
    MonomialOrder ord_;
    SBOptions opts_;
    bool local_;
    bool loading_ = false;
    size_t ngens_ = 0;
    std::vector<Elem> elems_;
    std::vector<int> survivors_;

    struct PairOrder {
        bool operator()(const std::tuple<int, int, int>& a, const std::tuple<int, int, int>& b) const {
            return a > b; // min-heap: smallest (lcm degree, i, j) first
        }
    };
    std::priority_queue<std::tuple<int, int, int>, std::vector<std::tuple<int, int, int>>, PairOrder> queue_;
    std::set<std::pair<int, int>> pending_;
};

StandardBasis build_result(const IdealBasis& I, const MonomialOrder& order, Engine& eng) {
    StandardBasis B{I, order, {}, {}, {}};
    for (int idx : eng.survivors()) {
        const auto& e = eng.elems()[static_cast<size_t>(idx)];
        B.basis.push_back(e.p);
        B.leading_ideal.push_back(e.p.leading_mono());
        if (!e.rep.empty())
            B.pedigree.push_back(e.rep);
    }
    return B;
}

Engine make_engine(const IdealBasis& I, const MonomialOrder& order, const SBOptions& opts) {
    RingPtr work = I.ring->with_order(order);
    return Engine(work, opts);
}

/// Bounded staircase walk: standard monomials of total degree <= bound.
/// Returns (count, max degree seen); count capped for safety.
struct StairScan {
    long count = 0;
    int maxdeg = -1;
    bool overflow = false;
};

void stair_walk(const std::vector<Mono>& lead, Mono& m, int from_var, int bound, StairScan& out) {
    if (out.overflow)
        return;
    for (const Mono& l : lead)
        if (l.divides(m))
            return;
    ++out.count;
    out.maxdeg = std::max(out.maxdeg, m.deg());
    if (out.count > kStaircaseCap) {
        out.overflow = true;
        return;
    }
    if (m.deg() >= bound)
        return;
    for (int v = from_var; v < m.nvars(); ++v) {
        m.set(v, m[v] + 1);
        stair_walk(lead, m, v, bound, out);
        m.set(v, m[v] - 1);
    }
}

} // namespace

StandardBasis standard_basis(const IdealBasis& I, const MonomialOrder& order, const SBOptions& opts) {
    Engine eng = make_engine(I, order, opts);
    eng.run(I.gens);
    return build_result(I, order, eng);
}

Poly weak_normal_form(const Poly& p, const StandardBasis& B) {
    Engine eng = make_engine(B.ideal, B.order, {});
    eng.load_trusted(B.basis);
    return eng.weak_nf(p, nullptr).with_ring(p.ring());
}

Poly normal_form(const Poly& p, const StandardBasis& B) {
    Engine eng = make_engine(B.ideal, B.order, {});
    eng.load_trusted(B.basis);
    return eng.full_nf(p).with_ring(p.ring());
}

Staircase staircase(const StandardBasis& B) {
    Staircase S;
    const int n = B.ideal.ring->nvars();
    if (B.basis.empty())
        return S; // zero ideal: infinite (any ring here has variables)
    // Finite iff each variable has a pure power among the leading monomials.
    long bound = 0;
    for (int v = 0; v < n; ++v) {
        int best = -1;
        for (const Mono& l : B.leading_ideal) {
            if (l[v] == l.deg()) // support contained in {v}
                best = (best < 0) ? l[v] : std::min(best, l[v]);
        }
        if (best < 0)
            return S;
        bound += best;
    }
    if (bound > kTruncCeiling * n)
        return S; // safety ceiling: treat as infinite
    // Enumerate: DFS with non-decreasing variable index gives each monomial
    // exactly once; deterministic order.
    std::vector<Mono> monos;
    Mono m(n);
    const std::vector<Mono>& lead = B.leading_ideal;
    auto walk = [&](auto&& self, Mono& cur, int from) -> bool {
        for (const Mono& l : lead)
            if (l.divides(cur))
                return true;
        monos.push_back(cur);
        if (static_cast<long>(monos.size()) > kStaircaseCap)
            return false;
        for (int v = from; v < n; ++v) {
            cur.set(v, cur[v] + 1);
            bool ok = self(self, cur, v);
            cur.set(v, cur[v] - 1);
            if (!ok)
                return false;
        }
        return true;
    };
    if (!walk(walk, m, 0))
        return S; // overflow: report infinite rather than a wrong count
    S.finite = true;
    S.monomials = std::move(monos);
    return S;
}

ColengthProbe colength_at(const IdealBasis& I, int truncate_degree) {
    SBOptions opts;
    opts.truncate_degree = truncate_degree;
    Engine eng = make_engine(I, MonomialOrder::negdegrevlex(), opts);
    eng.run(I.gens);
    std::vector<Mono> lead;
    for (int idx : eng.survivors())
        lead.push_back(eng.elems()[static_cast<size_t>(idx)].p.leading_mono());
    StairScan scan;
    Mono m(I.ring->nvars());
    stair_walk(lead, m, 0, truncate_degree, scan);
    ColengthProbe probe;
    // Nakayama certificate: no standard monomial of degree D means the
    // truncation added nothing below degree D+1.
    probe.certified = !scan.overflow && scan.maxdeg <= truncate_degree - 1;
    probe.count = scan.count;
    return probe;
}

std::optional<long> colength(const IdealBasis& I, const MonomialOrder& local_order) {
    if (!local_order.is_local())
        throw InputError("colength requires a local monomial order");
    if (I.gens.empty())
        return std::nullopt;
    if (local_order.kind() != MonomialOrder::Kind::NegDegRevLex) {
        StandardBasis B = standard_basis(I, local_order);
        Staircase S = staircase(B);
        if (!S.finite)
            return std::nullopt;
        return static_cast<long>(S.monomials.size());
    }
    // Adaptive truncation: work modulo m^(D+1) and certify via Nakayama.
    // Failed low-degree runs are far cheaper than the final one, so the
    // ladder climbs in small steps.
    for (int D = kTruncStart; D <= kTruncCeiling; D += std::max(2, D / 4)) {
        ColengthProbe probe = colength_at(I, D);
        if (probe.certified)
            return probe.count;
    }
    return std::nullopt;
}

IdealBasis eliminate(const IdealBasis& I, const std::vector<std::string>& drop_vars) {
    const RingPtr& ring = I.ring;
    std::vector<bool> dropped(static_cast<size_t>(ring->nvars()), false);
    for (const auto& name : drop_vars) {
        auto idx = ring->index_of(name);
        if (!idx)
            throw InputError("eliminate: unknown variable '" + name + "'");
        if (dropped[static_cast<size_t>(*idx)])
            throw InputError("eliminate: duplicate variable '" + name + "'");
        dropped[static_cast<size_t>(*idx)] = true;
    }
    std::vector<std::string> keep_names;
    for (int v = 0; v < ring->nvars(); ++v)
        if (!dropped[static_cast<size_t>(v)])
            keep_names.push_back(ring->var_name(v));
    if (keep_names.empty())
        throw InputError("eliminate: at least one variable must remain");
    RingPtr keep_ring = PolyRing::create(keep_names, MonomialOrder::degrevlex());

    std::vector<Poly> gens;
    for (const auto& g : I.gens)
        if (!g.is_zero())
            gens.push_back(g);

    // Substitute away dropped variables that occur linearly with constant
    // coefficient in some generator; the intersection with the kept subring
    // is unchanged and the completion gets much cheaper.
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t gi = 0; gi < gens.size() && !progress; ++gi) {
            for (int v = 0; v < ring->nvars() && !progress; ++v) {
                if (!dropped[static_cast<size_t>(v)])
                    continue;
                Poly d = gens[gi].derivative(v);
                if (d.is_zero() || !d.is_constant())
                    continue;
                Rat c = d.coeff_at_origin();
                Poly image = (gens[gi].axpy(-c, Mono::one(ring->nvars()),
                                            Poly::variable(ring, v)))
                                 .scaled(Rat(-1) / c);
                std::vector<std::optional<Poly>> subs(static_cast<size_t>(ring->nvars()));
                subs[static_cast<size_t>(v)] = image;
                std::vector<Poly> next;
                next.reserve(gens.size() - 1);
                for (size_t gj = 0; gj < gens.size(); ++gj) {
                    if (gj == gi)
                        continue;
                    Poly h = gens[gj].compose(ring, subs);
                    if (!h.is_zero())
                        next.push_back(std::move(h));
                }
                gens = std::move(next);
                progress = true;
            }
        }
    }

    // Which dropped variables still occur?
    std::vector<int> live_drop;
    for (int v = 0; v < ring->nvars(); ++v) {
        if (!dropped[static_cast<size_t>(v)])
            continue;
        for (const auto& g : gens)
            for (const auto& t : g.terms())
                if (t.m[v] > 0) {
                    live_drop.push_back(v);
                    goto next_var;
                }
    next_var:;
    }

    std::vector<Poly> keep_gens;
    if (live_drop.empty()) {
        std::vector<int> index_map(static_cast<size_t>(ring->nvars()), -1);
        for (int v = 0, j = 0; v < ring->nvars(); ++v)
            if (!dropped[static_cast<size_t>(v)])
                index_map[static_cast<size_t>(v)] = j++;
        for (const auto& g : gens)
            keep_gens.push_back(g.map_to(keep_ring, index_map));
    } else {
        // Block elimination ring: live dropped variables first.
        std::vector<std::string> elim_names;
        std::vector<int> index_map(static_cast<size_t>(ring->nvars()), -1);
        for (int v : live_drop) {
            index_map[static_cast<size_t>(v)] = static_cast<int>(elim_names.size());
            elim_names.push_back(ring->var_name(v));
        }
        int split = static_cast<int>(elim_names.size());
        for (int v = 0; v < ring->nvars(); ++v)
            if (!dropped[static_cast<size_t>(v)]) {
                index_map[static_cast<size_t>(v)] = static_cast<int>(elim_names.size());
                elim_names.push_back(ring->var_name(v));
            }
        // Degree-of-the-dropped-block first, degrevlex tie-break: eliminates
        // the same block as the two-sided product order but completes far
        // faster in practice.
        MonomialOrder block = MonomialOrder::elimination(split);
        RingPtr elim_ring = PolyRing::create(elim_names, block);
        std::vector<Poly> elim_gens;
        for (const auto& g : gens) {
            // Dropped-but-dead variables may still sit in the map; they have
            // exponent zero everywhere, route them to slot 0 harmlessly.
            std::vector<int> safe_map = index_map;
            for (auto& x : safe_map)
                if (x < 0)
                    x = 0;
            elim_gens.push_back(g.map_to(elim_ring, safe_map));
        }
        StandardBasis B = standard_basis(IdealBasis::make(elim_ring, std::move(elim_gens)), block);
        std::vector<int> project(static_cast<size_t>(elim_ring->nvars()), -1);
        for (int v = split; v < elim_ring->nvars(); ++v)
            project[static_cast<size_t>(v)] = *keep_ring->index_of(elim_ring->var_name(v));
        for (const auto& b : B.basis) {
            bool free_of_drop = true;
            for (const auto& t : b.terms())
                for (int v = 0; v < split && free_of_drop; ++v)
                    if (t.m[v] > 0)
                        free_of_drop = false;
            if (free_of_drop)
                keep_gens.push_back(b.map_to(keep_ring, project));
        }
    }

    if (keep_gens.empty())
        return IdealBasis::make(keep_ring, {});
    // Canonicalize: reduced basis in the kept ring.
    StandardBasis R = standard_basis(IdealBasis::make(keep_ring, std::move(keep_gens)),
                                     MonomialOrder::degrevlex());
    return IdealBasis::make(keep_ring, R.basis);
}

LiftedNF lifted_division(const Poly& p, const IdealBasis& gens, const MonomialOrder& local_order) {
    if (!local_order.is_local())
        throw InputError("lifted division requires a local order");
    SBOptions opts;
    opts.track_pedigree = true;
    Engine eng = make_engine(gens, local_order, opts);
    eng.run(gens.gens);
    Engine::Lift lift;
    Poly r = eng.weak_nf(p, &lift);

    // Verify unit * p == sum(cof * gen) + remainder exactly.
    RingPtr work = eng.ring();
    Poly check = lift.unit * p.with_ring(work);
    for (size_t k = 0; k < gens.gens.size(); ++k)
        check = check - lift.cof[k] * gens.gens[k].with_ring(work);
    check = check - r;
    if (!check.is_zero())
        throw InternalError("lifted division identity failed");
    if (!lift.unit.is_unit_at_origin())
        throw InternalError("lifted division produced a non-unit multiplier");

    LiftedNF out;
    out.remainder = r.with_ring(p.ring());
    out.unit = lift.unit.with_ring(p.ring());
    for (auto& c : lift.cof)
        out.cofactors.push_back(c.with_ring(p.ring()));
    return out;
}

LiftedNF lifted_division_mod(const Poly& p, const IdealBasis& gens, int truncate_degree) {
    SBOptions opts;
    opts.track_pedigree = true;
    opts.truncate_degree = truncate_degree;
    Engine eng = make_engine(gens, MonomialOrder::negdegrevlex(), opts);
    eng.run(gens.gens);
    Engine::Lift lift;
    Poly r = eng.weak_nf(p, &lift);

    // Verify unit * p == sum(cof * gen) + remainder modulo m^(D+1).
    RingPtr work = eng.ring();
    Poly check = lift.unit * p.with_ring(work);
    for (size_t k = 0; k < gens.gens.size(); ++k)
        check = check - lift.cof[k] * gens.gens[k].with_ring(work);
    check = (check - r).truncated_above(truncate_degree);
    if (!check.is_zero())
        throw InternalError("truncated division identity failed");
    if (!lift.unit.is_unit_at_origin())
        throw InternalError("truncated division produced a non-unit multiplier");

    LiftedNF out;
    out.remainder = r.with_ring(p.ring());
    out.unit = lift.unit.with_ring(p.ring());
    for (auto& c : lift.cof)
        out.cofactors.push_back(c.with_ring(p.ring()));
    return out;
}

} // namespace germlab

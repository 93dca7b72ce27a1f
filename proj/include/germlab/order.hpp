#pragma once

#include <memory>
#include <string>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/monomial.hpp"

namespace germlab {

/// Total multiplicative monomial order. Global orders satisfy 1 < x_i for
/// all variables (polynomial ring computations), local orders satisfy
/// 1 > x_i (germ computations in the local ring at the origin). Block orders
/// compare the first variable group first; with two global components they
/// are elimination orders for the first group.
class MonomialOrder {
public:
    enum class Kind {
        DegRevLex,     // global
        Lex,           // global
        WDegRevLex,    // global, weighted degree first
        NegDegRevLex,  // local
        NegWDegRevLex, // local, weighted
        Block,
        Elim,          // global: degree of the first block, then degrevlex on all
    };

    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder negdegrevlex() { return MonomialOrder(Kind::NegDegRevLex); }

    static MonomialOrder weighted_global(std::vector<long> w) {
        MonomialOrder o(Kind::WDegRevLex);
        o.check_weights(w);
        o.weights_ = std::move(w);
        return o;
    }

    static MonomialOrder weighted_local(std::vector<long> w) {
        MonomialOrder o(Kind::NegWDegRevLex);
        o.check_weights(w);
        o.weights_ = std::move(w);
        return o;
    }

    /// Block order: `first` on the variables with index < split, `second` on
    /// the rest. Sub-order weight vectors, when present, refer to their own
    /// block only.
    static MonomialOrder block(MonomialOrder first, int split, MonomialOrder second) {
        if (split <= 0)
            throw InputError("block order needs a positive split index");
        MonomialOrder o(Kind::Block);
        o.split_ = split;
        o.first_ = std::make_shared<MonomialOrder>(std::move(first));
        o.second_ = std::make_shared<MonomialOrder>(std::move(second));
        return o;
    }

    /// Elimination order for the first `split` variables: compares their
    /// total degree first, ties broken by degrevlex over all variables.
    /// Behaves far better than the two-sided block order in completions
    /// while eliminating the same block.
    static MonomialOrder elimination(int split) {
        if (split <= 0)
            throw InputError("elimination order needs a positive split index");
        MonomialOrder o(Kind::Elim);
        o.split_ = split;
        return o;
    }

    Kind kind() const { return kind_; }
    int block_split() const { return split_; }

    bool is_global() const {
        switch (kind_) {
        case Kind::DegRevLex:
        case Kind::Lex:
        case Kind::WDegRevLex:
        case Kind::Elim:
            return true;
        case Kind::Block:
            return first_->is_global() && second_->is_global();
        default:
            return false;
        }
    }

    bool is_local() const {
        switch (kind_) {
        case Kind::NegDegRevLex:
        case Kind::NegWDegRevLex:
            return true;
        case Kind::Block:
            return first_->is_local() && second_->is_local();
        default:
            return false;
        }
    }

    /// Three-way comparison restricted to variables [lo, hi): +1 if a > b.
    int compare_range(const Mono& a, const Mono& b, int lo, int hi) const {
        switch (kind_) {
        case Kind::DegRevLex: {
            long da = range_deg(a, lo, hi), db = range_deg(b, lo, hi);
            if (da != db)
                return da > db ? 1 : -1;
            return revlex_tail(a, b, lo, hi);
        }
        case Kind::Lex: {
            for (int i = lo; i < hi; ++i)
                if (a[i] != b[i])
                    return a[i] > b[i] ? 1 : -1;
            return 0;
        }
        case Kind::WDegRevLex: {
            long da = wdeg(a, lo, hi), db = wdeg(b, lo, hi);
            if (da != db)
                return da > db ? 1 : -1;
            return revlex_tail(a, b, lo, hi);
        }
        case Kind::NegDegRevLex: {
            long da = range_deg(a, lo, hi), db = range_deg(b, lo, hi);
            if (da != db)
                return da < db ? 1 : -1;
            return revlex_tail(a, b, lo, hi);
        }
        case Kind::NegWDegRevLex: {
            long da = wdeg(a, lo, hi), db = wdeg(b, lo, hi);
            if (da != db)
                return da < db ? 1 : -1;
            return revlex_tail(a, b, lo, hi);
        }
        case Kind::Block: {
            int mid = lo + split_;
            if (mid > hi)
                mid = hi;
            int c = first_->compare_range(a, b, lo, mid);
            if (c != 0)
                return c;
            return second_->compare_range(a, b, mid, hi);
        }
        case Kind::Elim: {
            int mid = lo + split_;
            if (mid > hi)
                mid = hi;
            long da = range_deg(a, lo, mid), db = range_deg(b, lo, mid);
            if (da != db)
                return da > db ? 1 : -1;
            long ta = range_deg(a, lo, hi), tb = range_deg(b, lo, hi);
            if (ta != tb)
                return ta > tb ? 1 : -1;
            return revlex_tail(a, b, lo, hi);
        }
        }
        return 0;
    }

    int compare(const Mono& a, const Mono& b) const { return compare_range(a, b, 0, a.nvars()); }

    bool less(const Mono& a, const Mono& b) const { return compare(a, b) < 0; }
    bool greater(const Mono& a, const Mono& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const {
        if (kind_ != o.kind_ || weights_ != o.weights_ || split_ != o.split_)
            return false;
        if (kind_ == Kind::Block)
            return *first_ == *o.first_ && *second_ == *o.second_;
        return true;
    }

    std::string describe() const {
        switch (kind_) {
        case Kind::DegRevLex: return "degrevlex";
        case Kind::Lex: return "lex";
        case Kind::WDegRevLex: return "wdegrevlex";
        case Kind::NegDegRevLex: return "negdegrevlex";
        case Kind::NegWDegRevLex: return "negwdegrevlex";
        case Kind::Block:
            return "block(" + first_->describe() + "|" + std::to_string(split_) + "|" + second_->describe() + ")";
        case Kind::Elim:
            return "elim(" + std::to_string(split_) + ")";
        }
        return "?";
    }

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    void check_weights(const std::vector<long>& w) const {
        if (w.empty())
            throw InputError("weighted order needs weights");
        for (long wi : w)
            if (wi <= 0)
                throw InputError("weights must be positive");
    }

    static long range_deg(const Mono& m, int lo, int hi) {
        if (lo == 0 && hi == m.nvars())
            return m.deg();
        long d = 0;
        for (int i = lo; i < hi; ++i)
            d += m[i];
        return d;
    }

    long wdeg(const Mono& m, int lo, int hi) const {
        long d = 0;
        for (int i = lo; i < hi; ++i) {
            size_t wi = static_cast<size_t>(i - lo);
            d += (wi < weights_.size() ? weights_[wi] : 1) * m[i];
        }
        return d;
    }

    // Shared revlex tie-break: last variable where they differ, smaller
    // exponent wins.
    static int revlex_tail(const Mono& a, const Mono& b, int lo, int hi) {
        for (int i = hi - 1; i >= lo; --i)
            if (a[i] != b[i])
                return a[i] < b[i] ? 1 : -1;
        return 0;
    }

    Kind kind_;
    std::vector<long> weights_;
    int split_ = 0;
    std::shared_ptr<MonomialOrder> first_, second_;
};

} // namespace germlab

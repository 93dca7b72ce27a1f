#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "germlab/errors.hpp"
#include "germlab/monomial.hpp"
#include "germlab/order.hpp"

namespace germlab {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

inline bool valid_identifier(const std::string& s) {
    if (s.empty())
        return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return true;
}

/// Immutable polynomial ring: an ordered list of variable names plus the
/// active monomial order. Polynomials hold a shared pointer to their ring.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
public:
    static RingPtr create(std::vector<std::string> vars, MonomialOrder order) {
        if (vars.empty())
            throw InputError("ring needs at least one variable");
        if (static_cast<int>(vars.size()) > kMaxVars)
            throw InputError("at most " + std::to_string(kMaxVars) + " ring variables are supported");
        for (const auto& v : vars)
            if (!valid_identifier(v))
                throw InputError("invalid variable name: '" + v + "'");
        auto sorted = vars;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("duplicate variable names");
        return RingPtr(new PolyRing(std::move(vars), std::move(order)));
    }

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::string& var_name(int i) const { return vars_[static_cast<size_t>(i)]; }
    const MonomialOrder& order() const { return order_; }

    std::optional<int> index_of(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name)
                return static_cast<int>(i);
        return std::nullopt;
    }

    RingPtr with_order(MonomialOrder order) const { return create(vars_, std::move(order)); }

    bool same_as(const PolyRing& o) const { return this == &o || (vars_ == o.vars_ && order_ == o.order_); }

private:
    PolyRing(std::vector<std::string> vars, MonomialOrder order)
        : vars_(std::move(vars)), order_(std::move(order)) {}

    std::vector<std::string> vars_;
    MonomialOrder order_;
};

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get())
        return;
    if (!a || !b || !a->same_as(*b))
        throw InputError("operands live in different rings");
}

} // namespace germlab

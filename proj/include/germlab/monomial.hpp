#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "germlab/errors.hpp"

namespace germlab {

/// Hard cap on ring variables. 7 covers every germ problem this library
/// targets (up to 4 source variables, a family parameter and two target
/// variables); 8 leaves one spare while keeping monomials inline and cheap.
inline constexpr int kMaxVars = 8;

/// Exponent vector of a monomial, with cached total degree. Fixed inline
/// storage: no allocation in the arithmetic hot path.
class Mono {
public:
    Mono() : n_(0), deg_(0) { e_.fill(0); }

    explicit Mono(int nvars) : n_(static_cast<std::uint8_t>(nvars)), deg_(0) {
        if (nvars < 0 || nvars > kMaxVars)
            throw InputError("monomial rings support at most " + std::to_string(kMaxVars) + " variables");
        e_.fill(0);
    }

    static Mono one(int nvars) { return Mono(nvars); }

    static Mono from_exponents(std::span<const int> exps) {
        Mono m(static_cast<int>(exps.size()));
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 0)
                throw InputError("negative exponent");
            m.set(static_cast<int>(i), exps[i]);
        }
        return m;
    }

    int nvars() const { return n_; }
    int deg() const { return static_cast<int>(deg_); }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }

    void set(int i, int v) {
        if (v < 0 || v > 0xffff)
            throw InputError("exponent out of range");
        deg_ = deg_ - e_[static_cast<size_t>(i)] + static_cast<std::uint32_t>(v);
        e_[static_cast<size_t>(i)] = static_cast<std::uint16_t>(v);
    }

    bool is_one() const { return deg_ == 0; }

    Mono mul(const Mono& o) const {
        Mono r(n_);
        for (int i = 0; i < n_; ++i) {
            std::uint32_t s = static_cast<std::uint32_t>(e_[i]) + o.e_[i];
            if (s > 0xffff)
                throw Error("exponent overflow in monomial product");
            r.e_[i] = static_cast<std::uint16_t>(s);
        }
        r.deg_ = deg_ + o.deg_;
        return r;
    }

    bool divides(const Mono& o) const {
        if (deg_ > o.deg_)
            return false;
        for (int i = 0; i < n_; ++i)
            if (e_[i] > o.e_[i])
                return false;
        return true;
    }

    /// o / this, assuming divisibility.
    Mono quotient_of(const Mono& o) const {
        Mono r(n_);
        for (int i = 0; i < n_; ++i)
            r.e_[i] = static_cast<std::uint16_t>(o.e_[i] - e_[i]);
        r.deg_ = o.deg_ - deg_;
        return r;
    }

    static Mono lcm(const Mono& a, const Mono& b) {
        Mono r(a.n_);
        std::uint32_t d = 0;
        for (int i = 0; i < a.n_; ++i) {
            r.e_[i] = std::max(a.e_[i], b.e_[i]);
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    bool coprime_with(const Mono& o) const {
        for (int i = 0; i < n_; ++i)
            if (e_[i] > 0 && o.e_[i] > 0)
                return false;
        return true;
    }

    long weighted_deg(std::span<const long> w) const {
        long d = 0;
        for (int i = 0; i < n_; ++i)
            d += w[static_cast<size_t>(i)] * e_[i];
        return d;
    }

    bool operator==(const Mono& o) const { return n_ == o.n_ && deg_ == o.deg_ && e_ == o.e_; }
    bool operator!=(const Mono& o) const { return !(*this == o); }

    size_t hash() const {
        size_t h = 0x9e3779b97f4a7c15ULL ^ n_;
        for (int i = 0; i < n_; ++i)
            h = h * 0x100000001b3ULL + e_[i];
        return h;
    }

private:
    std::array<std::uint16_t, kMaxVars> e_;
    std::uint8_t n_;
    std::uint32_t deg_;
};

struct MonoHash {
    size_t operator()(const Mono& m) const { return m.hash(); }
};

} // namespace germlab

#pragma once

#include <gmpxx.h>

#include <string>

#include "germlab/errors.hpp"

namespace germlab {

// Exact arbitrary-precision arithmetic. All coefficients in the library are
// rationals in canonical form (gcd(|num|, den) = 1, den >= 1), which is what
// mpq_class guarantees after canonicalize().
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0)
        throw InputError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Renders as "n" or "n/d".
inline std::string rat_to_string(const Rat& q) {
    if (is_integer(q))
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "n", "-n", or "n/d" with optional sign on the numerator.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty())
        throw InputError("empty rational literal");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (i == 0 && (c == '-' || c == '+'));
        if (!ok)
            throw InputError("bad rational literal: " + s);
    }
    auto slash = s.find('/');
    if (slash != std::string::npos && (slash == 0 || slash + 1 == s.size()))
        throw InputError("bad rational literal: " + s);
    try {
        Rat q(s);
        if (q.get_den() == 0)
            throw InputError("rational with zero denominator: " + s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw InputError("bad rational literal: " + s);
    }
}

} // namespace germlab

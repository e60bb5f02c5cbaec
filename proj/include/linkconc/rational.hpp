#pragma once

#include <gmpxx.h>

#include <string>

#include "linkconc/error.hpp"

namespace linkconc {

// Exact rational scalars, backed by GMP. mpq_class keeps the denominator
// positive and the fraction reduced after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "3", "-7", "3/4", "-3/4".
inline Rational rational_from_string(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error("bad rational literal: '" + s + "'");
    }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace linkconc

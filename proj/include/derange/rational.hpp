#pragma once

#include <gmpxx.h>

#include <string>

namespace derange {

// gmpxx has no long long overloads; this platform is LP64
inline mpq_class mpq_from(long long num, long long den = 1) {
    mpq_class r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

// Nearest rational with denominator 1 or 2; throws std::domain_error if x is
// further than tol from every such value.
mpq_class snap_half_integer(double x, double tol = 1e-6);

std::string rational_string(const mpq_class& x);

}  // namespace derange

#pragma once
// Exact arithmetic carriers. All counts are arbitrary-precision integers and
// all coefficients exact rationals; no floating point in the core.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hall/base.hpp"

namespace hall {

using Int = mpz_class;
using Rat = mpq_class;

// q^e as an exact rational, e may be negative.
inline Rat q_pow(std::uint32_t q, long e) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), q, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rat(p);
    Rat r(1, p);
    r.canonicalize();
    return r;
}

inline Int int_pow(std::uint32_t q, unsigned long e) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), q, e);
    return p;
}

// Exact quotient a/b; throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b, const char* what) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw ConsistencyError(std::string("non-exact integer division in ") + what);
    return a / b;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Canonical text form: "num" when the denominator is 1, else "num/den".
inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

} // namespace hall

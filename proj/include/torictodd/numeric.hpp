#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace torictodd {

// All arithmetic in this library is exact: arbitrary-precision integers and
// canonical rationals.  No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize; always build rationals here.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline const Int& numerator(const Rat& q) { return q.get_num(); }
inline const Int& denominator(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Largest integer <= q.
inline Int floor_int(const Rat& q) {
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

// Smallest integer >= q.
inline Int ceil_int(const Rat& q) {
    Int out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

// Fractional part in [0, 1).
inline Rat mod_one(const Rat& q) { return q - Rat(floor_int(q)); }

inline Int int_gcd(const Int& a, const Int& b) {
    Int out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline Int factorial(unsigned n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Int binomial(unsigned n, unsigned k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline std::string to_string(const Int& n) { return n.get_str(); }

// "p/q" with canonical sign, or just "p" for integers.
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace torictodd

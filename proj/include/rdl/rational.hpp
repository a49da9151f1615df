#pragma once

#include <gmpxx.h>

#include <string>

namespace rdl {

// All exact quantities in the library are GMP integers/rationals. Nat is used
// where values are nonnegative by contract.
using Nat = mpz_class;
using Rat = mpq_class;

// mpq_class(n, d) does not canonicalize; every fraction built from parts must
// go through here.
inline Rat make_rat(const Nat& num, const Nat& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Nat floor_rat(const Rat& q) {
    Nat r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Nat ceil_rat(const Rat& q) {
    Nat r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Nat pow_nat(const Nat& base, unsigned long exp) {
    Nat r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

// 2^e for any sign of e.
inline Rat pow2_rat(long e) {
    Rat q;
    if (e >= 0) {
        mpq_mul_2exp(q.get_mpq_t(), Rat(1).get_mpq_t(), static_cast<unsigned long>(e));
    } else {
        mpq_div_2exp(q.get_mpq_t(), Rat(1).get_mpq_t(), static_cast<unsigned long>(-e));
    }
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline std::string nat_str(const Nat& n) { return n.get_str(); }

}  // namespace rdl

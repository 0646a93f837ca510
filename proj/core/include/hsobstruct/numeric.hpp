#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hsob {

// Arbitrary-precision integers and rationals. All arithmetic in this
// library is exact; there is no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int floordiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// gcd of a whole vector; 0 for the empty/zero vector.
inline Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v)
        g = gcd(g, x);
    return g;
}

inline bool is_primitive(const IntVec& v) {
    return content(v) == 1;
}

// 2-adic valuation of a positive integer.
inline unsigned long two_adic_valuation(const Int& n) {
    return mpz_scan1(n.get_mpz_t(), 0);
}

std::string to_string(const Int& x);
std::string to_string(const Rat& x);

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace hsob

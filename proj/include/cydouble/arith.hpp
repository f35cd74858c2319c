#pragma once

#include <gmpxx.h>

#include <string>

namespace cydouble {

// Exact arithmetic throughout; no floating point anywhere in the pipeline.
using Int = mpz_class;
using Rat = mpq_class;

// Reduced fraction with positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline std::string str(const Int& v) { return v.get_str(); }

// "5/2" for proper fractions, "22" when the denominator is 1.
inline std::string str(const Rat& v) {
    return is_integer(v) ? v.get_num().get_str() : v.get_str();
}

}  // namespace cydouble

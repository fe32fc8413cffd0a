#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rsd {

using Int = mpz_class;
using Rat = mpq_class;

/// Exact rational from numerator/denominator, reduced, denominator > 0.
inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Binomial coefficient with the zero convention: C(a,k) = 0 whenever
/// k < 0, a < 0 or k > a.
inline Int binom(long a, long k) {
    if (k < 0 || a < 0 || k > a) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
                 static_cast<unsigned long>(k));
    return r;
}

/// base^exp with 0^0 = 1.
inline Int ipow(long base, long exp) {
    if (exp < 0) throw std::domain_error("ipow: negative exponent");
    Int b(base), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

/// Quotient of exact division; throws if the division leaves a remainder.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("exact_div: zero divisor");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error("exact_div: not divisible");
    return q;
}

} // namespace rsd

#include "rsd/bounds.hpp"

#include <stdexcept>

namespace rsd {

Int fisher_bound(const SchemeParams& params, int r, int s) {
    const IndexPair rs{r, s};
    params.require_in_L(rs, "fisher_bound");
    if (r == 0 && s == 0)
        throw std::invalid_argument("fisher_bound: (0,0) excluded");
    const int e = r / 2, f = s / 2;
    Int sum = 0;
    for (int l = 0; l <= f; ++l) sum += ipow(params.q - 2, l) * binom(e, l);
    return binom(params.n, e) * sum;
}

Rat fisher_bound_odd(const SchemeParams& params, int r, int s) {
    const IndexPair rs{r, s};
    params.require_in_L(rs, "fisher_bound_odd");
    if (r % 2 == 0) throw std::invalid_argument("fisher_bound_odd: r must be odd");
    if (r > params.m)
        throw std::invalid_argument("fisher_bound_odd: requires r <= min(w,n-w)");
    const int e = (r - 1) / 2, f = s / 2;
    Int sum = 0;
    for (int l = 0; l <= f; ++l) sum += ipow(params.q - 2, l) * binom(e, l);
    Rat base = rat(params.n, params.w) * Rat(binom(params.n - 1, e) * sum);
    if (s % 2 == 1) base *= params.q - 1;
    return base;
}

Rat natural_bound(const SchemeParams& params, int r, int s) {
    if (s < 0 || s > r || r > params.w)
        throw std::invalid_argument("natural_bound: need 0 <= s <= r <= w");
    return Rat(ipow(params.q - 1, s)) * rat(binom(params.n, r), binom(params.w, r));
}

} // namespace rsd

#pragma once

#include "rsd/params.hpp"
#include "rsd/rational.hpp"

namespace rsd {

/// Fisher-type lower bound on |Y| for an (r,s)-design:
///   C(n, floor(r/2)) * sum_{l=0}^{floor(s/2)} (q-2)^l C(floor(r/2), l).
/// Requires (r,s) in L, (r,s) != (0,0).
Int fisher_bound(const SchemeParams& params, int r, int s);

/// Sharper bound for odd r = 2e+1 (requires r <= m):
///   s = 2f:   (n/w) C(n-1,e) sum_{l=0}^{f} (q-2)^l C(e,l)
///   s = 2f+1: (q-1) times the above.
/// The value can be non-integral; callers compare cardinalities as rationals.
Rat fisher_bound_odd(const SchemeParams& params, int r, int s);

/// Natural lower bound (q-1)^s C(n,r) / C(w,r), attained exactly by
/// index-1 designs.  Requires s <= r <= w.
Rat natural_bound(const SchemeParams& params, int r, int s);

} // namespace rsd

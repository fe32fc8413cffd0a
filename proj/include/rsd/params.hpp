#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rsd/rational.hpp"

namespace rsd {

/// Double index into the idempotent set L or the relation set K.
struct IndexPair {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

std::string to_string(const IndexPair& p);

/// Global context of the scheme J_q(w,n): the triple (n,w,q), the derived
/// m = min(w, n-w), and the two index sets
///   L = {(i,j) : 0 <= j <= i <= w, i-j <= m}   (idempotents)
///   K = {(k,h) : 0 <= h <= k <= w, h <= m}     (relations)
/// both listed in lexicographic order. |L| = |K| always.
struct SchemeParams {
    int n = 0, w = 0, q = 0, m = 0;
    std::vector<IndexPair> L, K;

    static SchemeParams make(int n, int w, int q);

    Int vertex_count() const; // C(n,w) (q-1)^w

    bool in_L(IndexPair p) const;
    bool in_K(IndexPair p) const;
    std::size_t l_index(IndexPair p) const; // throws if p not in L
    std::size_t k_index(IndexPair p) const;

    void require_in_L(IndexPair p, const char* caller) const;
    void require_in_K(IndexPair p, const char* caller) const;
};

} // namespace rsd

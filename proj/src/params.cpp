#include "rsd/params.hpp"

#include <algorithm>
#include <stdexcept>

#include "rsd/errors.hpp"

namespace rsd {

std::string to_string(const IndexPair& p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

SchemeParams SchemeParams::make(int n, int w, int q) {
    if (n < 1 || w < 1 || w > n || q < 2)
        throw std::invalid_argument("SchemeParams: need 1 <= w <= n and q >= 2");
    if (q > 256)
        throw std::invalid_argument("SchemeParams: q > 256 exceeds the symbol width");
    SchemeParams p;
    p.n = n;
    p.w = w;
    p.q = q;
    p.m = std::min(w, n - w);
    for (int i = 0; i <= w; ++i)
        for (int j = 0; j <= i; ++j)
            if (i - j <= p.m) p.L.push_back({i, j});
    for (int k = 0; k <= w; ++k)
        for (int h = 0; h <= k && h <= p.m; ++h) p.K.push_back({k, h});
    if (p.L.size() != p.K.size())
        throw consistency_error("SchemeParams: |L| != |K|");
    return p;
}

Int SchemeParams::vertex_count() const { return binom(n, w) * ipow(q - 1, w); }

bool SchemeParams::in_L(IndexPair p) const {
    return 0 <= p.j && p.j <= p.i && p.i <= w && p.i - p.j <= m;
}

bool SchemeParams::in_K(IndexPair p) const {
    return 0 <= p.j && p.j <= p.i && p.i <= w && p.j <= m;
}

std::size_t SchemeParams::l_index(IndexPair p) const {
    require_in_L(p, "l_index");
    auto it = std::lower_bound(L.begin(), L.end(), p);
    return static_cast<std::size_t>(it - L.begin());
}

std::size_t SchemeParams::k_index(IndexPair p) const {
    require_in_K(p, "k_index");
    auto it = std::lower_bound(K.begin(), K.end(), p);
    return static_cast<std::size_t>(it - K.begin());
}

void SchemeParams::require_in_L(IndexPair p, const char* caller) const {
    if (!in_L(p))
        throw std::invalid_argument(std::string(caller) + ": index " + to_string(p) +
                                    " not in L");
}

void SchemeParams::require_in_K(IndexPair p, const char* caller) const {
    if (!in_K(p))
        throw std::invalid_argument(std::string(caller) + ": index " + to_string(p) +
                                    " not in K");
}

} // namespace rsd

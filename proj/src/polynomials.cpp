#include "rsd/polynomials.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "rsd/errors.hpp"

namespace rsd {

Int krawtchouk_sum(int i, int n, int q, int x) {
    if (i < 0) throw std::invalid_argument("krawtchouk: negative degree");
    Int acc = 0;
    for (int l = 0; l <= i; ++l) {
        Int term = ipow(q - 1, i - l) * binom(n - x, i - l) * binom(x, l);
        if (l % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

Rat krawtchouk(int i, int n, int q, int x) {
    if (i < 0 || i > n)
        throw std::invalid_argument("krawtchouk: degree out of range");
    return Rat(krawtchouk_sum(i, n, q, x));
}

namespace {

// Direct evaluation; valid whenever C(w,x) C(n-w,x) != 0.
Rat hahn_direct(int i, int n, int w, int x) {
    Int num = binom(n, i) - binom(n, i - 1);
    Int den = binom(w, x) * binom(n - w, x);
    Int sum = 0;
    for (int r = 0; r <= x; ++r) {
        Int term = binom(i, r) * binom(w - i, x - r) * binom(n - w - i, x - r);
        if (r % 2) sum -= term;
        else sum += term;
    }
    return rat(num * sum, den);
}

} // namespace

Rat hahn(int i, int n, int w, int x) {
    const int m = std::min(w, n - w);
    if (i < 0 || i > m || x < 0 || x > m)
        throw std::invalid_argument("hahn: index out of range");
    return hahn_direct(i, n, w, x);
}

Rat hahn_extended(int i, int n, int w, int x) {
    const int m = std::min(w, n - w);
    if (i < 0 || i > m)
        throw std::invalid_argument("hahn_extended: degree out of range");
    if (x >= 0 && x <= m) return hahn_direct(i, n, w, x);
    // Degree-i polynomial: Lagrange through the nodes 0..i (all <= m).
    Rat value = 0;
    for (int t = 0; t <= i; ++t) {
        Rat term = hahn_direct(i, n, w, t);
        for (int u = 0; u <= i; ++u) {
            if (u == t) continue;
            term *= rat(x - u, t - u);
        }
        value += term;
    }
    return value;
}

Rat eigenmatrix_Q(const SchemeParams& params, IndexPair ij, IndexPair kh) {
    params.require_in_L(ij, "eigenmatrix_Q");
    params.require_in_K(kh, "eigenmatrix_Q");
    const int i = ij.i, j = ij.j, k = kh.i, h = kh.j;
    Rat front = rat(binom(params.n, j), binom(params.w, j));
    Int kraw = krawtchouk_sum(j, params.w - h, params.q - 1, k - h);
    Rat hahn_part = hahn_extended(i - j, params.n - j, params.w - j, h);
    return front * Rat(kraw) * hahn_part;
}

Int multiplicity(const SchemeParams& params, IndexPair ij) {
    params.require_in_L(ij, "multiplicity");
    const int i = ij.i, j = ij.j;
    return ipow(params.q - 2, j) * binom(params.n, j) *
           (binom(params.n - j, i - j) - binom(params.n - j, i - j - 1));
}

Mat<Rat> eigenmatrix_table(const SchemeParams& params) {
    Mat<Rat> t(params.L.size(), params.K.size());
    for (std::size_t li = 0; li < params.L.size(); ++li)
        for (std::size_t ki = 0; ki < params.K.size(); ++ki)
            t(li, ki) = eigenmatrix_Q(params, params.L[li], params.K[ki]);
    return t;
}

Mat<Rat> first_eigenmatrix_table(const SchemeParams& params) {
    const std::size_t dim = params.L.size();
    const Mat<Rat> qtab = eigenmatrix_table(params);
    Mat<Rat> p(dim, dim);
    const Rat xsize(params.vertex_count());
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<Rat> rhs(dim, Rat(0));
        rhs[col] = xsize;
        Mat<Rat> lhs(dim, dim);
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) lhs(a, b) = qtab(a, b);
        const auto sol = solve_exact(std::move(lhs), std::move(rhs));
        if (!sol)
            throw consistency_error("first_eigenmatrix_table: Q is not invertible");
        for (std::size_t k = 0; k < dim; ++k) p(k, col) = (*sol)[k];
    }
    return p;
}

std::vector<Rat> krein_table(const SchemeParams& params, IndexPair ij, IndexPair i2j2) {
    params.require_in_L(ij, "krein");
    params.require_in_L(i2j2, "krein");
    const std::size_t dim = params.L.size();
    Mat<Rat> system(dim, dim);
    std::vector<Rat> rhs(dim);
    const Mat<Rat> q = eigenmatrix_table(params);
    const std::size_t a = params.l_index(ij), b = params.l_index(i2j2);
    for (std::size_t ki = 0; ki < dim; ++ki) {
        for (std::size_t li = 0; li < dim; ++li) system(ki, li) = q(li, ki);
        rhs[ki] = q(a, ki) * q(b, ki);
    }
    auto sol = solve_exact(std::move(system), std::move(rhs));
    if (!sol)
        throw consistency_error("krein_table: singular eigenmatrix system");
    return *sol;
}

Rat krein(const SchemeParams& params, IndexPair ij, IndexPair i2j2, IndexPair rs) {
    params.require_in_L(rs, "krein");
    return krein_table(params, ij, i2j2)[params.l_index(rs)];
}

} // namespace rsd

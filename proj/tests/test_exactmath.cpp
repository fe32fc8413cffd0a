#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rsd/bounds.hpp"
#include "rsd/polynomials.hpp"

using namespace rsd;

namespace {

// Exact Lagrange interpolation through (x_t, v_t), evaluated at x.
Rat lagrange_eval(const std::vector<int>& xs, const std::vector<Rat>& vs, int x) {
    Rat out = 0;
    for (std::size_t t = 0; t < xs.size(); ++t) {
        Rat term = vs[t];
        for (std::size_t u = 0; u < xs.size(); ++u) {
            if (u == t) continue;
            term *= rat(x - xs[u], xs[t] - xs[u]);
        }
        out += term;
    }
    return out;
}

} // namespace

TEST_CASE("binomial coefficients and conventions") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(4, 3) == 4);
    CHECK(binom(7, -1) == 0);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(-2, 1) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK(ipow(0, 0) == 1); // (q-2)^0 with q = 2
    CHECK(ipow(3, 4) == 81);
}

TEST_CASE("rationals are canonical") {
    CHECK(rat(2, 6) == rat(1, 3));
    CHECK(rat(1, -2) == rat(-1, 2));
    CHECK(rat(-1, 2).get_den() == 2);
    CHECK_THROWS_AS(rat(1, 0), std::domain_error);
    CHECK(is_integral(rat(8, 4)));
    CHECK(!is_integral(rat(7, 3)));
    CHECK(exact_div(Int(12), Int(4)) == 3);
    CHECK_THROWS_AS(exact_div(Int(7), Int(2)), std::domain_error);
}

TEST_CASE("krawtchouk values") {
    for (int n : {3, 5, 8})
        for (int q : {2, 3, 4})
            for (int x = 0; x <= n; ++x) CHECK(krawtchouk(0, n, q, x) == 1);
    CHECK(krawtchouk(1, 5, 4, 0) == 15); // (q-1) C(5,1)
    CHECK(krawtchouk(1, 5, 4, 5) == -5); // -C(5,1)
    CHECK_THROWS_AS(krawtchouk(6, 5, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(krawtchouk(-1, 5, 4, 0), std::invalid_argument);
}

TEST_CASE("hahn values") {
    for (int n : {4, 6, 7})
        for (int w = 1; w < n; ++w)
            for (int x = 0; x <= std::min(w, n - w); ++x)
                CHECK(hahn(0, n, w, x) == 1);
    // direct evaluation of the defining expression at (1,4,2,x)
    CHECK(hahn(1, 4, 2, 0) == 3); // C(4,1) - C(4,0)
    CHECK(hahn(1, 4, 2, 1) == 0); // prefactor 3/4 times (1 - 1)
    CHECK_THROWS_AS(hahn(3, 4, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(hahn(1, 4, 2, 3), std::invalid_argument);
}

TEST_CASE("hahn polynomial extension agrees with interpolation") {
    // beyond min(w, n-w) the value comes from the degree-i polynomial
    for (int i = 0; i <= 2; ++i) {
        std::vector<int> xs;
        std::vector<Rat> vs;
        for (int t = 0; t <= i; ++t) {
            xs.push_back(t);
            vs.push_back(hahn(i, 7, 3, t));
        }
        for (int x = 4; x <= 7; ++x)
            CHECK(hahn_extended(i, 7, 3, x) == lagrange_eval(xs, vs, x));
    }
}

TEST_CASE("second eigenmatrix small table") {
    // J_3(1,2): hand-evaluated 3x3 table over L = K = {(0,0),(1,0),(1,1)}
    const auto p = SchemeParams::make(2, 1, 3);
    REQUIRE(p.L.size() == 3);
    const IndexPair e00{0, 0}, e10{1, 0}, e11{1, 1};
    CHECK(eigenmatrix_Q(p, e00, e00) == 1);
    CHECK(eigenmatrix_Q(p, e00, e10) == 1);
    CHECK(eigenmatrix_Q(p, e00, e11) == 1);
    CHECK(eigenmatrix_Q(p, e10, e00) == 1);
    CHECK(eigenmatrix_Q(p, e10, e10) == 1);
    CHECK(eigenmatrix_Q(p, e10, e11) == -1);
    CHECK(eigenmatrix_Q(p, e11, e00) == 2);
    CHECK(eigenmatrix_Q(p, e11, e10) == -2);
    CHECK(eigenmatrix_Q(p, e11, e11) == 0);
}

TEST_CASE("eigenmatrix top row is constant one") {
    for (auto [n, w, q] : {std::tuple{5, 3, 4}, {7, 3, 4}, {6, 4, 3}, {4, 2, 2}}) {
        const auto p = SchemeParams::make(n, w, q);
        for (IndexPair kh : p.K) CHECK(eigenmatrix_Q(p, {0, 0}, kh) == 1);
    }
}

TEST_CASE("eigenmatrix column (0,0) gives the multiplicities") {
    for (auto [n, w, q] : {std::tuple{5, 3, 4}, {7, 3, 5}, {6, 2, 3}}) {
        const auto p = SchemeParams::make(n, w, q);
        for (IndexPair ij : p.L)
            CHECK(eigenmatrix_Q(p, ij, {0, 0}) == Rat(multiplicity(p, ij)));
    }
}

TEST_CASE("eigenmatrix degree structure") {
    const auto p = SchemeParams::make(5, 3, 4);
    for (IndexPair ij : p.L) {
        // fixed h: degree j in k
        for (int h = 0; h <= p.m; ++h) {
            std::vector<int> ks;
            for (IndexPair kh : p.K)
                if (kh.j == h) ks.push_back(kh.i);
            if (static_cast<int>(ks.size()) <= ij.j + 1) continue;
            std::vector<int> xs(ks.begin(), ks.begin() + ij.j + 1);
            std::vector<Rat> vs;
            for (int k : xs) vs.push_back(eigenmatrix_Q(p, ij, {k, h}));
            for (std::size_t t = xs.size(); t < ks.size(); ++t)
                CHECK(eigenmatrix_Q(p, ij, {ks[t], h}) == lagrange_eval(xs, vs, ks[t]));
        }
        // fixed k: degree i in h
        for (int k = 0; k <= p.w; ++k) {
            std::vector<int> hs;
            for (IndexPair kh : p.K)
                if (kh.i == k) hs.push_back(kh.j);
            if (static_cast<int>(hs.size()) <= ij.i + 1) continue;
            std::vector<int> xs(hs.begin(), hs.begin() + ij.i + 1);
            std::vector<Rat> vs;
            for (int h : xs) vs.push_back(eigenmatrix_Q(p, ij, {k, h}));
            for (std::size_t t = xs.size(); t < hs.size(); ++t)
                CHECK(eigenmatrix_Q(p, ij, {k, hs[t]}) == lagrange_eval(xs, vs, hs[t]));
        }
    }
}

TEST_CASE("multiplicities") {
    const auto p534 = SchemeParams::make(5, 3, 4);
    CHECK(multiplicity(p534, {0, 0}) == 1);
    CHECK(multiplicity(SchemeParams::make(5, 2, 4), {1, 1}) == 10); // (q-2) n
    Int total = 0;
    for (IndexPair ij : p534.L) total += multiplicity(p534, ij);
    CHECK(total == 270);
    // diagonal closed form from the binomial convention
    for (int i = 0; i <= 3; ++i)
        CHECK(multiplicity(p534, {i, i}) == ipow(2, i) * binom(5, i));
    CHECK_THROWS_AS(multiplicity(p534, {3, 0}), std::invalid_argument);
}

TEST_CASE("index sets L and K") {
    for (int n = 1; n <= 7; ++n)
        for (int w = 1; w <= n; ++w) {
            const auto p = SchemeParams::make(n, w, 3);
            CHECK(p.L.size() == p.K.size());
            Int expected = 0;
            for (int d = 0; d <= p.m; ++d) expected += p.w - d + 1;
            CHECK(Int(static_cast<long>(p.L.size())) == expected);
        }
    CHECK_THROWS_AS(SchemeParams::make(3, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(SchemeParams::make(3, 1, 1), std::invalid_argument);
}

TEST_CASE("krein numbers") {
    for (auto [n, w, q] : {std::tuple{3, 1, 3}, {4, 2, 3}, {5, 3, 4}}) {
        const auto p = SchemeParams::make(n, w, q);
        for (IndexPair a : p.L) {
            // Q_{0,0} is the multiplicative identity row
            const auto table = krein_table(p, {0, 0}, a);
            for (std::size_t t = 0; t < p.L.size(); ++t)
                CHECK(table[t] == (p.L[t] == a ? Rat(1) : Rat(0)));
        }
        for (IndexPair a : p.L)
            for (IndexPair b : p.L) {
                const auto table = krein_table(p, a, b);
                for (std::size_t t = 0; t < p.L.size(); ++t) {
                    const IndexPair rs = p.L[t];
                    CHECK(table[t] >= 0);
                    if (a.i + b.i < rs.i || a.j + b.j < rs.j) CHECK(table[t] == 0);
                    if (rs.i == 0 && rs.j == 0)
                        CHECK(table[t] == (a == b ? Rat(multiplicity(p, a)) : Rat(0)));
                }
            }
    }
    const auto p313 = SchemeParams::make(3, 1, 3);
    CHECK(krein(p313, {0, 0}, {1, 0}, {1, 1}) == 0);
}

TEST_CASE("fisher bound") {
    CHECK(fisher_bound(SchemeParams::make(5, 3, 4), 2, 1) == 5);
    CHECK(fisher_bound(SchemeParams::make(5, 3, 4), 1, 0) == 1);
    CHECK(fisher_bound(SchemeParams::make(7, 2, 2), 1, 0) == 1);
    CHECK(fisher_bound(SchemeParams::make(6, 3, 3), 2, 2) == 12);
    CHECK_THROWS_AS(fisher_bound(SchemeParams::make(5, 3, 4), 0, 0),
                    std::invalid_argument);
}

TEST_CASE("fisher bound for odd r") {
    CHECK(fisher_bound_odd(SchemeParams::make(7, 3, 4), 3, 2) == 42);
    CHECK(fisher_bound_odd(SchemeParams::make(7, 3, 4), 3, 3) == 126);
    CHECK(fisher_bound_odd(SchemeParams::make(7, 3, 2), 1, 0) == rat(7, 3));
    CHECK_THROWS_AS(fisher_bound_odd(SchemeParams::make(7, 3, 4), 2, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(fisher_bound_odd(SchemeParams::make(4, 3, 4), 3, 1),
                    std::invalid_argument); // r = 3 > m = 1
}

TEST_CASE("natural bound") {
    CHECK(natural_bound(SchemeParams::make(5, 3, 4), 2, 1) == 10);
    CHECK(natural_bound(SchemeParams::make(6, 4, 3), 2, 1) == 5);
    CHECK(natural_bound(SchemeParams::make(5, 3, 4), 0, 0) == 1);
    CHECK_THROWS_AS(natural_bound(SchemeParams::make(5, 3, 4), 4, 1),
                    std::invalid_argument);
}

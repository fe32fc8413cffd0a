#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rsd/errors.hpp"
#include "rsd/polynomials.hpp"
#include "rsd/scheme.hpp"

using namespace rsd;

namespace {

Word word(std::initializer_list<int> vals) {
    Word out;
    for (int v : vals) out.push_back(static_cast<Symbol>(v));
    return out;
}

} // namespace

TEST_CASE("vertex enumeration") {
    const auto tiny = enumerate_vertices(SchemeParams::make(2, 1, 3));
    CHECK(tiny == std::vector<Word>{word({0, 1}), word({0, 2}), word({1, 0}),
                                    word({2, 0})});
    CHECK(enumerate_vertices(SchemeParams::make(5, 3, 4)).size() == 270);
    CHECK(enumerate_vertices(SchemeParams::make(3, 3, 2)) ==
          std::vector<Word>{word({1, 1, 1})});
    CHECK_THROWS_AS(enumerate_vertices(SchemeParams::make(20, 10, 4)), size_cap_error);
    // counts match C(n,w)(q-1)^w across a small sweep
    for (int n = 1; n <= 5; ++n)
        for (int w = 1; w <= n; ++w)
            for (int q = 2; q <= 4; ++q) {
                const auto p = SchemeParams::make(n, w, q);
                CHECK(Int(static_cast<long>(enumerate_vertices(p).size())) ==
                      p.vertex_count());
            }
}

TEST_CASE("relation computation") {
    const auto x = word({1, 1, 1, 0, 0});
    CHECK(relation(x, x) == IndexPair{0, 0});
    CHECK(relation(x, word({1, 1, 2, 0, 0})) == IndexPair{1, 0});
    CHECK(relation(x, word({0, 0, 1, 1, 1})) == IndexPair{2, 2});
    CHECK_THROWS_AS(relation(x, word({1, 1, 0, 0, 0})), std::invalid_argument);
    // symmetric, and (0,0) exactly on the diagonal
    const auto p = SchemeParams::make(4, 2, 3);
    const auto vertices = enumerate_vertices(p);
    for (const Word& a : vertices)
        for (const Word& b : vertices) {
            const auto r = relation(a, b);
            CHECK(r == relation(b, a));
            CHECK((r == IndexPair{0, 0}) == (a == b));
            CHECK(p.in_K(r));
        }
}

TEST_CASE("characters") {
    for (int q = 2; q <= 9; ++q) {
        for (int b = 1; b < q; ++b) CHECK(character(1, b, q) == CycInt::constant(q - 1, 1));
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b) CHECK(character(a, b, q) == character(b, a, q));
        // orthogonality: sum_b psi_a(b) is 0 unless a = 1, where it is q-1
        for (int a = 1; a < q; ++a) {
            CycInt sum(q - 1);
            for (int b = 1; b < q; ++b) sum += character(a, b, q);
            if (a == 1) CHECK(sum.to_int() == Int(q - 1));
            else CHECK(sum.is_zero());
        }
    }
    CHECK(character(2, 2, 4) == CycInt::monomial(3, 1));
    CHECK(character(3, 3, 4) == CycInt::monomial(3, 1)); // exponent 4 = 1 mod 3
    CHECK_THROWS_AS(character(0, 1, 4), std::invalid_argument);
}

TEST_CASE("pairings") {
    // support containment is necessary and sufficient for a nonzero value
    CHECK(pairing(word({1, 1, 0}), word({1, 0, 1}), 3).is_zero());
    CHECK(pairing(word({1, 1, 0}), word({2, 1, 0}), 3).to_int() == Int(1));
    CHECK(pairing(word({2, 0}), word({2, 1}), 3).to_int() == Int(-1)); // zeta = -1
}

TEST_CASE("W_rs enumeration") {
    const auto p23 = SchemeParams::make(2, 1, 3);
    CHECK(enumerate_Wrs(p23, 1, 0) == std::vector<Word>{word({0, 1}), word({1, 0})});
    CHECK(enumerate_Wrs(p23, 1, 1) == std::vector<Word>{word({0, 2}), word({2, 0})});
    const auto p54 = SchemeParams::make(5, 2, 4);
    CHECK(enumerate_Wrs(p54, 2, 1).size() == 40); // C(5,2) C(2,1) (q-2)
    for (int r = 0; r <= 3; ++r)
        for (int s = 0; s <= r; ++s) {
            const auto p = SchemeParams::make(5, 3, 4);
            const Int expected = binom(5, r) * binom(r, s) * ipow(2, s);
            CHECK(Int(static_cast<long>(enumerate_Wrs(p, r, s).size())) == expected);
            for (const Word& a : enumerate_Wrs(p, r, s)) {
                CHECK(hamming_weight(a) == r);
                CHECK(mult_weight(a) == s);
            }
        }
}

TEST_CASE("character matrix A") {
    const auto p = SchemeParams::make(4, 2, 3);
    const auto a = build_A(p, 2, 1);
    CHECK(a.vertices.size() == 24);
    CHECK(a.wrs.size() == 12);
    for (std::size_t xi = 0; xi < a.vertices.size(); ++xi)
        for (std::size_t ci = 0; ci < a.wrs.size(); ++ci) {
            const auto sa = support(a.wrs[ci]);
            const auto sx = support(a.vertices[xi]);
            const bool contained =
                std::includes(sx.begin(), sx.end(), sa.begin(), sa.end());
            CHECK(a.entries[xi][ci].is_zero() == !contained);
        }
}

TEST_CASE("C matrices") {
    const auto p = SchemeParams::make(4, 2, 3);
    const auto vertices = enumerate_vertices(p);
    const auto cls = relation_class_table(p, vertices);

    const auto c00 = build_C(p, 0, 0);
    for (std::size_t i = 0; i < 24; ++i)
        for (std::size_t j = 0; j < 24; ++j) CHECK(c00(i, j) == 1);

    for (IndexPair rs : p.L) {
        const auto c = build_C(p, rs.i, rs.j);
        const Int diag = binom(p.w, rs.i) * binom(rs.i, rs.j) * ipow(p.q - 2, rs.j);
        for (std::size_t i = 0; i < 24; ++i) CHECK(c(i, i) == diag);
        for (std::size_t i = 0; i < 24; ++i)
            for (std::size_t j = 0; j < 24; ++j) CHECK(c(i, j) == c(j, i));
        // entries depend only on the relation class
        CHECK_NOTHROW(compress_to_classes(p, c, cls));
    }

    // products with different second index vanish
    const auto prod = build_C(p, 1, 0).mul(build_C(p, 1, 1));
    for (std::size_t i = 0; i < 24; ++i)
        for (std::size_t j = 0; j < 24; ++j) CHECK(prod(i, j) == 0);
}

TEST_CASE("C algebra expansions") {
    const auto p = SchemeParams::make(4, 2, 3);
    const auto report = verify_crs_algebra(p);
    CHECK(report.products.size() == p.L.size() * p.L.size());
    for (const auto& entry : report.products) {
        if (entry.rs.j != entry.kh.j) {
            CHECK(entry.coeffs.empty());
            continue;
        }
        const int expected = std::min(entry.rs.i, entry.kh.i) - entry.rs.j + 1;
        CHECK(static_cast<int>(entry.coeffs.size()) == expected);
        CHECK(entry.coeffs.back() > 0);
        // C_00^2 = |X| C_00
        if (entry.rs == IndexPair{0, 0} && entry.kh == IndexPair{0, 0})
            CHECK(entry.coeffs[0] == 24);
        // a lower C-basis coefficient can vanish: C_10 C_20 = 4 C_10
        if (entry.rs == IndexPair{1, 0} && entry.kh == IndexPair{2, 0}) {
            CHECK(entry.coeffs[0] == 0);
            CHECK(entry.coeffs[1] == 4);
        }
        if (entry.rs == IndexPair{1, 0} && entry.kh == IndexPair{1, 0}) {
            CHECK(entry.coeffs[0] == 16);
            CHECK(entry.coeffs[1] == 8);
        }
    }
}

TEST_CASE("numeric idempotents") {
    for (auto [n, w, q] : {std::tuple{2, 1, 3}, {3, 1, 3}, {4, 2, 3}}) {
        const auto p = SchemeParams::make(n, w, q);
        const auto idem = numeric_idempotents(p);
        const auto vertices = idem.vertices;
        const auto nx = static_cast<Eigen::Index>(vertices.size());

        int total_rank = 0;
        for (std::size_t t = 0; t < p.L.size(); ++t) {
            CHECK(Int(idem.ranks[t]) == multiplicity(p, p.L[t]));
            total_rank += idem.ranks[t];
        }
        CHECK(Int(total_rank) == p.vertex_count());

        Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(nx, nx);
        for (std::size_t t = 0; t < p.L.size(); ++t) {
            const auto& proj = idem.projectors[t];
            CHECK((proj * proj - proj).lpNorm<Eigen::Infinity>() < 1e-8);
            CHECK((proj - proj.transpose()).lpNorm<Eigen::Infinity>() < 1e-8);
            for (std::size_t u = t + 1; u < p.L.size(); ++u)
                CHECK((proj * idem.projectors[u]).lpNorm<Eigen::Infinity>() < 1e-8);
            sum += proj;
        }
        CHECK((sum - Eigen::MatrixXd::Identity(nx, nx)).lpNorm<Eigen::Infinity>() < 1e-8);

        // E_00 is the all-ones matrix over |X|
        const double inv = 1.0 / static_cast<double>(vertices.size());
        CHECK((idem.projectors[0] - Eigen::MatrixXd::Constant(nx, nx, inv))
                  .lpNorm<Eigen::Infinity>() < 1e-8);

        // E_ij = |X|^{-1} sum_kh Q_{ij}(k,h) A_kh, entrywise
        const auto cls = relation_class_table(p, vertices);
        for (std::size_t t = 0; t < p.L.size(); ++t) {
            Eigen::MatrixXd expected(nx, nx);
            std::vector<double> qrow(p.K.size());
            for (std::size_t k = 0; k < p.K.size(); ++k)
                qrow[k] = eigenmatrix_Q(p, p.L[t], p.K[k]).get_d() * inv;
            for (Eigen::Index xi = 0; xi < nx; ++xi)
                for (Eigen::Index yi = 0; yi < nx; ++yi)
                    expected(xi, yi) =
                        qrow[cls[static_cast<std::size_t>(xi) * vertices.size() +
                                 static_cast<std::size_t>(yi)]];
            CHECK((idem.projectors[t] - expected).lpNorm<Eigen::Infinity>() < 1e-8);
        }
    }
    CHECK_THROWS_AS(numeric_idempotents(SchemeParams::make(4, 2, 2)),
                    std::invalid_argument);
}

TEST_CASE("components of C") {
    const auto p = SchemeParams::make(4, 2, 3);
    const auto idem = numeric_idempotents(p);
    CHECK(components_of_C(p, 0, 0, idem) == std::vector<IndexPair>{{0, 0}});
    CHECK(components_of_C(p, 2, 0, idem) ==
          std::vector<IndexPair>{{0, 0}, {1, 0}, {2, 0}});
    CHECK(components_of_C(p, 2, 1, idem) == std::vector<IndexPair>{{1, 1}, {2, 1}});
}

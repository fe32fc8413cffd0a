#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rsd/cyclotomic.hpp"

using namespace rsd;

namespace {

std::vector<Int> coeffs(std::initializer_list<long> vals) {
    std::vector<Int> out;
    for (long v : vals) out.emplace_back(v);
    return out;
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == coeffs({-1, 1}));
    CHECK(cyclotomic_poly(2) == coeffs({1, 1}));
    CHECK(cyclotomic_poly(3) == coeffs({1, 1, 1}));
    CHECK(cyclotomic_poly(4) == coeffs({1, 0, 1}));
    CHECK(cyclotomic_poly(6) == coeffs({1, -1, 1}));
    CHECK(cyclotomic_poly(8) == coeffs({1, 0, 0, 0, 1}));
}

TEST_CASE("zero testing") {
    CHECK(CycInt(3).is_zero());
    CycInt ones(3);
    ones.coeff(0) = 1;
    ones.coeff(1) = 1;
    ones.coeff(2) = 1;
    CHECK(ones.is_zero()); // 1 + zeta + zeta^2 = 0 for a primitive cube root
    CHECK(!CycInt::constant(3, 1).is_zero());
    CHECK(CycInt(1).is_zero());
    CHECK(!CycInt::constant(1, 2).is_zero());
}

TEST_CASE("integer extraction") {
    CycInt v(3);
    v.coeff(0) = 5;
    v.coeff(1) = 1;
    v.coeff(2) = 1; // 5 + zeta + zeta^2 = 4
    CHECK(v.to_int() == Int(4));
    CHECK(!CycInt::monomial(3, 1).to_int().has_value());
    CHECK(CycInt::monomial(4, 2).to_int() == Int(-1)); // i^2
}

TEST_CASE("arithmetic and conjugation") {
    // zeta * zeta^2 = 1 at order 3
    CHECK(CycInt::monomial(3, 1) * CycInt::monomial(3, 2) == CycInt::constant(3, 1));
    // exponents reduce modulo the order
    CHECK(CycInt::monomial(3, 5) == CycInt::monomial(3, 2));
    // conjugation negates exponents
    CHECK(CycInt::monomial(3, 1).conj() == CycInt::monomial(3, 2));
    CHECK(CycInt::monomial(5, 2).conj() == CycInt::monomial(5, 3));
    // |zeta|^2 = 1
    const auto z = CycInt::monomial(5, 3);
    CHECK(z * z.conj() == CycInt::constant(5, 1));
    CHECK((z - z).is_zero());
    CHECK((-z + z).is_zero());
    CHECK_THROWS_AS(CycInt(3) + CycInt(4), std::invalid_argument);
}

TEST_CASE("order 1 and 2 degenerate to integers") {
    const auto a = CycInt::monomial(2, 1); // zeta = -1 when q = 3
    CHECK(a.to_int() == Int(-1));
    CHECK((a * a).to_int() == Int(1));
    CHECK(CycInt::constant(1, 7).to_int() == Int(7)); // q = 2, trivial group
}

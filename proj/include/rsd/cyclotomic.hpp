#pragma once

#include <optional>
#include <vector>

#include "rsd/rational.hpp"

namespace rsd {

/// Coefficients of the n-th cyclotomic polynomial, low degree first.
std::vector<Int> cyclotomic_poly(int n);

/// Exact element of Z[zeta] for zeta a fixed primitive `order`-th root of
/// unity, stored as a coefficient vector over the exponents 0..order-1
/// (the group ring of the cyclic group of that order).  Zero-testing and
/// integer extraction reduce modulo the cyclotomic polynomial, so they are
/// exact despite the redundant representation.
class CycInt {
public:
    explicit CycInt(int order) : coeffs_(check_order(order)) {}

    static CycInt monomial(int order, long exp, const Int& c = 1);
    static CycInt constant(int order, const Int& c);

    int order() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int& coeff(std::size_t k) { return coeffs_[k]; }

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    CycInt operator-() const;

    /// Complex conjugate: zeta^k -> zeta^(order-k).
    CycInt conj() const;

    /// True iff the value is 0 in Z[zeta] (coefficient polynomial divisible
    /// by the cyclotomic polynomial).
    bool is_zero() const;

    /// The rational-integer value when the element lies in Z, else nullopt.
    std::optional<Int> to_int() const;

    /// Algebraic equality (not coefficient-vector equality).
    friend bool operator==(const CycInt& a, const CycInt& b) {
        return (a - b).is_zero();
    }

private:
    static std::size_t check_order(int order);
    std::vector<Int> coeffs_; // coefficient of zeta^k at index k
};

} // namespace rsd

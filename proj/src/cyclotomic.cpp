#include "rsd/cyclotomic.hpp"

#include <stdexcept>

#include "rsd/errors.hpp"

namespace rsd {
namespace {

// Remainder of a by monic b in Z[x]; vectors are low degree first.
std::vector<Int> poly_mod_monic(std::vector<Int> a, const std::vector<Int>& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const Int lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= lead * b[k];
        }
        a.pop_back();
    }
    return a;
}

// Exact quotient a / b for monic b dividing a.
std::vector<Int> poly_div_monic(std::vector<Int> a, const std::vector<Int>& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() <= db) throw consistency_error("poly_div_monic: degree");
    std::vector<Int> q(a.size() - db);
    for (std::size_t top = a.size(); top-- > db;) {
        const Int c = a[top];
        const std::size_t shift = top - db;
        q[shift] = c;
        if (c != 0)
            for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= c * b[k];
    }
    for (const Int& c : a)
        if (c != 0) throw consistency_error("poly_div_monic: not divisible");
    return q;
}

} // namespace

std::vector<Int> cyclotomic_poly(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: n >= 1 required");
    // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
    std::vector<Int> num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = poly_div_monic(std::move(num), cyclotomic_poly(d));
    return num;
}

std::size_t CycInt::check_order(int order) {
    if (order < 1) throw std::invalid_argument("CycInt: order >= 1 required");
    return static_cast<std::size_t>(order);
}

CycInt CycInt::monomial(int order, long exp, const Int& c) {
    CycInt v(order);
    long e = exp % order;
    if (e < 0) e += order;
    v.coeffs_[static_cast<std::size_t>(e)] = c;
    return v;
}

CycInt CycInt::constant(int order, const Int& c) { return monomial(order, 0, c); }

CycInt& CycInt::operator+=(const CycInt& o) {
    if (coeffs_.size() != o.coeffs_.size())
        throw std::invalid_argument("CycInt: mixed orders");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    if (coeffs_.size() != o.coeffs_.size())
        throw std::invalid_argument("CycInt: mixed orders");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    if (a.coeffs_.size() != b.coeffs_.size())
        throw std::invalid_argument("CycInt: mixed orders");
    const std::size_t n = a.coeffs_.size();
    CycInt out(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coeffs_[j] == 0) continue;
            out.coeffs_[(i + j) % n] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

CycInt CycInt::operator-() const {
    CycInt out(order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = -coeffs_[k];
    return out;
}

CycInt CycInt::conj() const {
    const std::size_t n = coeffs_.size();
    CycInt out(static_cast<int>(n));
    for (std::size_t k = 0; k < n; ++k) out.coeffs_[(n - k) % n] = coeffs_[k];
    return out;
}

bool CycInt::is_zero() const {
    bool trivial = true;
    for (const Int& c : coeffs_)
        if (c != 0) { trivial = false; break; }
    if (trivial) return true;
    const auto rem = poly_mod_monic(coeffs_, cyclotomic_poly(order()));
    for (const Int& c : rem)
        if (c != 0) return false;
    return true;
}

std::optional<Int> CycInt::to_int() const {
    auto rem = poly_mod_monic(coeffs_, cyclotomic_poly(order()));
    Int value = rem.empty() ? Int(0) : rem[0];
    for (std::size_t k = 1; k < rem.size(); ++k)
        if (rem[k] != 0) return std::nullopt;
    return value;
}

} // namespace rsd

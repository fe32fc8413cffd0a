#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rsd/errors.hpp"
#include "rsd/rational.hpp"

namespace rsd {

/// Minimal dense row-major matrix for exact scalar types.
template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    Mat mul(const Mat& other) const {
        if (cols_ != other.rows_) throw consistency_error("Mat::mul: shape mismatch");
        Mat out(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < other.cols_; ++j)
                    out(i, j) += a * other(k, j);
            }
        return out;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

/// Solves A x = b exactly over the rationals by Gaussian elimination.
/// A may have more rows than columns; the system must be consistent and of
/// full column rank, otherwise nullopt.
inline std::optional<std::vector<Rat>> solve_exact(Mat<Rat> a, std::vector<Rat> b) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m) throw consistency_error("solve_exact: shape mismatch");
    std::vector<std::size_t> pivot_row(n);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && a(piv, col) == 0) ++piv;
        if (piv == m) return std::nullopt; // column without pivot: rank deficient
        if (piv != rank) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(rank, j), a(piv, j));
            std::swap(b[rank], b[piv]);
        }
        const Rat inv = 1 / a(rank, col);
        for (std::size_t j = col; j < n; ++j) a(rank, j) *= inv;
        b[rank] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || a(i, col) == 0) continue;
            const Rat f = a(i, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(rank, j);
            b[i] -= f * b[rank];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    if (rank < n) return std::nullopt;
    for (std::size_t i = rank; i < m; ++i)
        if (b[i] != 0) return std::nullopt; // inconsistent
    std::vector<Rat> x(n);
    for (std::size_t col = 0; col < n; ++col) x[col] = b[pivot_row[col]];
    return x;
}

} // namespace rsd

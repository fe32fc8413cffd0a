#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsd/design.hpp"

namespace rsd {

/// r-(n,w,lambda1) block design; blocks are sorted 0-based w-subsets.
struct BlockDesign {
    int n = 0, w = 0, r = 0;
    long long lambda1 = 0;
    std::vector<std::vector<int>> blocks;
};

/// Orthogonal array OA(runs, factors, qminus1, strength) over symbols
/// 1..qminus1 with index lambda2.
struct OrthoArray {
    int factors = 0, qminus1 = 0, strength = 0;
    long long lambda2 = 0;
    std::vector<std::vector<int>> rows;

    std::size_t runs() const { return rows.size(); }
};

struct BlockDesignCheck {
    std::optional<long long> lambda;          // common coverage count
    std::optional<std::vector<int>> witness;  // first r-subset off the common count
};

/// Counts how often every r-subset of points is covered by a block.
BlockDesignCheck block_design_verify(int n, int w, int r,
                                     const std::vector<std::vector<int>>& blocks);

struct OACheck {
    std::optional<long long> lambda;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> witness; // (columns, tuple)
};

/// Counts occurrences of every s-tuple in every choice of s columns.
OACheck oa_verify(int factors, int qminus1, int strength,
                  const std::vector<std::vector<int>>& rows);

/// Steiner triple system S(2,3,n): Bose construction for n = 3 (mod 6),
/// Skolem construction for n = 1 (mod 6).  Verified before returning.
BlockDesign sts(int n);

/// The rows (a,a,...,a) for a = 1..q-1: an OA(q-1, w, q-1, 1) of index 1.
OrthoArray trivial_oa(int w, int q);

/// OA((q-1)^2, 4, q-1, 2) of index 1 from the field of order q-1, rows
/// (x, y, x+y, x+gy) for a fixed scalar g outside {0,1}.  Requires q-1 to
/// be a prime power >= 3 (this excludes q = 3 and q = 7).
OrthoArray mols_oa(int q);

/// Places every OA row on every block support (column t of the OA goes to
/// the t-th smallest support coordinate); the result is an (r,s)-design of
/// index lambda1*lambda2.
DesignArray construction_a(const BlockDesign& bd, const OrthoArray& oa);

/// Places an index-1 strength-s OA on every w-subset of the coordinates;
/// the result is a (w,s)-design of index 1.  Without an explicit OA the
/// generated families cover s = 1 (any w) and s = 2 (w = 4).
DesignArray full_design(const SchemeParams& params, int s,
                        const std::optional<OrthoArray>& oa = std::nullopt);

/// The two hand-made example arrays: "fig1" is a (2,1)-(5,3,4,1)-design
/// with 10 rows, "fig2" a (2,1)-(6,4,3,3)-design with 15 rows.
DesignArray fixture(const std::string& name);

/// Whether Y can be written as construction_a output for some factorization
/// lambda = lambda1 * lambda2: uniform support groups carrying one common
/// OA, with the supports forming an r-(n,w,lambda1) design.
bool is_construction_a_expressible(const DesignArray& y, int r, int s,
                                   long long lambda);

} // namespace rsd

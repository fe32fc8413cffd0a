#pragma once

#include <vector>

#include "rsd/matrix.hpp"
#include "rsd/params.hpp"
#include "rsd/rational.hpp"

namespace rsd {

/// Krawtchouk polynomial value
///   K_i(n,q,x) = sum_{l=0}^{i} (-1)^l (q-1)^{i-l} C(n-x,i-l) C(x,l),
/// evaluated exactly at integer x.  Requires 0 <= i <= n.
Rat krawtchouk(int i, int n, int q, int x);

/// Same sum without the degree restriction; used where the bivariate
/// eigenmatrix needs K_j with j exceeding the size parameter.
Int krawtchouk_sum(int i, int n, int q, int x);

/// Hahn polynomial value
///   Q_i(n,w,x) = (C(n,i)-C(n,i-1)) / (C(w,x) C(n-w,x))
///                * sum_{r=0}^{x} (-1)^r C(i,r) C(w-i,x-r) C(n-w-i,x-r),
/// evaluated exactly.  Requires 0 <= i <= min(w,n-w) and 0 <= x <= min(w,n-w).
Rat hahn(int i, int n, int w, int x);

/// Hahn value as a polynomial of degree i: direct formula where the
/// denominator is nonzero, exact Lagrange extension from the integer nodes
/// 0..i otherwise.  Requires 0 <= i <= min(w, n-w).
Rat hahn_extended(int i, int n, int w, int x);

/// Second eigenmatrix entry
///   Q_{i,j}(k,h) = C(n,j)/C(w,j) * K_j(w-h, q-1, k-h) * Q_{i-j}(n-j, w-j, h)
/// for ij in L, kh in K.
Rat eigenmatrix_Q(const SchemeParams& params, IndexPair ij, IndexPair kh);

/// Rank of the primitive idempotent E_{ij}:
///   m_{i,j} = (q-2)^j C(n,j) (C(n-j,i-j) - C(n-j,i-j-1)).
Int multiplicity(const SchemeParams& params, IndexPair ij);

/// Full |L| x |K| table of eigenmatrix_Q in the lexicographic index order.
Mat<Rat> eigenmatrix_table(const SchemeParams& params);

/// First eigenmatrix P (|K| x |L|): P(k,l) is the eigenvalue of the relation
/// adjacency matrix A_k on the idempotent E_l, obtained exactly from
/// Q P = |X| I.
Mat<Rat> first_eigenmatrix_table(const SchemeParams& params);

/// Krein numbers q_{ij,i'j'}^{rs}: coefficients of the expansion
///   Q_{ij}(k,h) Q_{i'j'}(k,h) = sum_{rs in L} q^{rs} Q_{rs}(k,h)
/// over all (k,h) in K, obtained by an exact linear solve.  The table is
/// indexed like L.  Throws consistency_error if the square system is
/// singular (the eigenmatrix rows are linearly independent, so this would
/// mean a bug).
std::vector<Rat> krein_table(const SchemeParams& params, IndexPair ij, IndexPair i2j2);

/// Single Krein number q_{ij,i'j'}^{rs}.
Rat krein(const SchemeParams& params, IndexPair ij, IndexPair i2j2, IndexPair rs);

} // namespace rsd

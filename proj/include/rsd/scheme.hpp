#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "rsd/cyclotomic.hpp"
#include "rsd/matrix.hpp"
#include "rsd/params.hpp"

namespace rsd {

using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

int hamming_weight(const Word& x);
int mult_weight(const Word& x); // number of coordinates not in {0,1}
std::vector<int> support(const Word& x);

constexpr std::size_t kDefaultVertexCap = 1'000'000;
constexpr std::size_t kDefaultDenseCap = 1'000;

/// All weight-w words over {0..q-1}, lexicographic.  |X| = C(n,w)(q-1)^w;
/// throws size_cap_error beyond the cap.
std::vector<Word> enumerate_vertices(const SchemeParams& params,
                                     std::size_t cap = kDefaultVertexCap);

/// Relation index of a pair of weight-w words: (w - e, w - c) where e counts
/// agreeing nonzero coordinates and c counts common-support coordinates.
IndexPair relation(const Word& x, const Word& y);

/// (a-1)(b-1) mod (q-1) for nonzero symbols a,b; the character table is
/// psi_a(b) = zeta^((a-1)(b-1)) over the cyclic group of order q-1, which
/// satisfies the required symmetry psi_a(b) = psi_b(a).
int character_exponent(int a, int b, int q);

CycInt character(int a, int b, int q);

/// Exponent of the pairing (a,x) = prod_{i in supp(a)} psi_{a_i}(x_i), or
/// nullopt when the pairing is 0 (supp(a) not inside supp(x)).
std::optional<int> pairing_exponent(const Word& a, const Word& x, int q);

CycInt pairing(const Word& a, const Word& x, int q);

/// All words with Hamming weight r and multiplicative weight s,
/// lexicographic.  |W_{rs}| = C(n,r) C(r,s) (q-2)^s.
std::vector<Word> enumerate_Wrs(const SchemeParams& params, int r, int s,
                                std::size_t cap = kDefaultVertexCap);

struct CharMatrix {
    std::vector<Word> vertices; // row index
    std::vector<Word> wrs;      // column index
    std::vector<std::vector<CycInt>> entries;
};

/// A_{rs}: rows indexed by the vertex set, columns by W_{rs}, entry (x,a)
/// equal to the pairing (a,x).
CharMatrix build_A(const SchemeParams& params, int r, int s,
                   std::size_t cap = kDefaultDenseCap);

/// C_{rs} = A_{rs} conj(A_{rs})^T.  The entries are Galois-invariant
/// cyclotomic sums and reduce to exact integers.
Mat<Int> build_C(const SchemeParams& params, int r, int s,
                 std::size_t cap = kDefaultDenseCap);

/// Flattened |X| x |X| table of relation-class indices (positions in K).
std::vector<std::uint16_t> relation_class_table(const SchemeParams& params,
                                                const std::vector<Word>& vertices);

/// Compression of a Bose-Mesner matrix to one value per relation class;
/// throws consistency_error if some class is not constant.
std::vector<Int> compress_to_classes(const SchemeParams& params,
                                     const Mat<Int>& mat,
                                     const std::vector<std::uint16_t>& cls);

struct CrsProductExpansion {
    IndexPair rs, kh;
    // coefficient of C_{is} for i = s..min(r,k); empty when s != h
    std::vector<Rat> coeffs;
};

struct CrsAlgebraReport {
    std::vector<CrsProductExpansion> products;
};

/// Structural verification of the C-matrix algebra, all in exact
/// arithmetic: every C_{rs} has idempotent components exactly
/// {E_{is} : i <= r} with positive coefficients; a product C_{rs} C_{kh}
/// vanishes unless s = h and otherwise lies in span{C_{is} : s <= i <=
/// min(r,k)} with a positive leading coefficient.  (Lower coefficients of
/// the C-basis expansion can be zero; positivity holds at the idempotent
/// level.)  Throws consistency_error on violation.
CrsAlgebraReport verify_crs_algebra(const SchemeParams& params,
                                    std::size_t cap = kDefaultDenseCap);

struct NumericIdempotentSet {
    SchemeParams params;
    std::vector<Word> vertices;
    std::vector<Eigen::MatrixXd> projectors; // indexed like params.L
    std::vector<int> ranks;                  // = multiplicities
};

/// Extracts the primitive idempotents numerically: diagonalizes a fixed
/// generic combination of the relation adjacency matrices, clusters
/// eigenvalues (relative gap 1e-6), and labels each projector by the first
/// point of the lexicographic C-filtration that contains it.  Aborts with
/// numeric_ambiguity_error instead of guessing when clusters or labels are
/// not clear-cut.  Requires q >= 3 and |X| within the dense cap.
NumericIdempotentSet numeric_idempotents(const SchemeParams& params,
                                         std::size_t cap = kDefaultDenseCap);

/// Index pairs (i,j) whose idempotent appears in C_{rs} with a clearly
/// nonzero coefficient (trace(C P)/rank against a 1e-8 zero band; values in
/// (1e-8, 1e-4) abort as ambiguous).
std::vector<IndexPair> components_of_C(const SchemeParams& params, int r, int s,
                                       const NumericIdempotentSet& idem);

} // namespace rsd

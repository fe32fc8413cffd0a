#pragma once

#include <optional>
#include <vector>

#include "rsd/params.hpp"
#include "rsd/rational.hpp"
#include "rsd/scheme.hpp"

namespace rsd {

/// Ordered, duplicate-free array of weight-w words; the object being
/// verified or constructed.  Row order is preserved from the input.
struct DesignArray {
    SchemeParams params;
    std::vector<Word> rows;

    std::size_t size() const { return rows.size(); }
};

/// Validates lengths, symbol ranges, weights and rejects duplicate rows
/// (duplicate_row_error).
DesignArray make_design(SchemeParams params, std::vector<Word> rows);

struct VerifyWitness {
    std::vector<int> R, S;  // 0-based coordinate sets, S inside R
    std::vector<int> omega; // values in 1..q-1, |omega| = |S|
    long long observed = 0;
    long long expected = 0;
};

struct VerifyReport {
    bool is_design = false;
    std::optional<long long> lambda;
    std::optional<VerifyWitness> witness; // lexicographically first failure
};

/// Number of rows y with R inside supp(y) and y equal to omega on S.
long long count_mRS(const DesignArray& y, const std::vector<int>& R,
                    const std::vector<int>& S, const std::vector<int>& omega);

/// Combinatorial (r,s)-design verifier: scans all (R,S,omega) triples in
/// lexicographic order and reports the common count or the first mismatch.
VerifyReport verify_rs_design(const DesignArray& y, int r, int s);

struct LambdaEntry {
    int r2 = 0, s2 = 0;
    Rat value;
};

/// Index table lambda_{r',s'} = (q-1)^(s-s') C(n-r',r-r')/C(w-r',r-r') lambda
/// for all s' <= s, s' <= r' <= r.  Each formula value is checked against
/// direct counting; non-integral or mismatching values abort.
std::vector<LambdaEntry> lambda_table(const DesignArray& y, int r, int s,
                                      long long lambda);

/// |Y| = (q-1)^s C(n,r)/C(w,r) lambda.
Rat cardinality_formula(const SchemeParams& params, int r, int s, const Rat& lambda);

/// Rows containing Rp in their support with prescribed values on Sp,
/// restricted to the coordinates outside Rp.
DesignArray derived_design(const DesignArray& y, const std::vector<int>& Rp,
                           const std::vector<int>& Sp, const std::vector<int>& omega);

struct AvoidanceResult {
    long long count = 0;
    Rat expected;
};

/// Rows with Rp in the support, prescribed Sp-values, and support disjoint
/// from T; checked against (q-1)^(s-s') C(n-r'-t,w-r')/C(n-r,w-r) lambda.
AvoidanceResult avoidance_count(const DesignArray& y, int r, int s, long long lambda,
                                const std::vector<int>& Rp, const std::vector<int>& Sp,
                                const std::vector<int>& omega, const std::vector<int>& T);

struct ReductionResult {
    int r = 0, s = 0;
    long long lambda = 0;
};

/// When r-s >= n-w, an (r,s)-design is a (w,s)-design with index
/// lambda / C(n-r,w-r); performs the division exactly and re-verifies.
ReductionResult reduce_to_w(const DesignArray& y, int r, int s, long long lambda);

/// T = {(i,j) in L : i <= r, j <= s} minus (0,0).
std::vector<IndexPair> make_index_set_T(const SchemeParams& params, int r, int s);

/// Exact spectral T-design test: for every s' <= s and every a in W_{rs'},
/// compares sum_{y in Y} (a,y) with (|Y|/|X|) sum_{x in X} (a,x) in exact
/// cyclotomic arithmetic.  Refuses r > min(w,n-w) (spectral_domain_error).
bool tdesign_spectral_check(const DesignArray& y, int r, int s);

/// Floating-point T-design test against the numeric idempotents:
/// || E phi_Y - (|Y|/|X|) E phi_X ||_inf <= 1e-8 for every index in T.
bool tdesign_idempotent_check(const DesignArray& y, const std::vector<IndexPair>& T,
                              const NumericIdempotentSet& idem);

} // namespace rsd

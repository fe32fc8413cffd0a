#pragma once

#include <optional>
#include <vector>

#include "rsd/bounds.hpp"
#include "rsd/design.hpp"

namespace rsd {

/// Exact-cover formulation of the index-1 search: constraints are the
/// triples (R,S,omega) with |R| = r, S inside R, |S| = s, omega over
/// {1..q-1}^s in lexicographic order; candidate x covers (R,S,omega) iff
/// R lies in supp(x) and x agrees with omega on S.
struct CoverProblem {
    SchemeParams params;
    int r = 0, s = 0;
    long long constraint_count = 0;
    std::vector<Word> candidates;                  // vertex set, lex order
    std::vector<std::vector<long long>> incidence; // per candidate, sorted ids
};

CoverProblem build_cover_problem(const SchemeParams& params, int r, int s);

enum class SearchStatus { found, exhausted, budget_exceeded };

struct SearchResult {
    std::optional<DesignArray> solution; // verified index-1 design
    long long nodes = 0;                 // candidate selections attempted
    double wall_seconds = 0;
    SearchStatus status = SearchStatus::exhausted;
};

/// Dancing-links search for an index-1 (r,s)-design.  Branches on the
/// constraint with the fewest remaining candidates (ties by lexicographic
/// constraint order) and tries candidates in lexicographic order, so the
/// first solution found is deterministic.  `exhausted` certifies that no
/// index-1 design exists.  With jobs > 1 the subtrees below the first
/// branching constraint run in parallel, each with the full node budget;
/// the reported solution is the one from the earliest subtree, which
/// matches the serial result whenever the budget is not binding.
/// `fix_first_row` forces the lexicographically smallest vertex into the
/// solution; the coordinate and value symmetries make this lossless for
/// existence questions, but `exhausted` then only certifies nonexistence
/// up to that normalization.
/// Throws std::domain_error when the natural bound is not an integer
/// (no index-1 design can exist).
SearchResult exact_cover_search(const SchemeParams& params, int r, int s,
                                long long budget, int jobs = 1,
                                bool fix_first_row = false);

/// Independent oracle: enumerates every subset of the vertex set whose size
/// equals the natural bound and counts the ones the verifier accepts.
/// Refuses |X| > 24 without `force`.
long long brute_force_count(const SchemeParams& params, int r, int s,
                            bool force = false);

struct MinimalityReport {
    bool is_design = false;
    long long lambda = 0;
    long long size = 0;
    Rat natural;
    std::optional<Int> fisher;     // when (r,s) in L, != (0,0)
    std::optional<Rat> fisher_odd; // when additionally r odd, r <= m
    bool meets_natural = false;
    bool meets_fisher = false;
    bool minimal = false; // lambda == 1
};

MinimalityReport verify_minimality(const DesignArray& y, int r, int s);

} // namespace rsd

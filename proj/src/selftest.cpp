#include "rsd/selftest.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "rsd/bounds.hpp"
#include "rsd/combinat.hpp"
#include "rsd/construct.hpp"
#include "rsd/design.hpp"
#include "rsd/errors.hpp"
#include "rsd/polynomials.hpp"
#include "rsd/scheme.hpp"
#include "rsd/search.hpp"

namespace rsd {
namespace {

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        pass = false;
        if (detail.tellp() > 0) detail << "; ";
        detail << why;
    }
};

DesignArray subset_design(const SchemeParams& params, const std::vector<Word>& vertices,
                          const std::vector<std::size_t>& picks) {
    std::vector<Word> rows;
    rows.reserve(picks.size());
    for (std::size_t id : picks) rows.push_back(vertices[id]);
    return DesignArray{params, std::move(rows)};
}

// ---- criterion 1: the embedded example arrays ------------------------------

Check c1_fixtures() {
    Check c;
    const auto fig1 = fixture("fig1");
    const auto rep1 = verify_rs_design(fig1, 2, 1);
    if (fig1.size() != 10 || !rep1.is_design || *rep1.lambda != 1)
        c.fail("fig1 did not verify as a (2,1)-design of index 1 with 10 rows");
    const auto fig2 = fixture("fig2");
    const auto rep2 = verify_rs_design(fig2, 2, 1);
    if (fig2.size() != 15 || !rep2.is_design || *rep2.lambda != 3)
        c.fail("fig2 did not verify as a (2,1)-design of index 3 with 15 rows");
    if (c.pass) c.detail << "fig1: lambda=1, 10 rows; fig2: lambda=3, 15 rows";
    return c;
}

// ---- criterion 2: combinatorial verifier == exact spectral check ----------

Check c2_equivalence(bool quick) {
    Check c;
    const std::vector<std::array<int, 3>> settings =
        quick ? std::vector<std::array<int, 3>>{{4, 2, 3}}
              : std::vector<std::array<int, 3>>{{4, 2, 3}, {5, 3, 3}, {4, 2, 4}, {5, 3, 4}};
    const int per_pair = quick ? 20 : 200;
    long long instances = 0;
    for (const auto& [n, w, q] : settings) {
        const auto params = SchemeParams::make(n, w, q);
        const auto vertices = enumerate_vertices(params);
        std::mt19937 rng(static_cast<unsigned>(97 * n + 31 * w + q));
        for (IndexPair rs : params.L) {
            if (rs == IndexPair{0, 0} || rs.i > params.m) continue;
            std::vector<DesignArray> pool;
            pool.push_back(DesignArray{params, {}});
            pool.push_back(DesignArray{params, vertices});
            if (n == 5 && w == 3 && q == 4) pool.push_back(fixture("fig1"));
            for (int t = 0; t < per_pair; ++t) {
                const double density = t % 3 == 0 ? 0.5 : (t % 3 == 1 ? 0.1 : 0.9);
                std::bernoulli_distribution take(density);
                std::vector<std::size_t> picks;
                for (std::size_t v = 0; v < vertices.size(); ++v)
                    if (take(rng)) picks.push_back(v);
                pool.push_back(subset_design(params, vertices, picks));
            }
            for (const auto& y : pool) {
                const bool combinatorial = verify_rs_design(y, rs.i, rs.j).is_design;
                const bool spectral = tdesign_spectral_check(y, rs.i, rs.j);
                ++instances;
                if (combinatorial != spectral) {
                    c.fail("disagreement at (" + std::to_string(n) + "," +
                           std::to_string(w) + "," + std::to_string(q) + ") " +
                           to_string(rs) + " |Y|=" + std::to_string(y.size()));
                    return c;
                }
            }
        }
    }
    c.detail << instances << " instances, 0 disagreements";
    return c;
}

// ---- criterion 3: component sets of C_{rs} --------------------------------

Check c3_components() {
    Check c;
    const auto params = SchemeParams::make(4, 2, 3);
    const auto idem = numeric_idempotents(params);
    for (IndexPair rs : params.L) {
        std::vector<IndexPair> expected;
        for (IndexPair ij : params.L)
            if (ij.j == rs.j && ij.i <= rs.i) expected.push_back(ij);
        const auto got = components_of_C(params, rs.i, rs.j, idem);
        if (got != expected)
            c.fail("component set of C_" + to_string(rs) + " differs");
    }
    if (c.pass)
        c.detail << "all " << params.L.size()
                 << " component sets match {(i,s) : s <= i <= r}";
    return c;
}

// ---- criterion 4: index identities on every repository design -------------

struct NamedDesign {
    std::string name;
    DesignArray design;
    int r, s;
};

std::vector<NamedDesign> repository_designs(bool quick) {
    std::vector<NamedDesign> out;
    out.push_back({"fig1", fixture("fig1"), 2, 1});
    out.push_back({"fig2", fixture("fig2"), 2, 1});
    if (quick) return out;
    out.push_back({"sts7*oa(3,4)", construction_a(sts(7), trivial_oa(3, 4)), 2, 1});
    out.push_back({"sts9*oa(3,3)", construction_a(sts(9), trivial_oa(3, 3)), 2, 1});
    const auto p423 = SchemeParams::make(4, 2, 3);
    out.push_back({"full(4,2,3,s=1)", full_design(p423, 1), 2, 1});
    const auto p433 = SchemeParams::make(4, 3, 3);
    out.push_back({"X(4,3,3)", DesignArray{p433, enumerate_vertices(p433)}, 2, 1});
    out.push_back({"X(4,2,3)", DesignArray{p423, enumerate_vertices(p423)}, 2, 1});
    return out;
}

Check c4_identities(bool quick) {
    Check c;
    long long avoid_checks = 0, derived_checks = 0, derived_skips = 0;
    for (const auto& entry : repository_designs(quick)) {
        const auto& y = entry.design;
        const auto& p = y.params;
        const int r = entry.r, s = entry.s;
        const auto rep = verify_rs_design(y, r, s);
        if (!rep.is_design) {
            c.fail(entry.name + " failed to verify");
            continue;
        }
        const long long lambda = *rep.lambda;
        if (cardinality_formula(p, r, s, Rat(static_cast<long>(lambda))) != Rat(static_cast<long>(y.size()))) {
            c.fail(entry.name + ": cardinality formula mismatch");
            continue;
        }
        try {
            lambda_table(y, r, s, lambda);
        } catch (const std::exception& e) {
            c.fail(entry.name + ": lambda table: " + e.what());
            continue;
        }
        // avoidance counts over all admissible (R',S',omega',T)
        try {
            for (int rp = 0; rp <= r; ++rp)
                for (int sp = 0; sp <= std::min(s, rp); ++sp)
                    for (int t = 0; t <= r - rp; ++t)
                        for_each_combination(p.n, rp, [&](const std::vector<int>& Rp) {
                            for_each_combination(rp, sp, [&](const std::vector<int>& ssel) {
                                std::vector<int> Sp;
                                for (int pos : ssel) Sp.push_back(Rp[static_cast<std::size_t>(pos)]);
                                std::vector<int> rest;
                                for (int v = 0; v < p.n; ++v)
                                    if (!std::binary_search(Rp.begin(), Rp.end(), v))
                                        rest.push_back(v);
                                std::vector<int> omega(static_cast<std::size_t>(sp), 1);
                                while (true) {
                                    for_each_combination(static_cast<int>(rest.size()), t,
                                                         [&](const std::vector<int>& tsel) {
                                        std::vector<int> T;
                                        for (int pos : tsel)
                                            T.push_back(rest[static_cast<std::size_t>(pos)]);
                                        avoidance_count(y, r, s, lambda, Rp, Sp, omega, T);
                                        ++avoid_checks;
                                    });
                                    std::size_t pos = 0;
                                    while (pos < omega.size() && omega[pos] == p.q - 1)
                                        omega[pos++] = 1;
                                    if (pos == omega.size()) break;
                                    ++omega[pos];
                                }
                            });
                        });
        } catch (const std::exception& e) {
            c.fail(entry.name + ": avoidance: " + e.what());
            continue;
        }
        // derived designs re-verify with the same index
        try {
            for (int rp = 0; rp <= r && p.w - rp >= 1; ++rp)
                for (int sp = 0; sp <= std::min(s, rp); ++sp) {
                    if (s - sp > r - rp) continue; // derived parameters need s'' <= r''
                    for_each_combination(p.n, rp, [&](const std::vector<int>& Rp) {
                        for_each_combination(rp, sp, [&](const std::vector<int>& ssel) {
                            std::vector<int> Sp;
                            for (int pos : ssel) Sp.push_back(Rp[static_cast<std::size_t>(pos)]);
                            std::vector<int> omega(static_cast<std::size_t>(sp), 1);
                            while (true) {
                                try {
                                    const auto derived = derived_design(y, Rp, Sp, omega);
                                    const auto drep =
                                        verify_rs_design(derived, r - rp, s - sp);
                                    if (!drep.is_design || *drep.lambda != lambda)
                                        throw consistency_error(
                                            "derived design has a different index");
                                    ++derived_checks;
                                } catch (const duplicate_row_error&) {
                                    // restriction collapses rows: a multiset
                                    // case, outside the duplicate-free scope
                                    ++derived_skips;
                                }
                                std::size_t pos = 0;
                                while (pos < omega.size() && omega[pos] == p.q - 1)
                                    omega[pos++] = 1;
                                if (pos == omega.size()) break;
                                ++omega[pos];
                            }
                        });
                    });
                }
        } catch (const std::exception& e) {
            c.fail(entry.name + ": derived: " + e.what());
            continue;
        }
        // reduction to r = w where the hypothesis holds, guard elsewhere
        if (r - s >= p.n - p.w) {
            try {
                reduce_to_w(y, r, s, lambda);
            } catch (const std::exception& e) {
                c.fail(entry.name + ": reduction: " + e.what());
            }
        } else {
            bool refused = false;
            try {
                reduce_to_w(y, r, s, lambda);
            } catch (const std::invalid_argument&) {
                refused = true;
            }
            if (!refused) c.fail(entry.name + ": reduction guard did not trigger");
        }
    }
    if (c.pass)
        c.detail << avoid_checks << " avoidance counts, " << derived_checks
                 << " derived designs (" << derived_skips
                 << " multiset restrictions skipped), all exact";
    return c;
}

// ---- criterion 5: multiplicities, eigenmatrix, Krein numbers --------------

Check c5_tables(bool quick) {
    Check c;
    const int nmax = quick ? 5 : 7;
    for (int n = 1; n <= nmax; ++n)
        for (int q = 2; q <= 5; ++q)
            for (int w = 1; w <= n; ++w) {
                const auto params = SchemeParams::make(n, w, q);
                Int total = 0;
                for (IndexPair ij : params.L) {
                    const Int mult = multiplicity(params, ij);
                    total += mult;
                    if (eigenmatrix_Q(params, ij, {0, 0}) != Rat(mult)) {
                        c.fail("Q_{i,j}(0,0) != multiplicity at (" + std::to_string(n) +
                               "," + std::to_string(w) + "," + std::to_string(q) + ") " +
                               to_string(ij));
                        return c;
                    }
                }
                if (total != params.vertex_count()) {
                    c.fail("multiplicity sum mismatch at (" + std::to_string(n) + "," +
                           std::to_string(w) + "," + std::to_string(q) + ")");
                    return c;
                }
            }

    std::vector<std::array<int, 3>> krein_settings{{3, 1, 3}};
    if (!quick) krein_settings.push_back({4, 2, 3});
    for (const auto& [n, w, q] : krein_settings) {
        const auto params = SchemeParams::make(n, w, q);
        for (IndexPair a : params.L)
            for (IndexPair b : params.L) {
                const auto table = krein_table(params, a, b);
                for (std::size_t t = 0; t < params.L.size(); ++t) {
                    const IndexPair rs = params.L[t];
                    if (table[t] < 0)
                        c.fail("negative Krein number q_{" + to_string(a) + "," +
                               to_string(b) + "}^" + to_string(rs));
                    if ((a.i + b.i < rs.i || a.j + b.j < rs.j) && table[t] != 0)
                        c.fail("Krein number missing the degree vanishing at " +
                               to_string(rs));
                    if (rs == IndexPair{0, 0}) {
                        const Rat expected =
                            a == b ? Rat(multiplicity(params, a)) : Rat(0);
                        if (table[t] != expected)
                            c.fail("q^{00} != delta * multiplicity at " + to_string(a) +
                                   "," + to_string(b));
                    }
                }
            }
    }

    const auto p423 = SchemeParams::make(4, 2, 3);
    const auto idem = numeric_idempotents(p423);
    for (std::size_t t = 0; t < p423.L.size(); ++t)
        if (Int(idem.ranks[t]) != multiplicity(p423, p423.L[t]))
            c.fail("numeric rank differs from multiplicity at " + to_string(p423.L[t]));
    if (c.pass)
        c.detail << "multiplicity sums for n <= " << nmax
                 << ", q <= 5; Krein tables nonnegative with degree vanishing; "
                    "ranks match at (4,2,3)";
    return c;
}

// ---- criterion 6: bounds --------------------------------------------------

Check c6_bounds(bool quick) {
    Check c;
    const auto p534 = SchemeParams::make(5, 3, 4);
    if (fisher_bound(p534, 2, 1) != 5) c.fail("fisher_bound(5,3,4;2,1) != 5");
    if (natural_bound(p534, 2, 1) != 10) c.fail("natural_bound(5,3,4;2,1) != 10");
    if (Rat(static_cast<long>(fixture("fig1").size())) != natural_bound(p534, 2, 1))
        c.fail("fig1 does not attain the natural bound");
    const auto p734 = SchemeParams::make(7, 3, 4);
    if (fisher_bound_odd(p734, 3, 2) != 42) c.fail("fisher_bound_odd(7,3,4;3,2) != 42");
    if (fisher_bound_odd(p734, 3, 3) != 126) c.fail("fisher_bound_odd(7,3,4;3,3) != 126");
    for (const auto& entry : repository_designs(quick)) {
        const auto rep = verify_minimality(entry.design, entry.r, entry.s);
        if (!rep.is_design || !rep.meets_natural || !rep.meets_fisher)
            c.fail(entry.name + " violates a lower bound");
        if (rep.fisher_odd && Rat(static_cast<long>(rep.size)) < *rep.fisher_odd)
            c.fail(entry.name + " violates the odd-r bound");
    }
    if (c.pass) c.detail << "all exact values match; no design violates a bound";
    return c;
}

// ---- criterion 7: Construction A families ---------------------------------

Check c7_construction() {
    Check c;
    const auto d1 = construction_a(sts(7), trivial_oa(3, 4));
    const auto r1 = verify_rs_design(d1, 2, 1);
    if (d1.size() != 21 || !r1.is_design || *r1.lambda != 1)
        c.fail("sts(7) x trivial OA is not a 21-row (2,1)-design of index 1");
    const auto d2 = construction_a(sts(9), trivial_oa(3, 3));
    const auto r2 = verify_rs_design(d2, 2, 1);
    if (d2.size() != 24 || !r2.is_design || *r2.lambda != 1)
        c.fail("sts(9) x trivial OA is not a 24-row (2,1)-design of index 1");
    for (int q : {4, 5}) {
        const auto oa = mols_oa(q);
        const auto check = oa_verify(oa.factors, oa.qminus1, oa.strength, oa.rows);
        if (!check.lambda || *check.lambda != 1)
            c.fail("mols_oa(" + std::to_string(q) + ") has index != 1");
    }
    if (c.pass) c.detail << "21-row and 24-row designs verified; OA(9,4,3,2) and OA(16,4,4,2) have index 1";
    return c;
}

// ---- criterion 8: exact-cover search --------------------------------------

Check c8_search(bool quick) {
    Check c;
    if (!quick) {
        const auto big = exact_cover_search(SchemeParams::make(5, 3, 4), 2, 1, 10'000'000);
        if (big.status != SearchStatus::found || big.solution->size() != 10)
            c.fail("no 10-row solution found at (5,3,4,2,1)");
        else {
            const auto rep = verify_rs_design(*big.solution, 2, 1);
            if (!rep.is_design || *rep.lambda != 1)
                c.fail("search solution at (5,3,4,2,1) failed the verifier");
        }
    }
    const auto params = SchemeParams::make(3, 2, 3);
    const auto small = exact_cover_search(params, 2, 1, 10'000'000);
    const long long count = brute_force_count(params, 2, 1);
    if (small.status == SearchStatus::budget_exceeded)
        c.fail("(3,2,3,2,1) search ran out of budget");
    else if ((small.status == SearchStatus::found) != (count > 0))
        c.fail("searcher and brute-force oracle disagree on existence at (3,2,3,2,1)");
    else if (small.status == SearchStatus::found && small.solution->size() != 6)
        c.fail("(3,2,3,2,1) solution does not have 6 rows");
    if (c.pass) {
        c.detail << "(3,2,3,2,1): " << count << " minimal designs, search agrees";
        if (!quick) c.detail << "; (5,3,4,2,1): 10-row solution verified";
    }
    return c;
}

// ---- criterion 9: q = 2 and w = n specializations -------------------------

void bridge_subsets(std::size_t xsize, bool quick, unsigned seed,
                    const std::function<void(const std::vector<std::size_t>&)>& fn) {
    const std::size_t exhaustive_limit = quick ? 12 : 16;
    if (xsize <= exhaustive_limit) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << xsize); ++mask) {
            std::vector<std::size_t> picks;
            for (std::size_t v = 0; v < xsize; ++v)
                if (mask & (std::size_t{1} << v)) picks.push_back(v);
            fn(picks);
        }
        return;
    }
    // beyond exhaustible size: the empty set, the full set, and a dense
    // seeded random sample
    std::vector<std::size_t> all(xsize);
    for (std::size_t v = 0; v < xsize; ++v) all[v] = v;
    fn({});
    fn(all);
    std::mt19937 rng(seed);
    const int samples = quick ? 200 : 3000;
    for (int t = 0; t < samples; ++t) {
        const double density = t % 3 == 0 ? 0.5 : (t % 3 == 1 ? 0.15 : 0.85);
        std::bernoulli_distribution take(density);
        std::vector<std::size_t> picks;
        for (std::size_t v = 0; v < xsize; ++v)
            if (take(rng)) picks.push_back(v);
        fn(picks);
    }
}

Check c9_bridges(bool quick) {
    Check c;
    long long checks = 0;
    // q = 2: the verifier must accept exactly the support families that are
    // r-(n,w,lambda) block designs, for every s <= r
    for (int n = 2; n <= (quick ? 4 : 6) && c.pass; ++n)
        for (int w = 1; w <= n && c.pass; ++w) {
            const auto params = SchemeParams::make(n, w, 2);
            const auto vertices = enumerate_vertices(params);
            bridge_subsets(vertices.size(), quick,
                           static_cast<unsigned>(5000 + 10 * n + w),
                           [&](const std::vector<std::size_t>& picks) {
                if (!c.pass) return;
                const auto y = subset_design(params, vertices, picks);
                std::vector<std::vector<int>> blocks;
                for (const Word& row : y.rows) blocks.push_back(support(row));
                for (int r = 1; r <= w && c.pass; ++r) {
                    const auto bd = block_design_verify(n, w, r, blocks);
                    for (int s = 0; s <= r; ++s) {
                        const auto rep = verify_rs_design(y, r, s);
                        ++checks;
                        if (rep.is_design != bd.lambda.has_value() ||
                            (rep.is_design && *rep.lambda != *bd.lambda)) {
                            c.fail("q=2 bridge disagreement at n=" + std::to_string(n) +
                                   " w=" + std::to_string(w) + " r=" + std::to_string(r) +
                                   " s=" + std::to_string(s) +
                                   " |Y|=" + std::to_string(y.size()));
                            return;
                        }
                    }
                }
            });
        }
    // w = n: the verifier must accept exactly the orthogonal arrays of
    // strength s, regardless of r
    for (int n = 1; n <= (quick ? 3 : 4) && c.pass; ++n)
        for (int q = 2; q <= 4 && c.pass; ++q) {
            const auto params = SchemeParams::make(n, n, q);
            const auto vertices = enumerate_vertices(params);
            bridge_subsets(vertices.size(), quick,
                           static_cast<unsigned>(7000 + 10 * n + q),
                           [&](const std::vector<std::size_t>& picks) {
                if (!c.pass) return;
                const auto y = subset_design(params, vertices, picks);
                std::vector<std::vector<int>> rows;
                for (const Word& row : y.rows) {
                    std::vector<int> r(row.begin(), row.end());
                    rows.push_back(std::move(r));
                }
                for (int s = 0; s <= n && c.pass; ++s) {
                    const auto oa = oa_verify(n, q - 1, s, rows);
                    for (int r : {s, n}) {
                        const auto rep = verify_rs_design(y, r, s);
                        ++checks;
                        if (rep.is_design != oa.lambda.has_value() ||
                            (rep.is_design && *rep.lambda != *oa.lambda)) {
                            c.fail("w=n bridge disagreement at n=" + std::to_string(n) +
                                   " q=" + std::to_string(q) + " r=" + std::to_string(r) +
                                   " s=" + std::to_string(s));
                            return;
                        }
                        if (r == n && s == n) break; // r choices coincide
                    }
                }
            });
        }
    if (c.pass) c.detail << checks << " comparisons, 0 disagreements";
    return c;
}

} // namespace

std::vector<CriterionResult> run_acceptance(bool quick) {
    using Clock = std::chrono::steady_clock;
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"1 example fixtures", [] { return c1_fixtures(); }},
        {"2 verifier/spectral equivalence", [quick] { return c2_equivalence(quick); }},
        {"3 C_{rs} component sets", [] { return c3_components(); }},
        {"4 index identity sweep", [quick] { return c4_identities(quick); }},
        {"5 multiplicity/eigenmatrix/Krein tables", [quick] { return c5_tables(quick); }},
        {"6 lower bounds", [quick] { return c6_bounds(quick); }},
        {"7 Construction A families", [] { return c7_construction(); }},
        {"8 exact-cover search", [quick] { return c8_search(quick); }},
        {"9 specialization bridges", [quick] { return c9_bridges(quick); }},
    };
    std::vector<CriterionResult> results;
    for (const auto& [name, fn] : criteria) {
        CriterionResult res;
        res.name = name;
        const auto start = Clock::now();
        try {
            Check c = fn();
            res.pass = c.pass;
            res.detail = c.detail.str();
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        results.push_back(std::move(res));
    }
    return results;
}

} // namespace rsd

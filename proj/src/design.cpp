#include "rsd/design.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rsd/combinat.hpp"
#include "rsd/errors.hpp"

namespace rsd {

DesignArray make_design(SchemeParams params, std::vector<Word> rows) {
    std::set<Word> seen;
    for (const Word& row : rows) {
        if (static_cast<int>(row.size()) != params.n)
            throw std::invalid_argument("design row has wrong length");
        for (Symbol v : row)
            if (v >= params.q)
                throw std::invalid_argument("design row has a symbol out of range");
        if (hamming_weight(row) != params.w)
            throw std::invalid_argument("design row has wrong weight");
        if (!seen.insert(row).second)
            throw duplicate_row_error("duplicate design row");
    }
    return DesignArray{std::move(params), std::move(rows)};
}

namespace {

void check_coordinate_set(const std::vector<int>& c, int n, const char* what) {
    int prev = -1;
    for (int v : c) {
        if (v < 0 || v >= n)
            throw std::invalid_argument(std::string(what) + ": coordinate out of range");
        if (v <= prev)
            throw std::invalid_argument(std::string(what) +
                                        ": coordinates must be strictly increasing");
        prev = v;
    }
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

long long count_mRS(const DesignArray& y, const std::vector<int>& R,
                    const std::vector<int>& S, const std::vector<int>& omega) {
    const int n = y.params.n, q = y.params.q;
    check_coordinate_set(R, n, "count_mRS R");
    check_coordinate_set(S, n, "count_mRS S");
    if (!subset_of(S, R)) throw std::invalid_argument("count_mRS: S must be inside R");
    if (S.size() != omega.size())
        throw std::invalid_argument("count_mRS: |omega| != |S|");
    for (int v : omega)
        if (v < 1 || v >= q) throw std::invalid_argument("count_mRS: omega out of range");
    long long count = 0;
    for (const Word& row : y.rows) {
        bool ok = true;
        for (int c : R)
            if (row[static_cast<std::size_t>(c)] == 0) { ok = false; break; }
        if (!ok) continue;
        for (std::size_t u = 0; u < S.size(); ++u)
            if (row[static_cast<std::size_t>(S[u])] != omega[u]) { ok = false; break; }
        if (ok) ++count;
    }
    return count;
}

VerifyReport verify_rs_design(const DesignArray& y, int r, int s) {
    const int n = y.params.n, w = y.params.w, q = y.params.q;
    if (s < 0 || s > r || r > w)
        throw std::invalid_argument("verify_rs_design: need 0 <= s <= r <= w");

    // Inverted index: lexicographic rank of an r-subset of coordinates ->
    // rows whose support contains it.
    const long long total_r = binom_ll(n, r);
    std::vector<std::vector<std::int32_t>> index(static_cast<std::size_t>(total_r));
    for (std::size_t rowid = 0; rowid < y.rows.size(); ++rowid) {
        const auto supp = support(y.rows[rowid]);
        std::vector<int> sel(static_cast<std::size_t>(r));
        for_each_combination(static_cast<int>(supp.size()), r,
                             [&](const std::vector<int>& c) {
            for (std::size_t u = 0; u < c.size(); ++u)
                sel[u] = supp[static_cast<std::size_t>(c[u])];
            index[static_cast<std::size_t>(combination_rank(sel, n))].push_back(
                static_cast<std::int32_t>(rowid));
        });
    }

    long long tuples = 1;
    for (int u = 0; u < s; ++u) tuples *= q - 1;

    VerifyReport report;
    bool have_lambda = false;
    long long lambda = 0;
    long long rank = 0;
    std::vector<long long> counts(static_cast<std::size_t>(tuples));
    std::vector<int> scoords(static_cast<std::size_t>(s));
    bool failed = false;
    for_each_combination(n, r, [&](const std::vector<int>& R) {
        if (failed) { ++rank; return; }
        const auto& rows = index[static_cast<std::size_t>(rank)];
        ++rank;
        for_each_combination(r, s, [&](const std::vector<int>& ssel) {
            if (failed) return;
            for (std::size_t u = 0; u < ssel.size(); ++u)
                scoords[u] = R[static_cast<std::size_t>(ssel[u])];
            std::fill(counts.begin(), counts.end(), 0);
            for (std::int32_t rowid : rows) {
                const Word& row = y.rows[static_cast<std::size_t>(rowid)];
                long long key = 0;
                for (int c : scoords) key = key * (q - 1) + (row[static_cast<std::size_t>(c)] - 1);
                ++counts[static_cast<std::size_t>(key)];
            }
            for (long long t = 0; t < tuples; ++t) {
                const long long observed = counts[static_cast<std::size_t>(t)];
                if (!have_lambda) {
                    lambda = observed;
                    have_lambda = true;
                    continue;
                }
                if (observed != lambda) {
                    VerifyWitness wit;
                    wit.R = R;
                    wit.S.assign(scoords.begin(), scoords.end());
                    wit.omega.resize(static_cast<std::size_t>(s));
                    long long rem = t;
                    for (int u = s - 1; u >= 0; --u) {
                        wit.omega[static_cast<std::size_t>(u)] =
                            static_cast<int>(rem % (q - 1)) + 1;
                        rem /= q - 1;
                    }
                    wit.observed = observed;
                    wit.expected = lambda;
                    report.witness = std::move(wit);
                    failed = true;
                    return;
                }
            }
        });
    });
    if (failed) {
        report.is_design = false;
        return report;
    }
    report.is_design = true;
    report.lambda = have_lambda ? lambda : 0;
    return report;
}

std::vector<LambdaEntry> lambda_table(const DesignArray& y, int r, int s,
                                      long long lambda) {
    const auto& p = y.params;
    std::vector<LambdaEntry> out;
    for (int r2 = 0; r2 <= r; ++r2) {
        for (int s2 = 0; s2 <= std::min(s, r2); ++s2) {
            Rat value = Rat(ipow(p.q - 1, s - s2)) *
                        rat(binom(p.n - r2, r - r2), binom(p.w - r2, r - r2)) *
                        Rat(static_cast<long>(lambda));
            if (!is_integral(value))
                throw consistency_error("lambda_table: non-integral index at (" +
                                        std::to_string(r2) + "," + std::to_string(s2) +
                                        ")");
            const auto check = verify_rs_design(y, r2, s2);
            if (!check.is_design || Rat(static_cast<long>(*check.lambda)) != value)
                throw consistency_error("lambda_table: direct count disagrees at (" +
                                        std::to_string(r2) + "," + std::to_string(s2) +
                                        ")");
            out.push_back({r2, s2, value});
        }
    }
    return out;
}

Rat cardinality_formula(const SchemeParams& params, int r, int s, const Rat& lambda) {
    if (s < 0 || s > r || r > params.w)
        throw std::invalid_argument("cardinality_formula: need 0 <= s <= r <= w");
    return Rat(ipow(params.q - 1, s)) * rat(binom(params.n, r), binom(params.w, r)) *
           lambda;
}

DesignArray derived_design(const DesignArray& y, const std::vector<int>& Rp,
                           const std::vector<int>& Sp, const std::vector<int>& omega) {
    const auto& p = y.params;
    check_coordinate_set(Rp, p.n, "derived_design R'");
    check_coordinate_set(Sp, p.n, "derived_design S'");
    if (!subset_of(Sp, Rp))
        throw std::invalid_argument("derived_design: S' must be inside R'");
    if (Sp.size() != omega.size())
        throw std::invalid_argument("derived_design: |omega| != |S'|");
    const int rp = static_cast<int>(Rp.size());
    if (p.w - rp < 1)
        throw std::invalid_argument("derived_design: |R'| must be below w");

    std::vector<bool> drop(static_cast<std::size_t>(p.n), false);
    for (int c : Rp) drop[static_cast<std::size_t>(c)] = true;
    std::vector<Word> rows;
    for (const Word& row : y.rows) {
        bool ok = true;
        for (int c : Rp)
            if (row[static_cast<std::size_t>(c)] == 0) { ok = false; break; }
        if (!ok) continue;
        for (std::size_t u = 0; u < Sp.size(); ++u)
            if (row[static_cast<std::size_t>(Sp[u])] != omega[u]) { ok = false; break; }
        if (!ok) continue;
        Word rest;
        rest.reserve(static_cast<std::size_t>(p.n - rp));
        for (int c = 0; c < p.n; ++c)
            if (!drop[static_cast<std::size_t>(c)]) rest.push_back(row[static_cast<std::size_t>(c)]);
        rows.push_back(std::move(rest));
    }
    return make_design(SchemeParams::make(p.n - rp, p.w - rp, p.q), std::move(rows));
}

AvoidanceResult avoidance_count(const DesignArray& y, int r, int s, long long lambda,
                                const std::vector<int>& Rp, const std::vector<int>& Sp,
                                const std::vector<int>& omega, const std::vector<int>& T) {
    const auto& p = y.params;
    check_coordinate_set(Rp, p.n, "avoidance_count R'");
    check_coordinate_set(Sp, p.n, "avoidance_count S'");
    check_coordinate_set(T, p.n, "avoidance_count T");
    if (!subset_of(Sp, Rp))
        throw std::invalid_argument("avoidance_count: S' must be inside R'");
    if (Sp.size() != omega.size())
        throw std::invalid_argument("avoidance_count: |omega| != |S'|");
    const int rp = static_cast<int>(Rp.size());
    const int sp = static_cast<int>(Sp.size());
    const int t = static_cast<int>(T.size());
    if (sp > s || rp > r || sp > rp || t > r - rp)
        throw std::invalid_argument("avoidance_count: index preconditions violated");
    for (int c : T)
        if (std::binary_search(Rp.begin(), Rp.end(), c))
            throw std::invalid_argument("avoidance_count: T must avoid R'");

    long long count = 0;
    for (const Word& row : y.rows) {
        bool ok = true;
        for (int c : Rp)
            if (row[static_cast<std::size_t>(c)] == 0) { ok = false; break; }
        if (ok)
            for (std::size_t u = 0; u < Sp.size(); ++u)
                if (row[static_cast<std::size_t>(Sp[u])] != omega[u]) { ok = false; break; }
        if (ok)
            for (int c : T)
                if (row[static_cast<std::size_t>(c)] != 0) { ok = false; break; }
        if (ok) ++count;
    }
    AvoidanceResult res;
    res.count = count;
    res.expected = Rat(ipow(p.q - 1, s - sp)) *
                   rat(binom(p.n - rp - t, p.w - rp), binom(p.n - r, p.w - r)) *
                   Rat(static_cast<long>(lambda));
    if (Rat(static_cast<long>(count)) != res.expected)
        throw consistency_error("avoidance_count: observed " + std::to_string(count) +
                                " does not match the predicted value");
    return res;
}

ReductionResult reduce_to_w(const DesignArray& y, int r, int s, long long lambda) {
    const auto& p = y.params;
    if (r - s < p.n - p.w)
        throw std::invalid_argument("reduce_to_w: requires r - s >= n - w");
    const Int denom = binom(p.n - r, p.w - r);
    Int lp;
    try {
        lp = exact_div(Int(static_cast<long>(lambda)), denom);
    } catch (const std::domain_error&) {
        throw consistency_error("reduce_to_w: lambda not divisible by C(n-r,w-r)");
    }
    const long long lambda_prime = lp.get_si();
    const auto check = verify_rs_design(y, p.w, s);
    if (!check.is_design || *check.lambda != lambda_prime)
        throw consistency_error("reduce_to_w: verification at (w,s) disagrees");
    return {p.w, s, lambda_prime};
}

std::vector<IndexPair> make_index_set_T(const SchemeParams& params, int r, int s) {
    params.require_in_L({r, s}, "make_index_set_T");
    std::vector<IndexPair> t;
    for (IndexPair ij : params.L)
        if (ij.i <= r && ij.j <= s && !(ij.i == 0 && ij.j == 0)) t.push_back(ij);
    return t;
}

bool tdesign_spectral_check(const DesignArray& y, int r, int s) {
    const auto& p = y.params;
    p.require_in_L({r, s}, "tdesign_spectral_check");
    if (r == 0 && s == 0)
        throw std::invalid_argument("tdesign_spectral_check: (0,0) excluded");
    if (r > p.m)
        throw spectral_domain_error(
            "tdesign_spectral_check: r exceeds min(w, n-w); when r-s >= n-w the "
            "design is equivalent to a (w,s)-design, so verify with r = w instead");

    if (p.n > 64)
        throw size_cap_error("tdesign_spectral_check: n > 64 unsupported");
    const int qm1 = p.q - 1;
    const Int x_size = p.vertex_count();
    const Int y_size = static_cast<long>(y.rows.size());

    // Support masks and value tables for the scan over Y.
    const std::size_t nrows = y.rows.size();
    std::vector<std::uint64_t> masks(nrows, 0);
    for (std::size_t t = 0; t < nrows; ++t)
        for (int c = 0; c < p.n; ++c)
            if (y.rows[t][static_cast<std::size_t>(c)] != 0)
                masks[t] |= std::uint64_t{1} << c;

    std::vector<long long> acc(static_cast<std::size_t>(qm1));
    for (int s2 = 0; s2 <= s; ++s2) {
        const Int rhs_value =
            s2 == 0 ? Int(y_size * ipow(qm1, p.w) * binom(p.n - r, p.w - r)) : Int(0);
        for (const Word& a : enumerate_Wrs(p, r, s2)) {
            std::uint64_t amask = 0;
            std::vector<std::pair<int, int>> high; // (coordinate, a_i - 1) for a_i >= 2
            for (int c = 0; c < p.n; ++c) {
                const Symbol v = a[static_cast<std::size_t>(c)];
                if (v != 0) amask |= std::uint64_t{1} << c;
                if (v > 1) high.emplace_back(c, v - 1);
            }
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t t = 0; t < nrows; ++t) {
                if ((amask & ~masks[t]) != 0) continue;
                long e = 0;
                for (auto [c, f] : high)
                    e += static_cast<long>(f) * (y.rows[t][static_cast<std::size_t>(c)] - 1);
                ++acc[static_cast<std::size_t>(e % qm1)];
            }
            // exact test of |X| * sum_Y (a,y) == |Y| * sum_X (a,x)
            CycInt lhs(qm1);
            for (int k = 0; k < qm1; ++k)
                lhs.coeff(static_cast<std::size_t>(k)) =
                    x_size * static_cast<long>(acc[static_cast<std::size_t>(k)]);
            lhs -= CycInt::constant(qm1, rhs_value);
            if (!lhs.is_zero()) return false;
        }
    }
    return true;
}

bool tdesign_idempotent_check(const DesignArray& y, const std::vector<IndexPair>& T,
                              const NumericIdempotentSet& idem) {
    const auto& p = idem.params;
    if (y.params.n != p.n || y.params.w != p.w || y.params.q != p.q)
        throw std::invalid_argument("tdesign_idempotent_check: parameter mismatch");
    const std::size_t nx = idem.vertices.size();
    Eigen::VectorXd phi_y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(nx));
    for (const Word& row : y.rows) {
        const auto it = std::lower_bound(idem.vertices.begin(), idem.vertices.end(), row);
        if (it == idem.vertices.end() || *it != row)
            throw consistency_error("tdesign_idempotent_check: row is not a vertex");
        phi_y(static_cast<Eigen::Index>(it - idem.vertices.begin())) = 1.0;
    }
    const double ratio = static_cast<double>(y.rows.size()) / static_cast<double>(nx);
    const Eigen::VectorXd phi_x = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(nx));
    for (IndexPair ij : T) {
        const auto& proj = idem.projectors[p.l_index(ij)];
        const Eigen::VectorXd diff = proj * phi_y - ratio * (proj * phi_x);
        if (diff.lpNorm<Eigen::Infinity>() > 1e-8) return false;
    }
    return true;
}

} // namespace rsd

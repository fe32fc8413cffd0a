#include "rsd/construct.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "rsd/combinat.hpp"
#include "rsd/errors.hpp"

namespace rsd {

BlockDesignCheck block_design_verify(int n, int w, int r,
                                     const std::vector<std::vector<int>>& blocks) {
    if (r < 0 || r > w || w > n)
        throw std::invalid_argument("block_design_verify: need 0 <= r <= w <= n");
    for (const auto& b : blocks) {
        if (static_cast<int>(b.size()) != w)
            throw std::invalid_argument("block_design_verify: malformed block size");
        int prev = -1;
        for (int v : b) {
            if (v < 0 || v >= n || v <= prev)
                throw std::invalid_argument("block_design_verify: malformed block");
            prev = v;
        }
    }
    std::vector<long long> cover(static_cast<std::size_t>(binom_ll(n, r)), 0);
    std::vector<int> sel(static_cast<std::size_t>(r));
    for (const auto& b : blocks) {
        for_each_combination(w, r, [&](const std::vector<int>& c) {
            for (std::size_t u = 0; u < c.size(); ++u) sel[u] = b[static_cast<std::size_t>(c[u])];
            ++cover[static_cast<std::size_t>(combination_rank(sel, n))];
        });
    }
    BlockDesignCheck out;
    const long long lambda = cover.empty() ? 0 : cover[0];
    long long rank = 0;
    for_each_combination(n, r, [&](const std::vector<int>& c) {
        if (out.witness) { ++rank; return; }
        if (cover[static_cast<std::size_t>(rank)] != lambda) out.witness = c;
        ++rank;
    });
    if (!out.witness) out.lambda = lambda;
    return out;
}

OACheck oa_verify(int factors, int qminus1, int strength,
                  const std::vector<std::vector<int>>& rows) {
    if (strength < 0 || strength > factors || qminus1 < 1)
        throw std::invalid_argument("oa_verify: bad parameters");
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != factors)
            throw std::invalid_argument("oa_verify: row of wrong length");
        for (int v : row)
            if (v < 1 || v > qminus1)
                throw std::invalid_argument("oa_verify: symbol out of range");
    }
    long long tuples = 1;
    for (int u = 0; u < strength; ++u) tuples *= qminus1;

    OACheck out;
    std::optional<long long> lambda;
    std::vector<long long> counts(static_cast<std::size_t>(tuples));
    for_each_combination(factors, strength, [&](const std::vector<int>& cols) {
        if (out.witness) return;
        std::fill(counts.begin(), counts.end(), 0);
        for (const auto& row : rows) {
            long long key = 0;
            for (int c : cols) key = key * qminus1 + (row[static_cast<std::size_t>(c)] - 1);
            ++counts[static_cast<std::size_t>(key)];
        }
        for (long long t = 0; t < tuples; ++t) {
            if (!lambda) lambda = counts[static_cast<std::size_t>(t)];
            if (counts[static_cast<std::size_t>(t)] != *lambda) {
                std::vector<int> tuple(static_cast<std::size_t>(strength));
                long long rem = t;
                for (int u = strength - 1; u >= 0; --u) {
                    tuple[static_cast<std::size_t>(u)] = static_cast<int>(rem % qminus1) + 1;
                    rem /= qminus1;
                }
                out.witness = {cols, tuple};
                return;
            }
        }
    });
    if (!out.witness) out.lambda = lambda.value_or(0);
    return out;
}

namespace {

std::vector<std::vector<int>> sts_bose(int t) {
    // points Z_{2t+1} x {0,1,2}, point (x,c) -> x + c*(2t+1)
    const int g = 2 * t + 1;
    std::vector<std::vector<int>> blocks;
    auto pt = [g](int x, int c) { return x + c * g; };
    for (int x = 0; x < g; ++x) blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
    for (int x = 0; x < g; ++x)
        for (int y = x + 1; y < g; ++y) {
            const int z = static_cast<int>((static_cast<long>(x + y) * (t + 1)) % g);
            for (int c = 0; c < 3; ++c) {
                std::vector<int> b{pt(x, c), pt(y, c), pt(z, (c + 1) % 3)};
                std::sort(b.begin(), b.end());
                blocks.push_back(std::move(b));
            }
        }
    return blocks;
}

std::vector<std::vector<int>> sts_skolem(int t) {
    // points (Z_{2t} x {0,1,2}) + {infinity}; half-idempotent commutative
    // quasigroup x*y = f(x+y mod 2t) with f(2a) = a, f(2a+1) = t+a
    const int g = 2 * t;
    const int inf = 3 * g;
    auto pt = [g](int x, int c) { return x + c * g; };
    auto f = [t](int v) { return v % 2 == 0 ? v / 2 : t + (v - 1) / 2; };
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < t; ++i) blocks.push_back({pt(i, 0), pt(i, 1), pt(i, 2)});
    for (int i = 0; i < t; ++i)
        for (int c = 0; c < 3; ++c) {
            std::vector<int> b{inf, pt(t + i, c), pt(i, (c + 1) % 3)};
            std::sort(b.begin(), b.end());
            blocks.push_back(std::move(b));
        }
    for (int x = 0; x < g; ++x)
        for (int y = x + 1; y < g; ++y) {
            const int z = f((x + y) % g);
            for (int c = 0; c < 3; ++c) {
                std::vector<int> b{pt(x, c), pt(y, c), pt(z, (c + 1) % 3)};
                std::sort(b.begin(), b.end());
                blocks.push_back(std::move(b));
            }
        }
    return blocks;
}

// Arithmetic tables for GF(p^k), elements packed as base-p digit vectors.
struct SmallField {
    int v = 0;
    std::vector<int> add, mul; // v*v tables

    int plus(int a, int b) const { return add[static_cast<std::size_t>(a * v + b)]; }
    int times(int a, int b) const { return mul[static_cast<std::size_t>(a * v + b)]; }
};

std::vector<int> unpack(int e, int p, int k) {
    std::vector<int> d(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) {
        d[static_cast<std::size_t>(t)] = e % p;
        e /= p;
    }
    return d;
}

int pack(const std::vector<int>& d, int p) {
    int e = 0;
    for (std::size_t t = d.size(); t-- > 0;) e = e * p + d[t];
    return e;
}

// Remainder of a by b over Z_p; b's leading coefficient must be nonzero.
std::vector<int> polymod_p(std::vector<int> a, const std::vector<int>& b, int p) {
    auto inv_mod = [p](int x) {
        for (int y = 1; y < p; ++y)
            if (x * y % p == 1) return y;
        throw consistency_error("polymod_p: not invertible");
    };
    const std::size_t db = b.size() - 1;
    const int lead_inv = inv_mod(b[db]);
    while (a.size() > db) {
        const int c = a.back() * lead_inv % p;
        if (c != 0) {
            const std::size_t shift = a.size() - b.size();
            for (std::size_t u = 0; u < b.size(); ++u)
                a[shift + u] = ((a[shift + u] - c * b[u]) % p + p) % p;
        }
        a.pop_back();
    }
    return a;
}

bool divisible_p(const std::vector<int>& a, const std::vector<int>& b, int p) {
    auto r = polymod_p(a, b, p);
    for (int c : r)
        if (c != 0) return false;
    return true;
}

SmallField make_field(int v) {
    int p = 2;
    while (v % p != 0) ++p;
    int k = 0, rest = v;
    while (rest > 1) {
        if (rest % p != 0) throw std::invalid_argument("make_field: not a prime power");
        rest /= p;
        ++k;
    }
    // first monic irreducible of degree k over Z_p, by trial division
    // against every monic polynomial of degree 1..k/2
    std::vector<int> irred;
    if (k == 1) {
        irred = {0, 1};
    } else {
        for (int lower = 0; lower < v && irred.empty(); ++lower) {
            std::vector<int> f = unpack(lower, p, k);
            f.push_back(1);
            bool reducible = false;
            for (int d = 1; d <= k / 2 && !reducible; ++d) {
                int count = 1;
                for (int u = 0; u < d; ++u) count *= p;
                for (int cand = 0; cand < count && !reducible; ++cand) {
                    std::vector<int> g = unpack(cand, p, d);
                    g.push_back(1);
                    if (divisible_p(f, g, p)) reducible = true;
                }
            }
            if (!reducible) irred = std::move(f);
        }
        if (irred.empty()) throw consistency_error("make_field: no irreducible found");
    }

    SmallField field;
    field.v = v;
    field.add.resize(static_cast<std::size_t>(v) * v);
    field.mul.resize(static_cast<std::size_t>(v) * v);
    for (int a = 0; a < v; ++a) {
        const auto da = unpack(a, p, k);
        for (int b = 0; b < v; ++b) {
            const auto db = unpack(b, p, k);
            std::vector<int> sum(static_cast<std::size_t>(k));
            for (int t = 0; t < k; ++t)
                sum[static_cast<std::size_t>(t)] =
                    (da[static_cast<std::size_t>(t)] + db[static_cast<std::size_t>(t)]) % p;
            field.add[static_cast<std::size_t>(a * v + b)] = pack(sum, p);
            std::vector<int> prod(static_cast<std::size_t>(2 * k - 1), 0);
            for (int t = 0; t < k; ++t)
                for (int u = 0; u < k; ++u)
                    prod[static_cast<std::size_t>(t + u)] =
                        (prod[static_cast<std::size_t>(t + u)] +
                         da[static_cast<std::size_t>(t)] * db[static_cast<std::size_t>(u)]) % p;
            auto rem = polymod_p(prod, irred, p);
            rem.resize(static_cast<std::size_t>(k), 0);
            field.mul[static_cast<std::size_t>(a * v + b)] = pack(rem, p);
        }
    }
    return field;
}

bool is_prime_power(int v) {
    if (v < 2) return false;
    int p = 2;
    while (v % p != 0) ++p;
    while (v % p == 0) v /= p;
    return v == 1;
}

} // namespace

BlockDesign sts(int n) {
    if (n < 3 || (n % 6 != 1 && n % 6 != 3))
        throw std::invalid_argument("sts: n must be 1 or 3 (mod 6), n >= 3");
    std::vector<std::vector<int>> blocks =
        n % 6 == 3 ? sts_bose((n - 3) / 6) : sts_skolem((n - 1) / 6);
    std::sort(blocks.begin(), blocks.end());
    const auto check = block_design_verify(n, 3, 2, blocks);
    if (!check.lambda || *check.lambda != 1)
        throw consistency_error("sts: construction failed verification");
    return BlockDesign{n, 3, 2, 1, std::move(blocks)};
}

OrthoArray trivial_oa(int w, int q) {
    if (q < 2 || w < 1) throw std::invalid_argument("trivial_oa: need q >= 2, w >= 1");
    OrthoArray oa;
    oa.factors = w;
    oa.qminus1 = q - 1;
    oa.strength = 1;
    for (int a = 1; a < q; ++a)
        oa.rows.emplace_back(static_cast<std::size_t>(w), a);
    const auto check = oa_verify(oa.factors, oa.qminus1, oa.strength, oa.rows);
    if (!check.lambda || *check.lambda != 1)
        throw consistency_error("trivial_oa: verification failed");
    oa.lambda2 = 1;
    return oa;
}

OrthoArray mols_oa(int q) {
    const int v = q - 1;
    if (v < 3 || !is_prime_power(v))
        throw std::invalid_argument(
            "mols_oa: q-1 must be a prime power >= 3 (q = 3 and q = 7 are not "
            "covered; supply an array from a file instead)");
    const SmallField field = make_field(v);
    const int g = 2; // any fixed element outside {0,1}
    OrthoArray oa;
    oa.factors = 4;
    oa.qminus1 = v;
    oa.strength = 2;
    for (int x = 0; x < v; ++x)
        for (int y = 0; y < v; ++y)
            oa.rows.push_back({x + 1, y + 1, field.plus(x, y) + 1,
                               field.plus(x, field.times(g, y)) + 1});
    const auto check = oa_verify(oa.factors, oa.qminus1, oa.strength, oa.rows);
    if (!check.lambda || *check.lambda != 1)
        throw consistency_error("mols_oa: verification failed");
    oa.lambda2 = 1;
    return oa;
}

DesignArray construction_a(const BlockDesign& bd, const OrthoArray& oa) {
    if (oa.factors != bd.w)
        throw std::invalid_argument("construction_a: OA factor count must equal the block size");
    const int q = oa.qminus1 + 1;
    std::vector<Word> rows;
    rows.reserve(bd.blocks.size() * oa.rows.size());
    for (const auto& block : bd.blocks) {
        for (const auto& oarow : oa.rows) {
            Word word(static_cast<std::size_t>(bd.n), 0);
            for (std::size_t t = 0; t < block.size(); ++t)
                word[static_cast<std::size_t>(block[t])] = static_cast<Symbol>(oarow[t]);
            rows.push_back(std::move(word));
        }
    }
    try {
        return make_design(SchemeParams::make(bd.n, bd.w, q), std::move(rows));
    } catch (const duplicate_row_error&) {
        throw duplicate_row_error("construction_a: ingredients produced duplicate rows");
    }
}

DesignArray full_design(const SchemeParams& params, int s,
                        const std::optional<OrthoArray>& oa_in) {
    if (s < 0 || s > params.w)
        throw std::invalid_argument("full_design: need 0 <= s <= w");
    OrthoArray oa;
    if (oa_in) {
        oa = *oa_in;
        if (oa.factors != params.w || oa.qminus1 != params.q - 1 || oa.strength != s)
            throw std::invalid_argument("full_design: supplied OA does not fit");
        const auto check = oa_verify(oa.factors, oa.qminus1, oa.strength, oa.rows);
        if (!check.lambda || *check.lambda != 1)
            throw std::invalid_argument("full_design: supplied OA is not of index 1");
    } else if (s == 1) {
        oa = trivial_oa(params.w, params.q);
    } else if (s == 2 && params.w == 4) {
        oa = mols_oa(params.q);
    } else {
        throw std::invalid_argument(
            "full_design: no generated OA family for s = " + std::to_string(s) +
            ", w = " + std::to_string(params.w) + "; supply one from a file");
    }
    std::vector<Word> rows;
    for_each_combination(params.n, params.w, [&](const std::vector<int>& supportset) {
        for (const auto& oarow : oa.rows) {
            Word word(static_cast<std::size_t>(params.n), 0);
            for (std::size_t t = 0; t < supportset.size(); ++t)
                word[static_cast<std::size_t>(supportset[t])] = static_cast<Symbol>(oarow[t]);
            rows.push_back(std::move(word));
        }
    });
    return make_design(params, std::move(rows));
}

DesignArray fixture(const std::string& name) {
    if (name == "fig1") {
        const std::vector<Word> rows = {
            {0, 0, 1, 1, 1}, {0, 1, 0, 2, 2}, {0, 2, 2, 0, 3}, {1, 0, 0, 3, 3},
            {2, 0, 3, 0, 2}, {3, 3, 0, 0, 1}, {3, 0, 2, 2, 0}, {2, 2, 0, 1, 0},
            {1, 1, 1, 0, 0}, {0, 3, 3, 3, 0}};
        return make_design(SchemeParams::make(5, 3, 4), rows);
    }
    if (name == "fig2") {
        const std::vector<Word> rows = {
            {0, 0, 1, 1, 1, 1}, {0, 1, 0, 2, 2, 2}, {0, 1, 1, 0, 1, 2},
            {0, 2, 2, 2, 0, 1}, {0, 2, 2, 1, 2, 0}, {1, 0, 0, 1, 1, 1},
            {1, 0, 2, 0, 2, 2}, {2, 0, 2, 2, 0, 2}, {2, 0, 1, 2, 2, 0},
            {2, 2, 0, 0, 2, 1}, {2, 2, 0, 1, 0, 2}, {1, 1, 0, 2, 1, 0},
            {1, 1, 1, 0, 0, 1}, {2, 2, 2, 0, 1, 0}, {1, 1, 1, 1, 0, 0}};
        return make_design(SchemeParams::make(6, 4, 3), rows);
    }
    throw std::invalid_argument("fixture: unknown name " + name);
}

bool is_construction_a_expressible(const DesignArray& y, int r, int s,
                                   long long lambda) {
    if (lambda < 1) throw std::invalid_argument("is_construction_a_expressible: lambda >= 1");
    const auto& p = y.params;
    long long tuple_count = 1;
    for (int u = 0; u < s; ++u) tuple_count *= p.q - 1;

    std::map<std::vector<int>, std::vector<std::vector<int>>> groups;
    for (const Word& row : y.rows) {
        const auto supp = support(row);
        std::vector<int> content;
        content.reserve(supp.size());
        for (int c : supp) content.push_back(row[static_cast<std::size_t>(c)]);
        groups[supp].push_back(std::move(content));
    }

    for (long long l2 = 1; l2 <= lambda; ++l2) {
        if (lambda % l2 != 0) continue;
        const long long l1 = lambda / l2;
        const long long v2 = l2 * tuple_count;
        bool fits = true;
        std::vector<std::vector<int>> reference;
        std::vector<std::vector<int>> blocks;
        for (const auto& [supp, content] : groups) {
            if (static_cast<long long>(content.size()) != v2) { fits = false; break; }
            auto sorted = content;
            std::sort(sorted.begin(), sorted.end());
            if (reference.empty()) reference = sorted;
            else if (sorted != reference) { fits = false; break; }
            blocks.push_back(supp);
        }
        if (!fits || reference.empty()) continue;
        const auto bd = block_design_verify(p.n, p.w, r, blocks);
        if (!bd.lambda || *bd.lambda != l1) continue;
        const auto oa = oa_verify(p.w, p.q - 1, s, reference);
        if (!oa.lambda || *oa.lambda != l2) continue;
        return true;
    }
    return false;
}

} // namespace rsd

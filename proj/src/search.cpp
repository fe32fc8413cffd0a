#include "rsd/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "rsd/combinat.hpp"
#include "rsd/errors.hpp"

namespace rsd {

CoverProblem build_cover_problem(const SchemeParams& params, int r, int s) {
    if (s < 0 || s > r || r > params.w)
        throw std::invalid_argument("build_cover_problem: need 0 <= s <= r <= w");
    CoverProblem p;
    p.params = params;
    p.r = r;
    p.s = s;
    const int n = params.n, q = params.q;
    long long tuples = 1;
    for (int u = 0; u < s; ++u) tuples *= q - 1;
    const long long s_choices = binom_ll(r, s);
    p.constraint_count = binom_ll(n, r) * s_choices * tuples;
    if (p.constraint_count > 2'000'000)
        throw size_cap_error("build_cover_problem: constraint count exceeds cap");
    p.candidates = enumerate_vertices(params);
    p.incidence.reserve(p.candidates.size());
    std::vector<int> rsel(static_cast<std::size_t>(r));
    for (const Word& x : p.candidates) {
        const auto supp = support(x);
        std::vector<long long> ids;
        for_each_combination(static_cast<int>(supp.size()), r,
                             [&](const std::vector<int>& rc) {
            for (std::size_t u = 0; u < rc.size(); ++u)
                rsel[u] = supp[static_cast<std::size_t>(rc[u])];
            const long long rank_r = combination_rank(rsel, n);
            long long rank_s = 0;
            for_each_combination(r, s, [&](const std::vector<int>& sc) {
                long long key = 0;
                for (int pos : sc) {
                    const auto coord = static_cast<std::size_t>(rsel[static_cast<std::size_t>(pos)]);
                    key = key * (q - 1) + (x[coord] - 1);
                }
                ids.push_back((rank_r * s_choices + rank_s) * tuples + key);
                ++rank_s;
            });
        });
        std::sort(ids.begin(), ids.end());
        p.incidence.push_back(std::move(ids));
    }
    return p;
}

namespace {

// Knuth-style dancing links over the cover problem.
struct Dlx {
    // node 0..C-1: column headers; C: root; then incidence nodes
    std::vector<int> left, right, up, down, colof, rowof, colsize;
    int root;
    long long nodes = 0;
    long long budget;
    bool out_of_budget = false;
    std::vector<int> partial;
    std::vector<int> solution;
    bool found = false;

    Dlx(const CoverProblem& p, long long node_budget) : budget(node_budget) {
        const int ncols = static_cast<int>(p.constraint_count);
        root = ncols;
        const std::size_t headers = static_cast<std::size_t>(ncols) + 1;
        std::size_t total = headers;
        for (const auto& inc : p.incidence) total += inc.size();
        left.resize(total);
        right.resize(total);
        up.resize(total);
        down.resize(total);
        colof.resize(total);
        rowof.resize(total, -1);
        colsize.assign(static_cast<std::size_t>(ncols), 0);
        for (int c = 0; c <= ncols; ++c) {
            left[static_cast<std::size_t>(c)] = c == 0 ? ncols : c - 1;
            right[static_cast<std::size_t>(c)] = c == ncols ? 0 : c + 1;
            up[static_cast<std::size_t>(c)] = c;
            down[static_cast<std::size_t>(c)] = c;
            colof[static_cast<std::size_t>(c)] = c;
        }
        int next = static_cast<int>(headers);
        for (std::size_t cand = 0; cand < p.incidence.size(); ++cand) {
            int first = -1;
            for (long long col : p.incidence[cand]) {
                const int node = next++;
                const int c = static_cast<int>(col);
                colof[static_cast<std::size_t>(node)] = c;
                rowof[static_cast<std::size_t>(node)] = static_cast<int>(cand);
                // vertical insert above the header (i.e. at the column tail)
                up[static_cast<std::size_t>(node)] = up[static_cast<std::size_t>(c)];
                down[static_cast<std::size_t>(node)] = c;
                down[static_cast<std::size_t>(up[static_cast<std::size_t>(c)])] = node;
                up[static_cast<std::size_t>(c)] = node;
                ++colsize[static_cast<std::size_t>(c)];
                if (first < 0) {
                    first = node;
                    left[static_cast<std::size_t>(node)] = node;
                    right[static_cast<std::size_t>(node)] = node;
                } else {
                    left[static_cast<std::size_t>(node)] = left[static_cast<std::size_t>(first)];
                    right[static_cast<std::size_t>(node)] = first;
                    right[static_cast<std::size_t>(left[static_cast<std::size_t>(first)])] = node;
                    left[static_cast<std::size_t>(first)] = node;
                }
            }
        }
    }

    void cover(int c) {
        left[static_cast<std::size_t>(right[static_cast<std::size_t>(c)])] = left[static_cast<std::size_t>(c)];
        right[static_cast<std::size_t>(left[static_cast<std::size_t>(c)])] = right[static_cast<std::size_t>(c)];
        for (int i = down[static_cast<std::size_t>(c)]; i != c; i = down[static_cast<std::size_t>(i)])
            for (int j = right[static_cast<std::size_t>(i)]; j != i; j = right[static_cast<std::size_t>(j)]) {
                up[static_cast<std::size_t>(down[static_cast<std::size_t>(j)])] = up[static_cast<std::size_t>(j)];
                down[static_cast<std::size_t>(up[static_cast<std::size_t>(j)])] = down[static_cast<std::size_t>(j)];
                --colsize[static_cast<std::size_t>(colof[static_cast<std::size_t>(j)])];
            }
    }

    void uncover(int c) {
        for (int i = up[static_cast<std::size_t>(c)]; i != c; i = up[static_cast<std::size_t>(i)])
            for (int j = left[static_cast<std::size_t>(i)]; j != i; j = left[static_cast<std::size_t>(j)]) {
                ++colsize[static_cast<std::size_t>(colof[static_cast<std::size_t>(j)])];
                up[static_cast<std::size_t>(down[static_cast<std::size_t>(j)])] = j;
                down[static_cast<std::size_t>(up[static_cast<std::size_t>(j)])] = j;
            }
        left[static_cast<std::size_t>(right[static_cast<std::size_t>(c)])] = c;
        right[static_cast<std::size_t>(left[static_cast<std::size_t>(c)])] = c;
    }

    int choose_column() const {
        int best = -1, best_size = -1;
        for (int c = right[static_cast<std::size_t>(root)]; c != root;
             c = right[static_cast<std::size_t>(c)])
            if (best < 0 || colsize[static_cast<std::size_t>(c)] < best_size) {
                best = c;
                best_size = colsize[static_cast<std::size_t>(c)];
            }
        return best;
    }

    // Selects the row through node i (covering all its other columns).
    void select(int i) {
        partial.push_back(rowof[static_cast<std::size_t>(i)]);
        for (int j = right[static_cast<std::size_t>(i)]; j != i; j = right[static_cast<std::size_t>(j)])
            cover(colof[static_cast<std::size_t>(j)]);
    }

    void deselect(int i) {
        for (int j = left[static_cast<std::size_t>(i)]; j != i; j = left[static_cast<std::size_t>(j)])
            uncover(colof[static_cast<std::size_t>(j)]);
        partial.pop_back();
    }

    bool search() {
        if (right[static_cast<std::size_t>(root)] == root) {
            solution = partial;
            found = true;
            return true;
        }
        const int c = choose_column();
        if (colsize[static_cast<std::size_t>(c)] == 0) return false;
        cover(c);
        for (int i = down[static_cast<std::size_t>(c)]; i != c; i = down[static_cast<std::size_t>(i)]) {
            if (++nodes > budget) {
                out_of_budget = true;
                break;
            }
            select(i);
            if (search()) return true; // structure left as-is once found
            deselect(i);
            if (out_of_budget) break;
        }
        uncover(c);
        return false;
    }
};

DesignArray solution_to_design(const CoverProblem& p, std::vector<int> rows) {
    std::sort(rows.begin(), rows.end());
    std::vector<Word> words;
    words.reserve(rows.size());
    for (int id : rows) words.push_back(p.candidates[static_cast<std::size_t>(id)]);
    DesignArray design = make_design(p.params, std::move(words));
    const auto check = verify_rs_design(design, p.r, p.s);
    if (!check.is_design || *check.lambda != 1)
        throw consistency_error("exact_cover_search: candidate solution failed the verifier");
    return design;
}

} // namespace

SearchResult exact_cover_search(const SchemeParams& params, int r, int s,
                                long long budget, int jobs, bool fix_first_row) {
    const auto start = std::chrono::steady_clock::now();
    const Rat bound = natural_bound(params, r, s);
    if (!is_integral(bound))
        throw std::domain_error(
            "exact_cover_search: the natural bound (q-1)^s C(n,r)/C(w,r) = " +
            bound.get_str() + " is not an integer, so no index-1 design exists");
    if (jobs < 1) throw std::invalid_argument("exact_cover_search: jobs >= 1");
    const CoverProblem problem = build_cover_problem(params, r, s);

    SearchResult result;
    const auto finish = [&](SearchResult res) {
        res.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        return res;
    };
    if (jobs == 1 || fix_first_row) {
        Dlx dlx(problem, budget);
        if (fix_first_row) {
            // normalize: vertex 0 (the smallest weight-w word) is in the
            // solution; its covered constraints get selected up front
            int node = -1;
            for (std::size_t t = 0; t < dlx.rowof.size(); ++t)
                if (dlx.rowof[t] == 0) { node = static_cast<int>(t); break; }
            if (node < 0)
                throw consistency_error("exact_cover_search: missing first candidate");
            dlx.cover(dlx.colof[static_cast<std::size_t>(node)]);
            dlx.nodes = 1;
            dlx.select(node);
        }
        dlx.search();
        result.nodes = dlx.nodes;
        if (dlx.found) {
            result.status = SearchStatus::found;
            result.solution = solution_to_design(problem, dlx.solution);
        } else {
            result.status = dlx.out_of_budget ? SearchStatus::budget_exceeded
                                              : SearchStatus::exhausted;
        }
        return finish(std::move(result));
    }

    // Branch-parallel mode: distribute the candidate choices of the root
    // branching constraint; every subtree runs to its own completion, so
    // the outcome does not depend on thread timing.
    std::vector<int> branch_rows;
    {
        Dlx probe(problem, budget);
        if (probe.right[static_cast<std::size_t>(probe.root)] == probe.root) {
            result.status = SearchStatus::found;
            result.solution = solution_to_design(problem, {});
            return finish(std::move(result));
        }
        const int c = probe.choose_column();
        for (int i = probe.down[static_cast<std::size_t>(c)]; i != c;
             i = probe.down[static_cast<std::size_t>(i)])
            branch_rows.push_back(probe.rowof[static_cast<std::size_t>(i)]);
    }
    struct BranchOutcome {
        bool found = false;
        bool out_of_budget = false;
        long long nodes = 0;
        std::vector<int> solution;
    };
    std::vector<BranchOutcome> outcomes(branch_rows.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t b = cursor.fetch_add(1);
            if (b >= branch_rows.size()) return;
            Dlx dlx(problem, budget);
            const int cand = branch_rows[b];
            const int c = dlx.choose_column();
            dlx.cover(c);
            int node = -1;
            for (int i = dlx.down[static_cast<std::size_t>(c)]; i != c;
                 i = dlx.down[static_cast<std::size_t>(i)])
                if (dlx.rowof[static_cast<std::size_t>(i)] == cand) { node = i; break; }
            if (node < 0)
                throw consistency_error("exact_cover_search: branch candidate vanished");
            dlx.nodes = 1; // the branch selection itself
            dlx.select(node);
            dlx.search();
            outcomes[b] = {dlx.found, dlx.out_of_budget, dlx.nodes, dlx.solution};
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    bool any_budget = false;
    for (std::size_t b = 0; b < outcomes.size(); ++b) {
        result.nodes += outcomes[b].nodes;
        any_budget = any_budget || outcomes[b].out_of_budget;
    }
    for (std::size_t b = 0; b < outcomes.size(); ++b) {
        if (outcomes[b].found) {
            result.status = SearchStatus::found;
            result.solution = solution_to_design(problem, outcomes[b].solution);
            return finish(std::move(result));
        }
    }
    result.status = any_budget ? SearchStatus::budget_exceeded : SearchStatus::exhausted;
    return finish(std::move(result));
}

long long brute_force_count(const SchemeParams& params, int r, int s, bool force) {
    const Int xsize = params.vertex_count();
    if (!force && xsize > 24)
        throw size_cap_error("brute_force_count: |X| > 24 (pass force to override)");
    const Rat bound = natural_bound(params, r, s);
    if (!is_integral(bound)) return 0;
    const long target = bound.get_num().get_si();
    const auto vertices = enumerate_vertices(params);
    if (target < 0 || target > static_cast<long>(vertices.size())) return 0;
    if (!force && binom(static_cast<long>(vertices.size()), target) > 20'000'000)
        throw size_cap_error("brute_force_count: subset space too large");

    long long count = 0;
    for_each_combination(static_cast<int>(vertices.size()), static_cast<int>(target),
                         [&](const std::vector<int>& pick) {
        std::vector<Word> rows;
        rows.reserve(pick.size());
        for (int id : pick) rows.push_back(vertices[static_cast<std::size_t>(id)]);
        const DesignArray y{params, std::move(rows)};
        const auto check = verify_rs_design(y, r, s);
        if (check.is_design && *check.lambda == 1) ++count;
    });
    return count;
}

MinimalityReport verify_minimality(const DesignArray& y, int r, int s) {
    MinimalityReport rep;
    rep.size = static_cast<long long>(y.rows.size());
    rep.natural = natural_bound(y.params, r, s);
    const IndexPair rs{r, s};
    if (y.params.in_L(rs) && !(r == 0 && s == 0)) {
        rep.fisher = fisher_bound(y.params, r, s);
        if (r % 2 == 1 && r <= y.params.m)
            rep.fisher_odd = fisher_bound_odd(y.params, r, s);
    }
    const auto check = verify_rs_design(y, r, s);
    rep.is_design = check.is_design;
    if (!check.is_design) return rep;
    rep.lambda = *check.lambda;
    rep.meets_natural = Rat(static_cast<long>(rep.size)) >= rep.natural;
    rep.meets_fisher = !rep.fisher || Rat(static_cast<long>(rep.size)) >= Rat(*rep.fisher);
    rep.minimal = rep.lambda == 1;
    return rep;
}

} // namespace rsd

// rsdesign: verify, bound, construct and search (r,s)-designs in the
// nonbinary Johnson scheme J_q(w,n).
//
// exit codes: 0 success / design; 1 not a design, search without a
// solution, or an internal check failure; 2 bad input (parse or argument
// errors); 3 spectral precondition violated (r > min(w, n-w)).

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "rsd/bounds.hpp"
#include "rsd/construct.hpp"
#include "rsd/design.hpp"
#include "rsd/errors.hpp"
#include "rsd/io.hpp"
#include "rsd/polynomials.hpp"
#include "rsd/scheme.hpp"
#include "rsd/search.hpp"
#include "rsd/selftest.hpp"

namespace {

using namespace rsd;

std::string format_coords(const std::vector<int>& c) {
    std::string out = "{";
    for (std::size_t u = 0; u < c.size(); ++u)
        out += (u ? "," : "") + std::to_string(c[u] + 1); // 1-based for display
    return out + "}";
}

int cmd_verify(const std::string& path, int r, int s, bool spectral) {
    DesignArray y = read_design_file(path);
    const auto rep = verify_rs_design(y, r, s);
    if (rep.is_design) {
        std::cout << "design: yes\nlambda=" << *rep.lambda << "\n";
    } else {
        const auto& w = *rep.witness;
        std::cout << "design: no\nwitness: R=" << format_coords(w.R)
                  << " S=" << format_coords(w.S) << " omega=(";
        for (std::size_t u = 0; u < w.omega.size(); ++u)
            std::cout << (u ? "," : "") << w.omega[u];
        std::cout << ") observed=" << w.observed << " expected=" << w.expected << "\n";
    }
    if (spectral) {
        const bool spectral_ok = tdesign_spectral_check(y, r, s);
        std::cout << "spectral: " << (spectral_ok ? "design" : "not a design")
                  << (spectral_ok == rep.is_design ? " (agrees)" : " (DISAGREES)") << "\n";
        if (spectral_ok != rep.is_design) return 1; // equivalent checks must agree
    }
    return rep.is_design ? 0 : 1;
}

int cmd_params(int n, int w, int q) {
    const auto params = SchemeParams::make(n, w, q);
    std::cout << "J_" << q << "(" << w << "," << n << "): |X| = "
              << params.vertex_count().get_str() << ", m = " << params.m << "\n";
    std::cout << "L =";
    for (IndexPair ij : params.L) std::cout << ' ' << to_string(ij);
    std::cout << "\nK =";
    for (IndexPair kh : params.K) std::cout << ' ' << to_string(kh);
    std::cout << "\nmultiplicities:\n";
    Int total = 0;
    for (IndexPair ij : params.L) {
        const Int mult = multiplicity(params, ij);
        total += mult;
        std::cout << "  m_" << to_string(ij) << " = " << mult.get_str() << "\n";
    }
    std::cout << "sum = " << total.get_str() << " ("
              << (total == params.vertex_count() ? "matches |X|" : "MISMATCH") << ")\n";
    return total == params.vertex_count() ? 0 : 1;
}

int cmd_bounds(int n, int w, int q, int r, int s, long long size) {
    const auto params = SchemeParams::make(n, w, q);
    const Rat natural = natural_bound(params, r, s);
    std::cout << "natural bound:   " << natural.get_str() << "\n";
    std::optional<Int> fisher;
    if (params.in_L({r, s}) && !(r == 0 && s == 0)) {
        fisher = fisher_bound(params, r, s);
        std::cout << "fisher bound:    " << fisher->get_str() << "\n";
        if (r % 2 == 1 && r <= params.m)
            std::cout << "odd-r bound:     " << fisher_bound_odd(params, r, s).get_str()
                      << "\n";
    }
    if (size >= 0) {
        const bool nat_ok = Rat(static_cast<long>(size)) >= natural;
        std::cout << "|Y| = " << size << " vs natural: " << (nat_ok ? "PASS" : "FAIL");
        if (Rat(static_cast<long>(size)) == natural) std::cout << " (equality)";
        std::cout << "\n";
        if (fisher)
            std::cout << "|Y| = " << size << " vs fisher:  "
                      << (Int(static_cast<long>(size)) >= *fisher ? "PASS" : "FAIL") << "\n";
    }
    return 0;
}

int cmd_construct(const std::string& recipe, int n, int w, int q, int s,
                  const std::string& design_path, const std::string& oa_path,
                  const std::string& output) {
    DesignArray result{SchemeParams::make(1, 1, 2), {}};
    int r_check = 0, s_check = 0;
    if (recipe == "sts-trivial") {
        result = construction_a(sts(n), trivial_oa(3, q));
        r_check = 2;
        s_check = 1;
    } else if (recipe == "file-file") {
        const auto bd_in = read_ingredient_file(design_path);
        const auto oa_in = read_ingredient_file(oa_path);
        if (!std::holds_alternative<BlockDesign>(bd_in))
            throw std::invalid_argument("--design file must hold a block design");
        if (!std::holds_alternative<OrthoArray>(oa_in))
            throw std::invalid_argument("--oa file must hold an orthogonal array");
        const auto& bd = std::get<BlockDesign>(bd_in);
        const auto& oa = std::get<OrthoArray>(oa_in);
        result = construction_a(bd, oa);
        r_check = bd.r;
        s_check = oa.strength;
    } else if (recipe == "full") {
        result = full_design(SchemeParams::make(n, w, q), s);
        r_check = result.params.w;
        s_check = s;
    } else {
        throw std::invalid_argument("unknown recipe '" + recipe +
                                    "' (expected sts-trivial, file-file or full)");
    }
    const auto rep = verify_rs_design(result, r_check, s_check);
    if (!rep.is_design) {
        std::cout << "construction failed re-verification\n";
        return 1;
    }
    std::cout << "constructed " << result.size() << " rows; verified as a ("
              << r_check << "," << s_check << ")-design with lambda=" << *rep.lambda
              << "\n";
    if (!output.empty()) {
        write_design_file(output, result);
        std::cout << "written to " << output << "\n";
    } else {
        write_design(std::cout, result);
    }
    return 0;
}

int cmd_search(int n, int w, int q, int r, int s, long long budget, int jobs,
               const std::string& output) {
    const auto params = SchemeParams::make(n, w, q);
    SearchResult res;
    try {
        res = exact_cover_search(params, r, s, budget, jobs);
    } catch (const std::domain_error& e) {
        std::cout << "refused: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "wall time: " << res.wall_seconds << " s\n";
    switch (res.status) {
    case SearchStatus::found: {
        std::cout << "found a " << res.solution->size()
                  << "-row index-1 design (nodes=" << res.nodes << ")\n";
        if (!output.empty()) {
            write_design_file(output, *res.solution);
            std::cout << "written to " << output << "\n";
        } else {
            write_design(std::cout, *res.solution);
        }
        return 0;
    }
    case SearchStatus::exhausted:
        std::cout << "exhausted: no index-1 design exists (nodes=" << res.nodes << ")\n";
        return 1;
    case SearchStatus::budget_exceeded:
        std::cout << "budget exceeded after " << res.nodes << " nodes\n";
        return 1;
    }
    return 1;
}

int cmd_selftest(bool quick) {
    const auto results = run_acceptance(quick);
    bool all = true;
    std::string first_fail;
    for (const auto& res : results) {
        std::cout << (res.pass ? "PASS" : "FAIL") << "  criterion " << res.name;
        if (!res.detail.empty()) std::cout << ": " << res.detail;
        std::cout << "\n";
        std::cerr << "  [criterion " << res.name << ": " << res.seconds << " s]\n";
        if (!res.pass && first_fail.empty()) first_fail = res.name;
        all = all && res.pass;
    }
    if (!all) {
        std::cout << "FAILED at criterion " << first_fail << "\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"(r,s)-design toolkit for the nonbinary Johnson scheme"};
    app.require_subcommand(1);

    std::string file, recipe, design_path, oa_path, output;
    int n = 0, w = 0, q = 0, r = 0, s = 0, jobs = 1;
    long long size = -1, budget = 10'000'000;
    bool spectral = false, quick = false;

    auto* verify = app.add_subcommand("verify", "verify a design file");
    verify->add_option("file", file, "design file")->required();
    verify->add_option("-r", r, "column count r")->required();
    verify->add_option("-s", s, "prescribed count s")->required();
    verify->add_flag("--spectral", spectral, "also run the exact spectral check");

    auto* params = app.add_subcommand("params", "scheme parameters and multiplicities");
    params->add_option("n", n)->required();
    params->add_option("w", w)->required();
    params->add_option("q", q)->required();

    auto* bounds = app.add_subcommand("bounds", "lower bounds for (r,s)-designs");
    bounds->add_option("n", n)->required();
    bounds->add_option("w", w)->required();
    bounds->add_option("q", q)->required();
    bounds->add_option("r", r)->required();
    bounds->add_option("s", s)->required();
    bounds->add_option("--size", size, "cardinality to check against the bounds");

    auto* construct = app.add_subcommand("construct", "build a design from ingredients");
    construct->add_option("recipe", recipe, "sts-trivial | file-file | full")->required();
    construct->add_option("-n", n, "points / coordinates");
    construct->add_option("-w", w, "weight (full recipe)");
    construct->add_option("-q", q, "alphabet size");
    construct->add_option("-s", s, "orthogonal-array strength (full recipe)");
    construct->add_option("--design", design_path, "block-design ingredient file");
    construct->add_option("--oa", oa_path, "orthogonal-array ingredient file");
    construct->add_option("--output,-o", output, "output path (stdout if omitted)");

    auto* search = app.add_subcommand("search", "exact-cover search for index-1 designs");
    search->add_option("n", n)->required();
    search->add_option("w", w)->required();
    search->add_option("q", q)->required();
    search->add_option("r", r)->required();
    search->add_option("s", s)->required();
    search->add_option("--budget", budget, "node budget (default 1e7)");
    search->add_option("--jobs", jobs, "parallel subtree workers (default 1)");
    search->add_option("--output,-o", output, "output path (stdout if omitted)");

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_flag("--quick", quick, "shrunken sweeps, under ten seconds");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(file, r, s, spectral);
        if (params->parsed()) return cmd_params(n, w, q);
        if (bounds->parsed()) return cmd_bounds(n, w, q, r, s, size);
        if (construct->parsed())
            return cmd_construct(recipe, n, w, q, s, design_path, oa_path, output);
        if (search->parsed()) return cmd_search(n, w, q, r, s, budget, jobs, output);
        if (selftest->parsed()) return cmd_selftest(quick);
    } catch (const rsd::spectral_domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const rsd::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const rsd::duplicate_row_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

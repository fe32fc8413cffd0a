#include "rsd/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rsd/combinat.hpp"
#include "rsd/errors.hpp"
#include "rsd/polynomials.hpp"

namespace rsd {

int hamming_weight(const Word& x) {
    int w = 0;
    for (Symbol s : x) w += (s != 0);
    return w;
}

int mult_weight(const Word& x) {
    int w = 0;
    for (Symbol s : x) w += (s > 1);
    return w;
}

std::vector<int> support(const Word& x) {
    std::vector<int> s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) s.push_back(static_cast<int>(i));
    return s;
}

std::vector<Word> enumerate_vertices(const SchemeParams& params, std::size_t cap) {
    if (params.vertex_count() > static_cast<long>(cap))
        throw size_cap_error("enumerate_vertices: |X| = " +
                             params.vertex_count().get_str() + " exceeds cap " +
                             std::to_string(cap));
    std::vector<Word> out;
    Word cur(static_cast<std::size_t>(params.n), 0);
    // Depth-first over coordinates with ascending symbol values gives
    // lexicographic output order.
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (params.n - pos < left) return;
        if (pos == params.n) {
            out.push_back(cur);
            return;
        }
        cur[static_cast<std::size_t>(pos)] = 0;
        self(self, pos + 1, left);
        if (left > 0)
            for (int v = 1; v < params.q; ++v) {
                cur[static_cast<std::size_t>(pos)] = static_cast<Symbol>(v);
                self(self, pos + 1, left - 1);
            }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, params.w);
    return out;
}

IndexPair relation(const Word& x, const Word& y) {
    if (x.size() != y.size()) throw std::invalid_argument("relation: length mismatch");
    const int w = hamming_weight(x);
    if (w != hamming_weight(y))
        throw std::invalid_argument("relation: weight mismatch");
    int agree = 0, common = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != 0 && y[i] != 0) {
            ++common;
            if (x[i] == y[i]) ++agree;
        }
    }
    return {w - agree, w - common};
}

int character_exponent(int a, int b, int q) {
    if (a < 1 || a >= q || b < 1 || b >= q)
        throw std::invalid_argument("character: symbols must be in 1..q-1");
    return static_cast<int>((static_cast<long>(a - 1) * (b - 1)) % (q - 1));
}

CycInt character(int a, int b, int q) {
    return CycInt::monomial(q - 1, character_exponent(a, b, q));
}

std::optional<int> pairing_exponent(const Word& a, const Word& x, int q) {
    if (a.size() != x.size())
        throw std::invalid_argument("pairing: length mismatch");
    long e = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (x[i] == 0) return std::nullopt;
        e += static_cast<long>(a[i] - 1) * (x[i] - 1);
    }
    return static_cast<int>(e % (q - 1));
}

CycInt pairing(const Word& a, const Word& x, int q) {
    auto e = pairing_exponent(a, x, q);
    if (!e) return CycInt(q - 1);
    return CycInt::monomial(q - 1, *e);
}

std::vector<Word> enumerate_Wrs(const SchemeParams& params, int r, int s,
                                std::size_t cap) {
    if (s < 0 || s > r || r > params.n)
        throw std::invalid_argument("enumerate_Wrs: need 0 <= s <= r <= n");
    const Int count = binom(params.n, r) * binom(r, s) * ipow(params.q - 2, s);
    if (count > static_cast<long>(cap))
        throw size_cap_error("enumerate_Wrs: cardinality exceeds cap");
    std::vector<Word> out;
    Word cur(static_cast<std::size_t>(params.n), 0);
    // ones = coordinates valued 1 still to place, high = values >= 2 to place
    auto rec = [&](auto&& self, int pos, int ones, int high) -> void {
        if (params.n - pos < ones + high) return;
        if (pos == params.n) {
            out.push_back(cur);
            return;
        }
        cur[static_cast<std::size_t>(pos)] = 0;
        self(self, pos + 1, ones, high);
        if (ones > 0) {
            cur[static_cast<std::size_t>(pos)] = 1;
            self(self, pos + 1, ones - 1, high);
        }
        if (high > 0)
            for (int v = 2; v < params.q; ++v) {
                cur[static_cast<std::size_t>(pos)] = static_cast<Symbol>(v);
                self(self, pos + 1, ones, high - 1);
            }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, r - s, s);
    return out;
}

CharMatrix build_A(const SchemeParams& params, int r, int s, std::size_t cap) {
    CharMatrix m;
    m.vertices = enumerate_vertices(params, cap);
    m.wrs = enumerate_Wrs(params, r, s, cap);
    m.entries.reserve(m.vertices.size());
    for (const Word& x : m.vertices) {
        std::vector<CycInt> row;
        row.reserve(m.wrs.size());
        for (const Word& a : m.wrs) row.push_back(pairing(a, x, params.q));
        m.entries.push_back(std::move(row));
    }
    return m;
}

namespace {

// Reduce a small group-ring element (counts per exponent) modulo the
// cyclotomic polynomial and demand an integer value.
long long cyc_counts_to_int(std::vector<long long> acc,
                            const std::vector<long long>& phi) {
    const std::size_t db = phi.size() - 1;
    while (acc.size() > db) {
        const long long lead = acc.back();
        if (lead != 0) {
            const std::size_t shift = acc.size() - 1 - db;
            for (std::size_t k = 0; k <= db; ++k) acc[shift + k] -= lead * phi[k];
        }
        acc.pop_back();
    }
    for (std::size_t k = 1; k < acc.size(); ++k)
        if (acc[k] != 0)
            throw consistency_error("build_C: entry did not reduce to an integer");
    return acc.empty() ? 0 : acc[0];
}

std::vector<long long> phi_ll(int n) {
    std::vector<long long> out;
    for (const Int& c : cyclotomic_poly(n)) out.push_back(c.get_si());
    return out;
}

} // namespace

Mat<Int> build_C(const SchemeParams& params, int r, int s, std::size_t cap) {
    if (!params.in_L({r, s})) throw std::invalid_argument("build_C: (r,s) not in L");
    const auto vertices = enumerate_vertices(params, cap);
    const std::size_t nx = vertices.size();
    if (nx > cap) throw size_cap_error("build_C: dense cap exceeded");
    const int q = params.q, qm1 = q - 1;
    const auto phi = phi_ll(qm1);
    Mat<Int> c(nx, nx);
    if (s >= 1 && q == 2) return c; // W_{rs} is empty, C_{rs} = 0

    std::vector<int> common;
    std::vector<long long> acc(static_cast<std::size_t>(qm1));
    for (std::size_t xi = 0; xi < nx; ++xi) {
        const Word& x = vertices[xi];
        for (std::size_t yi = 0; yi < nx; ++yi) {
            const Word& y = vertices[yi];
            common.clear();
            for (std::size_t t = 0; t < x.size(); ++t)
                if (x[t] != 0 && y[t] != 0) common.push_back(static_cast<int>(t));
            if (static_cast<int>(common.size()) < r) continue;
            std::fill(acc.begin(), acc.end(), 0);
            // sum over a in W_{rs} with supp(a) inside the common support:
            // a has value >= 2 exactly on an s-subset S of an r-subset, and
            // only S contributes to the pairing exponents.
            for_each_combination(static_cast<int>(common.size()), r,
                                 [&](const std::vector<int>& rsel) {
                for_each_combination(r, s, [&](const std::vector<int>& ssel) {
                    std::vector<int> scoords(ssel.size());
                    for (std::size_t u = 0; u < ssel.size(); ++u)
                        scoords[u] = common[static_cast<std::size_t>(rsel[static_cast<std::size_t>(ssel[u])])];
                    // odometer over values 2..q-1 on the s coordinates
                    std::vector<int> val(ssel.size(), 2);
                    while (true) {
                        long ex = 0, ey = 0;
                        for (std::size_t u = 0; u < scoords.size(); ++u) {
                            const auto t = static_cast<std::size_t>(scoords[u]);
                            ex += static_cast<long>(val[u] - 1) * (x[t] - 1);
                            ey += static_cast<long>(val[u] - 1) * (y[t] - 1);
                        }
                        long d = (ex - ey) % qm1;
                        if (d < 0) d += qm1;
                        ++acc[static_cast<std::size_t>(d)];
                        std::size_t pos = 0;
                        while (pos < val.size() && val[pos] == q - 1) val[pos++] = 2;
                        if (pos == val.size()) break;
                        ++val[pos];
                    }
                });
            });
            c(xi, yi) = static_cast<long>(cyc_counts_to_int(acc, phi));
        }
    }
    return c;
}

std::vector<std::uint16_t> relation_class_table(const SchemeParams& params,
                                                const std::vector<Word>& vertices) {
    const std::size_t nx = vertices.size();
    std::vector<std::uint16_t> cls(nx * nx);
    for (std::size_t xi = 0; xi < nx; ++xi)
        for (std::size_t yi = 0; yi < nx; ++yi)
            cls[xi * nx + yi] =
                static_cast<std::uint16_t>(params.k_index(relation(vertices[xi], vertices[yi])));
    return cls;
}

std::vector<Int> compress_to_classes(const SchemeParams& params, const Mat<Int>& mat,
                                     const std::vector<std::uint16_t>& cls) {
    const std::size_t nx = mat.rows();
    std::vector<Int> out(params.K.size());
    std::vector<bool> seen(params.K.size(), false);
    for (std::size_t xi = 0; xi < nx; ++xi)
        for (std::size_t yi = 0; yi < nx; ++yi) {
            const std::uint16_t k = cls[xi * nx + yi];
            if (!seen[k]) {
                out[k] = mat(xi, yi);
                seen[k] = true;
            } else if (out[k] != mat(xi, yi)) {
                throw consistency_error(
                    "compress_to_classes: matrix is not class-constant");
            }
        }
    return out;
}

CrsAlgebraReport verify_crs_algebra(const SchemeParams& params, std::size_t cap) {
    if (params.q < 3)
        throw std::invalid_argument("verify_crs_algebra: requires q >= 3");
    const auto vertices = enumerate_vertices(params, cap);
    if (vertices.size() > cap) throw size_cap_error("verify_crs_algebra: cap");
    const auto cls = relation_class_table(params, vertices);

    std::vector<Mat<Int>> cmats;
    std::vector<std::vector<Int>> cvecs;
    for (IndexPair rs : params.L) {
        cmats.push_back(build_C(params, rs.i, rs.j, cap));
        cvecs.push_back(compress_to_classes(params, cmats.back(), cls));
    }

    // Exact component structure: the idempotent expansion of C_{rs} has
    // strictly positive coefficients exactly on {E_{is} : i <= r}.  (The
    // expansion over the C-basis below can legitimately contain zeros; the
    // positivity lives at the idempotent level.)
    const Mat<Rat> p_exact = first_eigenmatrix_table(params);
    for (std::size_t a = 0; a < params.L.size(); ++a) {
        const IndexPair rs = params.L[a];
        for (std::size_t l = 0; l < params.L.size(); ++l) {
            Rat gamma = 0;
            for (std::size_t k = 0; k < params.K.size(); ++k)
                gamma += Rat(cvecs[a][k]) * p_exact(k, l);
            const IndexPair ij = params.L[l];
            const bool component = ij.j == rs.j && ij.i <= rs.i;
            if (component && gamma <= 0)
                throw consistency_error("verify_crs_algebra: E_" + to_string(ij) +
                                        " coefficient of C_" + to_string(rs) +
                                        " is not positive");
            if (!component && gamma != 0)
                throw consistency_error("verify_crs_algebra: C_" + to_string(rs) +
                                        " has an unexpected component E_" +
                                        to_string(ij));
        }
    }

    CrsAlgebraReport report;
    for (std::size_t a = 0; a < params.L.size(); ++a) {
        for (std::size_t b = 0; b < params.L.size(); ++b) {
            const IndexPair rs = params.L[a], kh = params.L[b];
            const Mat<Int> prod = cmats[a].mul(cmats[b]);
            const auto pvec = compress_to_classes(params, prod, cls);
            CrsProductExpansion entry{rs, kh, {}};
            if (rs.j != kh.j) {
                for (const Int& v : pvec)
                    if (v != 0)
                        throw consistency_error(
                            "verify_crs_algebra: C_" + to_string(rs) + " C_" +
                            to_string(kh) + " nonzero although s != h");
            } else {
                const int s = rs.j;
                const int top = std::min(rs.i, kh.i);
                std::vector<std::size_t> span;
                for (int i = s; i <= top; ++i) span.push_back(params.l_index({i, s}));
                Mat<Rat> system(params.K.size(), span.size());
                std::vector<Rat> rhsv(params.K.size());
                for (std::size_t kidx = 0; kidx < params.K.size(); ++kidx) {
                    for (std::size_t t = 0; t < span.size(); ++t)
                        system(kidx, t) = Rat(cvecs[span[t]][kidx]);
                    rhsv[kidx] = Rat(pvec[kidx]);
                }
                auto sol = solve_exact(std::move(system), std::move(rhsv));
                if (!sol)
                    throw consistency_error("verify_crs_algebra: product of C_" +
                                            to_string(rs) + " and C_" + to_string(kh) +
                                            " not in the expected span");
                if (sol->back() <= 0)
                    throw consistency_error(
                        "verify_crs_algebra: leading expansion coefficient of C_" +
                        to_string(rs) + " C_" + to_string(kh) + " is not positive");
                entry.coeffs = *sol;
            }
            report.products.push_back(std::move(entry));
        }
    }
    return report;
}

namespace {

constexpr double kMatrixTol = 1e-8;    // absolute, matrix identities
constexpr double kClusterRelGap = 1e-6; // relative, eigenvalue clustering

std::vector<long> prime_window(std::size_t skip, std::size_t count) {
    std::vector<long> primes;
    long p = 3;
    auto is_prime = [](long v) {
        for (long d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    };
    while (primes.size() < skip + count) {
        if (is_prime(p)) primes.push_back(p);
        ++p;
    }
    return {primes.begin() + static_cast<long>(skip), primes.end()};
}

// Fixed small primes assigned to the relations in lexicographic order.  A
// window can hit an accidental eigenvalue coincidence, so the separation is
// checked exactly against the first eigenmatrix and the first separating
// window is used; the choice depends only on the parameters.
std::vector<long> generic_weights(const SchemeParams& params) {
    const std::size_t dim = params.L.size();
    const Mat<Rat> p_exact = first_eigenmatrix_table(params);
    for (std::size_t attempt = 0; attempt < 32; ++attempt) {
        const auto weights = prime_window(attempt, dim);
        std::vector<Rat> theta(dim, Rat(0));
        for (std::size_t l = 0; l < dim; ++l)
            for (std::size_t k = 0; k < dim; ++k)
                theta[l] += Rat(weights[k]) * p_exact(k, l);
        std::sort(theta.begin(), theta.end());
        if (std::adjacent_find(theta.begin(), theta.end()) == theta.end())
            return weights;
    }
    throw numeric_ambiguity_error(
        "generic_weights: no separating prime window within 32 attempts");
}

} // namespace

NumericIdempotentSet numeric_idempotents(const SchemeParams& params, std::size_t cap) {
    if (params.q < 3)
        throw std::invalid_argument("numeric_idempotents: requires q >= 3");
    NumericIdempotentSet out;
    out.params = params;
    out.vertices = enumerate_vertices(params, cap);
    const std::size_t nx = out.vertices.size();
    if (nx > cap) throw size_cap_error("numeric_idempotents: dense cap exceeded");
    const auto cls = relation_class_table(params, out.vertices);

    // Deterministic generic element of the Bose-Mesner algebra: fixed odd
    // primes assigned to the relations in lexicographic order.
    const auto weights = generic_weights(params);
    Eigen::MatrixXd g(nx, nx);
    for (std::size_t xi = 0; xi < nx; ++xi)
        for (std::size_t yi = 0; yi < nx; ++yi)
            g(static_cast<Eigen::Index>(xi), static_cast<Eigen::Index>(yi)) =
                static_cast<double>(weights[cls[xi * nx + yi]]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    if (es.info() != Eigen::Success)
        throw numeric_ambiguity_error("numeric_idempotents: eigensolver failed");
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double scale = std::max(1.0, std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1))));

    std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters; // [begin,end)
    Eigen::Index begin = 0;
    for (Eigen::Index t = 1; t <= ev.size(); ++t) {
        if (t == ev.size() || ev(t) - ev(t - 1) > kClusterRelGap * scale) {
            clusters.emplace_back(begin, t);
            begin = t;
        }
    }
    if (clusters.size() != params.L.size()) {
        std::ostringstream msg;
        msg << "numeric_idempotents: found " << clusters.size()
            << " eigenvalue clusters, expected " << params.L.size()
            << "; eigenvalues:";
        for (Eigen::Index t = 0; t < ev.size(); ++t) msg << ' ' << ev(t);
        throw numeric_ambiguity_error(msg.str());
    }

    std::vector<Eigen::MatrixXd> projs;
    std::vector<int> sizes;
    for (auto [b, e] : clusters) {
        const auto block = es.eigenvectors().middleCols(b, e - b);
        projs.push_back(block * block.transpose());
        sizes.push_back(static_cast<int>(e - b));
    }

    // Class-compress each projector (they lie in the Bose-Mesner algebra).
    const std::size_t nk = params.K.size();
    std::vector<Eigen::VectorXd> pclass(projs.size(), Eigen::VectorXd::Zero(static_cast<Eigen::Index>(nk)));
    std::vector<double> class_count(nk, 0.0);
    for (std::size_t xi = 0; xi < nx; ++xi)
        for (std::size_t yi = 0; yi < nx; ++yi) ++class_count[cls[xi * nx + yi]];
    for (std::size_t c = 0; c < projs.size(); ++c) {
        Eigen::VectorXd sum = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(nk));
        for (std::size_t xi = 0; xi < nx; ++xi)
            for (std::size_t yi = 0; yi < nx; ++yi)
                sum(cls[xi * nx + yi]) +=
                    projs[c](static_cast<Eigen::Index>(xi), static_cast<Eigen::Index>(yi));
        for (std::size_t k = 0; k < nk; ++k) pclass[c](static_cast<Eigen::Index>(k)) = sum(static_cast<Eigen::Index>(k)) / class_count[k];
        double dev = 0;
        for (std::size_t xi = 0; xi < nx; ++xi)
            for (std::size_t yi = 0; yi < nx; ++yi)
                dev = std::max(dev, std::abs(projs[c](static_cast<Eigen::Index>(xi), static_cast<Eigen::Index>(yi)) -
                                             pclass[c](cls[xi * nx + yi])));
        if (dev > kMatrixTol)
            throw numeric_ambiguity_error(
                "numeric_idempotents: projector not class-constant");
    }

    // Label by the lexicographic filtration: E_{rs} is the projector that
    // first fits in span{C_{kh} : (k,h) <= (r,s)}.
    std::vector<Eigen::VectorXd> basis; // orthonormal, grown stepwise
    std::vector<std::size_t> label_of_step(params.L.size(), SIZE_MAX);
    std::vector<bool> labeled(projs.size(), false);
    for (std::size_t step = 0; step < params.L.size(); ++step) {
        const IndexPair rs = params.L[step];
        const Mat<Int> cmat = build_C(params, rs.i, rs.j, cap);
        const auto cvec = compress_to_classes(params, cmat, cls);
        Eigen::VectorXd dir(static_cast<Eigen::Index>(nk));
        for (std::size_t k = 0; k < nk; ++k) dir(static_cast<Eigen::Index>(k)) = cvec[k].get_d();
        for (const auto& b : basis) dir -= b.dot(dir) * b;
        if (dir.norm() <= kMatrixTol)
            throw numeric_ambiguity_error(
                "numeric_idempotents: C-filtration did not grow at " + to_string(rs));
        basis.push_back(dir.normalized());

        std::size_t newcomer = SIZE_MAX;
        for (std::size_t c = 0; c < projs.size(); ++c) {
            if (labeled[c]) continue;
            Eigen::VectorXd res = pclass[c];
            for (const auto& b : basis) res -= b.dot(res) * b;
            if (res.norm() <= kMatrixTol * std::max(1.0, pclass[c].norm())) {
                if (newcomer != SIZE_MAX)
                    throw numeric_ambiguity_error(
                        "numeric_idempotents: two projectors entered the filtration at " +
                        to_string(rs));
                newcomer = c;
            }
        }
        if (newcomer == SIZE_MAX)
            throw numeric_ambiguity_error(
                "numeric_idempotents: no projector entered the filtration at " +
                to_string(rs));
        labeled[newcomer] = true;
        label_of_step[step] = newcomer;
    }

    for (std::size_t step = 0; step < params.L.size(); ++step) {
        const std::size_t c = label_of_step[step];
        out.projectors.push_back(projs[c]);
        out.ranks.push_back(sizes[c]);
        if (Int(sizes[c]) != multiplicity(params, params.L[step]))
            throw consistency_error("numeric_idempotents: rank of E_" +
                                    to_string(params.L[step]) +
                                    " does not match the multiplicity");
    }
    return out;
}

std::vector<IndexPair> components_of_C(const SchemeParams& params, int r, int s,
                                       const NumericIdempotentSet& idem) {
    params.require_in_L({r, s}, "components_of_C");
    const Mat<Int> cmat = build_C(params, r, s);
    const std::size_t nx = idem.vertices.size();
    Eigen::MatrixXd cd(nx, nx);
    for (std::size_t xi = 0; xi < nx; ++xi)
        for (std::size_t yi = 0; yi < nx; ++yi)
            cd(static_cast<Eigen::Index>(xi), static_cast<Eigen::Index>(yi)) = cmat(xi, yi).get_d();
    std::vector<IndexPair> comps;
    for (std::size_t t = 0; t < params.L.size(); ++t) {
        const double coeff =
            (cd * idem.projectors[t]).trace() / static_cast<double>(idem.ranks[t]);
        const double mag = std::abs(coeff);
        if (mag > 1e-8 && mag < 1e-4)
            throw numeric_ambiguity_error(
                "components_of_C: coefficient of E_" + to_string(params.L[t]) +
                " lies in the ambiguity band: " + std::to_string(coeff));
        if (mag >= 1e-4) comps.push_back(params.L[t]);
    }
    return comps;
}

} // namespace rsd

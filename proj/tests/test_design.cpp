#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rsd/construct.hpp"
#include "rsd/design.hpp"
#include "rsd/errors.hpp"

using namespace rsd;

namespace {

Word word(std::initializer_list<int> vals) {
    Word out;
    for (int v : vals) out.push_back(static_cast<Symbol>(v));
    return out;
}

DesignArray full_set(const SchemeParams& p) {
    return DesignArray{p, enumerate_vertices(p)};
}

DesignArray random_subset(const SchemeParams& p, const std::vector<Word>& vertices,
                          std::mt19937& rng, double density) {
    std::bernoulli_distribution take(density);
    std::vector<Word> rows;
    for (const Word& v : vertices)
        if (take(rng)) rows.push_back(v);
    return DesignArray{p, std::move(rows)};
}

} // namespace

TEST_CASE("design validation") {
    const auto p = SchemeParams::make(4, 2, 3);
    CHECK_THROWS_AS(make_design(p, {word({1, 1, 0, 0}), word({1, 1, 0, 0})}),
                    duplicate_row_error);
    CHECK_THROWS_AS(make_design(p, {word({1, 1, 1, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(make_design(p, {word({1, 3, 0, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(make_design(p, {word({1, 1, 0})}), std::invalid_argument);
    CHECK(make_design(p, {word({1, 1, 0, 0})}).size() == 1);
}

TEST_CASE("count_mRS") {
    const auto fig1 = fixture("fig1");
    CHECK(count_mRS(fig1, {0, 1}, {0}, {1}) == 1);
    CHECK(count_mRS(fig1, {}, {}, {}) == 10);
    // on the full vertex set the count is (q-1)^{w-s} C(n-r, w-r)
    const auto x = full_set(SchemeParams::make(4, 2, 3));
    for (int c = 0; c < 4; ++c)
        for (int v = 1; v <= 2; ++v) CHECK(count_mRS(x, {c}, {c}, {v}) == 6);
    CHECK_THROWS_AS(count_mRS(fig1, {1}, {0}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(count_mRS(fig1, {0}, {0}, {4}), std::invalid_argument);
}

TEST_CASE("verifier on the fixture arrays") {
    const auto fig1 = fixture("fig1");
    auto rep = verify_rs_design(fig1, 2, 1);
    CHECK(rep.is_design);
    CHECK(*rep.lambda == 1);
    CHECK(!rep.witness.has_value());

    const auto fig2 = fixture("fig2");
    rep = verify_rs_design(fig2, 2, 1);
    CHECK(rep.is_design);
    CHECK(*rep.lambda == 3);

    // deleting a row breaks some count; the witness is self-consistent
    auto broken = fig1;
    broken.rows.pop_back();
    rep = verify_rs_design(broken, 2, 1);
    CHECK(!rep.is_design);
    REQUIRE(rep.witness.has_value());
    const auto& wit = *rep.witness;
    CHECK(count_mRS(broken, wit.R, wit.S, wit.omega) == wit.observed);
    CHECK(wit.observed != wit.expected);
}

TEST_CASE("monotone consistency") {
    // a (2,1)-design is an (r',s')-design for all s' <= 1, s' <= r' <= 2
    const auto fig1 = fixture("fig1");
    const long long expected[][3] = {
        {0, 0, 10}, {1, 0, 6}, {1, 1, 2}, {2, 0, 3}, {2, 1, 1}};
    for (const auto& e : expected) {
        const auto rep = verify_rs_design(fig1, static_cast<int>(e[0]),
                                          static_cast<int>(e[1]));
        CHECK(rep.is_design);
        CHECK(*rep.lambda == e[2]);
    }
    CHECK(!verify_rs_design(fig1, 2, 2).is_design);
}

TEST_CASE("lambda table") {
    const auto table = lambda_table(fixture("fig1"), 2, 1, 1);
    auto find = [&](int r2, int s2) {
        for (const auto& e : table)
            if (e.r2 == r2 && e.s2 == s2) return e.value;
        FAIL("missing entry");
        return Rat(0);
    };
    CHECK(find(1, 1) == 2);
    CHECK(find(1, 0) == 6);
    CHECK(find(2, 1) == 1);
    CHECK(find(0, 0) == 10);
    for (const auto& e : lambda_table(fixture("fig2"), 2, 1, 3)) {
        if (e.r2 == 1 && e.s2 == 1) CHECK(e.value == 5);
        if (e.r2 == 0 && e.s2 == 0) CHECK(e.value == 15);
    }
}

TEST_CASE("cardinality formula") {
    CHECK(cardinality_formula(SchemeParams::make(5, 3, 4), 2, 1, 1) == 10);
    CHECK(cardinality_formula(SchemeParams::make(6, 4, 3), 2, 1, 3) == 15);
    CHECK(cardinality_formula(SchemeParams::make(5, 3, 4), 2, 1, 0) == 0);
}

TEST_CASE("derived designs") {
    const auto fig1 = fixture("fig1");
    const auto derived = derived_design(fig1, {4}, {4}, {1});
    CHECK(derived.params.n == 4);
    CHECK(derived.params.w == 2);
    CHECK(derived.rows == std::vector<Word>{word({0, 0, 1, 1}), word({3, 3, 0, 0})});
    const auto rep = verify_rs_design(derived, 1, 0);
    CHECK(rep.is_design);
    CHECK(*rep.lambda == 1);
    // cardinality matches the index formula on the derived parameters
    CHECK(Rat(static_cast<long>(derived.size())) ==
          cardinality_formula(derived.params, 1, 0, 1));

    CHECK(derived_design(fig1, {}, {}, {}).rows == fig1.rows);
    CHECK_THROWS_AS(derived_design(fig1, {0}, {1}, {1}), std::invalid_argument);
    // restriction of a full set collapses rows that differ only inside R'
    CHECK_THROWS_AS(derived_design(full_set(SchemeParams::make(3, 2, 3)), {0}, {}, {}),
                    duplicate_row_error);
}

TEST_CASE("avoidance counts") {
    const auto fig1 = fixture("fig1");
    for (int c = 0; c < 5; ++c) {
        const auto res = avoidance_count(fig1, 2, 1, 1, {}, {}, {}, {c});
        CHECK(res.count == 4); // four zeros in every column
    }
    // t = 0 reduces to the plain count
    const auto res0 = avoidance_count(fig1, 2, 1, 1, {0, 1}, {0}, {1}, {});
    CHECK(res0.count == count_mRS(fig1, {0, 1}, {0}, {1}));
    // the full set carries the index (q-1)^{w-s} C(n-r,w-r)
    const auto x = full_set(SchemeParams::make(4, 2, 3));
    for (int c = 0; c < 3; ++c)
        CHECK_NOTHROW(avoidance_count(x, 2, 1, 2, {3}, {3}, {1}, {c}));
    CHECK_THROWS_AS(avoidance_count(fig1, 2, 1, 1, {0}, {}, {}, {0}),
                    std::invalid_argument);
}

TEST_CASE("reduction to r = w") {
    const auto x = full_set(SchemeParams::make(4, 3, 3));
    const auto rep = verify_rs_design(x, 2, 1);
    REQUIRE(rep.is_design);
    CHECK(*rep.lambda == 8);
    const auto red = reduce_to_w(x, 2, 1, 8);
    CHECK(red.r == 3);
    CHECK(red.s == 1);
    CHECK(red.lambda == 4);
    // r = w keeps the index (C(n-w,0) = 1)
    const auto rep31 = verify_rs_design(x, 3, 1);
    REQUIRE(rep31.is_design);
    CHECK(*rep31.lambda == 4);
    CHECK(reduce_to_w(x, 3, 1, 4).lambda == 4);
    CHECK_THROWS_AS(reduce_to_w(fixture("fig1"), 2, 1, 1), std::invalid_argument);
}

TEST_CASE("index set T") {
    const auto p = SchemeParams::make(4, 2, 3);
    CHECK(make_index_set_T(p, 2, 1) ==
          std::vector<IndexPair>{{1, 0}, {1, 1}, {2, 0}, {2, 1}});
    CHECK(make_index_set_T(p, 1, 0) == std::vector<IndexPair>{{1, 0}});
}

TEST_CASE("exact spectral check") {
    const auto p = SchemeParams::make(4, 2, 3);
    const auto x = full_set(p);
    for (IndexPair rs : p.L) {
        if (rs == IndexPair{0, 0} || rs.i > p.m) continue;
        CHECK(tdesign_spectral_check(x, rs.i, rs.j));
    }
    CHECK(tdesign_spectral_check(fixture("fig1"), 2, 1));
    auto broken = fixture("fig1");
    broken.rows.pop_back();
    CHECK(!tdesign_spectral_check(broken, 2, 1));
    CHECK_THROWS_AS(tdesign_spectral_check(fixture("fig1"), 3, 1),
                    spectral_domain_error);
}

TEST_CASE("spectral check matches the verifier on random subsets") {
    const auto p = SchemeParams::make(4, 2, 4);
    const auto vertices = enumerate_vertices(p);
    std::mt19937 rng(20240811);
    for (int t = 0; t < 40; ++t) {
        const auto y = random_subset(p, vertices, rng, t % 2 ? 0.5 : 0.15);
        for (IndexPair rs : p.L) {
            if (rs == IndexPair{0, 0} || rs.i > p.m) continue;
            CHECK(verify_rs_design(y, rs.i, rs.j).is_design ==
                  tdesign_spectral_check(y, rs.i, rs.j));
        }
    }
}

TEST_CASE("floating idempotent check") {
    const auto p = SchemeParams::make(4, 2, 3);
    const auto idem = numeric_idempotents(p);
    const auto x = full_set(p);
    CHECK(tdesign_idempotent_check(x, make_index_set_T(p, 2, 1), idem));

    // agreement with the exact spectral check on random subsets
    const auto vertices = enumerate_vertices(p);
    std::mt19937 rng(7);
    for (int t = 0; t < 25; ++t) {
        const auto y = random_subset(p, vertices, rng, 0.3);
        for (IndexPair rs : {IndexPair{1, 1}, IndexPair{2, 1}}) {
            const auto set = make_index_set_T(p, rs.i, rs.j);
            CHECK(tdesign_idempotent_check(y, set, idem) ==
                  tdesign_spectral_check(y, rs.i, rs.j));
        }
    }
}

TEST_CASE("floating idempotent check accepts fig1") {
    const auto p = SchemeParams::make(5, 3, 4);
    const auto idem = numeric_idempotents(p);
    CHECK(tdesign_idempotent_check(fixture("fig1"), make_index_set_T(p, 2, 1), idem));
    auto broken = fixture("fig1");
    broken.rows.pop_back();
    CHECK(!tdesign_idempotent_check(broken, make_index_set_T(p, 2, 1), idem));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "rsd/construct.hpp"
#include "rsd/errors.hpp"
#include "rsd/io.hpp"

using namespace rsd;

TEST_CASE("design round trip") {
    const auto p = SchemeParams::make(4, 2, 3);
    const auto vertices = enumerate_vertices(p);
    std::mt19937 rng(42);
    std::bernoulli_distribution take(0.4);
    for (int t = 0; t < 30; ++t) {
        std::vector<Word> rows;
        for (const Word& v : vertices)
            if (take(rng)) rows.push_back(v);
        const DesignArray y{p, rows};
        std::stringstream buf;
        write_design(buf, y);
        const auto back = read_design(buf);
        CHECK(back.rows == y.rows);
        CHECK(back.params.n == p.n);
        CHECK(back.params.w == p.w);
        CHECK(back.params.q == p.q);
    }
}

TEST_CASE("comments and blank lines") {
    std::stringstream in("# a design\n\n4 2 3\n# body\n1 1 0 0\n\n0 0 2 1\n");
    const auto y = read_design(in);
    CHECK(y.size() == 2);
    CHECK(y.rows[1] == Word{0, 0, 2, 1});
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_error = [](const std::string& text, const std::string& fragment) {
        std::stringstream in(text);
        try {
            read_design(in);
            FAIL("expected parse_error for: " << text);
        } catch (const parse_error& e) {
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };
    expect_error("", "missing header");
    expect_error("4 2\n", "header");
    expect_error("4 2 3\n1 1 0\n", "line 2");
    expect_error("4 2 3\n1 4 0 0\n", "out of");
    expect_error("4 2 3\n# ok\n1 1 1 0\n", "line 3");
    expect_error("4 2 3\n1 x 0 0\n", "integer");

    std::stringstream dup("4 2 3\n1 1 0 0\n1 1 0 0\n");
    CHECK_THROWS_AS(read_design(dup), duplicate_row_error);
}

TEST_CASE("checked-in fixture files match the embedded copies") {
    const auto file1 = read_design_file(std::string(RSD_DATA_DIR) + "/fig1.rsd");
    CHECK(file1.rows == fixture("fig1").rows);
    const auto file2 = read_design_file(std::string(RSD_DATA_DIR) + "/fig2.rsd");
    CHECK(file2.rows == fixture("fig2").rows);
}

TEST_CASE("ingredient files") {
    const auto bd = read_ingredient_file(std::string(RSD_DATA_DIR) + "/sqs8.bd");
    REQUIRE(std::holds_alternative<BlockDesign>(bd));
    CHECK(std::get<BlockDesign>(bd).lambda1 == 1);

    // orthogonal array round trip; the stored index comes from re-verification
    const auto oa = mols_oa(4);
    std::stringstream buf;
    write_ortho_array(buf, oa);
    const auto loaded = read_ingredient(buf);
    REQUIRE(std::holds_alternative<OrthoArray>(loaded));
    CHECK(std::get<OrthoArray>(loaded).rows == oa.rows);
    CHECK(std::get<OrthoArray>(loaded).lambda2 == 1);

    // block design round trip
    const auto bd7 = sts(7);
    std::stringstream buf2;
    write_block_design(buf2, bd7);
    const auto loaded2 = read_ingredient(buf2);
    REQUIRE(std::holds_alternative<BlockDesign>(loaded2));
    CHECK(std::get<BlockDesign>(loaded2).blocks == bd7.blocks);

    // a corrupted array fails verification on load
    auto rows = oa.rows;
    rows[0][0] = rows[0][0] == 1 ? 2 : 1;
    OrthoArray bad = oa;
    bad.rows = rows;
    std::stringstream buf3;
    write_ortho_array(buf3, bad);
    CHECK_THROWS_AS(read_ingredient(buf3), std::invalid_argument);

    std::stringstream unknown("XX 1 2 3\n");
    CHECK_THROWS_AS(read_ingredient(unknown), parse_error);
    std::stringstream badblock("BD 7 3 2\n1 2\n");
    CHECK_THROWS_AS(read_ingredient(badblock), parse_error);
}

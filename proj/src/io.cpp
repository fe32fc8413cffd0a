#include "rsd/io.hpp"

#include <fstream>
#include <sstream>

#include "rsd/errors.hpp"

namespace rsd {
namespace {

struct LineReader {
    std::istream& in;
    long line_number = 0;

    // Next content line (comments and blank lines skipped); false at EOF.
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_number;
            const auto pos = raw.find_first_not_of(" \t\r");
            if (pos == std::string::npos || raw[pos] == '#') continue;
            out = raw;
            return true;
        }
        return false;
    }
};

std::vector<long> parse_ints(const std::string& text, long line) {
    std::istringstream ss(text);
    std::vector<long> out;
    long v;
    while (ss >> v) out.push_back(v);
    std::string tail;
    if (ss.fail() && !ss.eof()) {
        ss.clear();
        ss >> tail;
        throw parse_error("expected an integer, got '" + tail + "'", line);
    }
    return out;
}

} // namespace

DesignArray read_design(std::istream& in) {
    LineReader reader{in};
    std::string text;
    if (!reader.next(text)) throw parse_error("missing header line 'n w q'");
    const auto header = parse_ints(text, reader.line_number);
    if (header.size() != 3)
        throw parse_error("header must be 'n w q'", reader.line_number);
    SchemeParams params;
    try {
        params = SchemeParams::make(static_cast<int>(header[0]),
                                    static_cast<int>(header[1]),
                                    static_cast<int>(header[2]));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), reader.line_number);
    }
    std::vector<Word> rows;
    while (reader.next(text)) {
        const auto vals = parse_ints(text, reader.line_number);
        if (static_cast<int>(vals.size()) != params.n)
            throw parse_error("expected " + std::to_string(params.n) + " symbols",
                              reader.line_number);
        Word row;
        for (long v : vals) {
            if (v < 0 || v >= params.q)
                throw parse_error("symbol " + std::to_string(v) + " out of [0," +
                                      std::to_string(params.q - 1) + "]",
                                  reader.line_number);
            row.push_back(static_cast<Symbol>(v));
        }
        if (hamming_weight(row) != params.w)
            throw parse_error("row weight " + std::to_string(hamming_weight(row)) +
                                  " differs from w = " + std::to_string(params.w),
                              reader.line_number);
        rows.push_back(std::move(row));
    }
    return make_design(std::move(params), std::move(rows));
}

DesignArray read_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_design(in);
}

void write_design(std::ostream& out, const DesignArray& y) {
    out << y.params.n << ' ' << y.params.w << ' ' << y.params.q << '\n';
    for (const Word& row : y.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? " " : "") << static_cast<int>(row[c]);
        out << '\n';
    }
}

void write_design_file(const std::string& path, const DesignArray& y) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    write_design(out, y);
}

Ingredient read_ingredient(std::istream& in) {
    LineReader reader{in};
    std::string text;
    if (!reader.next(text)) throw parse_error("missing ingredient header");
    std::istringstream head(text);
    std::string kind;
    head >> kind;
    if (kind == "BD") {
        long n, w, r;
        if (!(head >> n >> w >> r))
            throw parse_error("block-design header must be 'BD n w r'",
                              reader.line_number);
        std::vector<std::vector<int>> blocks;
        while (reader.next(text)) {
            const auto vals = parse_ints(text, reader.line_number);
            if (static_cast<long>(vals.size()) != w)
                throw parse_error("expected a block of " + std::to_string(w) +
                                      " points",
                                  reader.line_number);
            std::vector<int> block;
            for (long v : vals) {
                if (v < 1 || v > n)
                    throw parse_error("point " + std::to_string(v) + " out of [1," +
                                          std::to_string(n) + "]",
                                      reader.line_number);
                block.push_back(static_cast<int>(v) - 1);
            }
            for (std::size_t u = 1; u < block.size(); ++u)
                if (block[u] <= block[u - 1])
                    throw parse_error("block points must be sorted and distinct",
                                      reader.line_number);
            blocks.push_back(std::move(block));
        }
        const auto check = block_design_verify(static_cast<int>(n), static_cast<int>(w),
                                               static_cast<int>(r), blocks);
        if (!check.lambda)
            throw std::invalid_argument(
                "ingredient block design failed verification (first uncovered "
                "r-subset differs in coverage)");
        return BlockDesign{static_cast<int>(n), static_cast<int>(w),
                           static_cast<int>(r), *check.lambda, std::move(blocks)};
    }
    if (kind == "OA") {
        long runs, factors, qminus1, strength;
        if (!(head >> runs >> factors >> qminus1 >> strength))
            throw parse_error("OA header must be 'OA runs factors qminus1 strength'",
                              reader.line_number);
        std::vector<std::vector<int>> rows;
        while (reader.next(text)) {
            const auto vals = parse_ints(text, reader.line_number);
            if (static_cast<long>(vals.size()) != factors)
                throw parse_error("expected " + std::to_string(factors) + " symbols",
                                  reader.line_number);
            std::vector<int> row;
            for (long v : vals) {
                if (v < 1 || v > qminus1)
                    throw parse_error("symbol " + std::to_string(v) + " out of [1," +
                                          std::to_string(qminus1) + "]",
                                      reader.line_number);
                row.push_back(static_cast<int>(v));
            }
            rows.push_back(std::move(row));
        }
        if (static_cast<long>(rows.size()) != runs)
            throw parse_error("run count " + std::to_string(rows.size()) +
                              " differs from header value " + std::to_string(runs));
        const auto check = oa_verify(static_cast<int>(factors), static_cast<int>(qminus1),
                                     static_cast<int>(strength), rows);
        if (!check.lambda)
            throw std::invalid_argument("ingredient OA failed verification");
        OrthoArray oa;
        oa.factors = static_cast<int>(factors);
        oa.qminus1 = static_cast<int>(qminus1);
        oa.strength = static_cast<int>(strength);
        oa.lambda2 = *check.lambda;
        oa.rows = std::move(rows);
        return oa;
    }
    throw parse_error("unknown ingredient kind '" + kind + "' (expected BD or OA)",
                      reader.line_number);
}

Ingredient read_ingredient_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_ingredient(in);
}

void write_block_design(std::ostream& out, const BlockDesign& bd) {
    out << "BD " << bd.n << ' ' << bd.w << ' ' << bd.r << '\n';
    for (const auto& block : bd.blocks) {
        for (std::size_t u = 0; u < block.size(); ++u)
            out << (u ? " " : "") << block[u] + 1;
        out << '\n';
    }
}

void write_ortho_array(std::ostream& out, const OrthoArray& oa) {
    out << "OA " << oa.rows.size() << ' ' << oa.factors << ' ' << oa.qminus1 << ' '
        << oa.strength << '\n';
    for (const auto& row : oa.rows) {
        for (std::size_t u = 0; u < row.size(); ++u) out << (u ? " " : "") << row[u];
        out << '\n';
    }
}

} // namespace rsd

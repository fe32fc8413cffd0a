#pragma once

#include <stdexcept>
#include <string>

namespace rsd {

/// Enumeration or dense-matrix size exceeds the configured desk-scale cap.
struct size_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A quantity that is provably exact/consistent failed to be so at runtime;
/// indicates a bug, not bad user input.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Floating-point result fell into the ambiguity band between "clearly zero"
/// and "clearly nonzero"; the computation aborts rather than guessing.
struct numeric_ambiguity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The spectral characterization requires r <= min(w, n-w); refused otherwise.
struct spectral_domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Text-format parse failure, with 1-based line number when known.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg, long line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                      : msg),
          line_number(line) {}
    long line_number;
};

/// Duplicate row in a design array (arrays are duplicate-free by contract).
struct duplicate_row_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rsd

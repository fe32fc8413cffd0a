#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "rsd/construct.hpp"
#include "rsd/design.hpp"

namespace rsd {

/// Design file: header line "n w q", one row per line as n space-separated
/// symbols in [0,q-1].  Lines starting with '#' are comments; blank lines
/// are ignored.  Errors carry 1-based line numbers.
DesignArray read_design(std::istream& in);
DesignArray read_design_file(const std::string& path);

void write_design(std::ostream& out, const DesignArray& y);
void write_design_file(const std::string& path, const DesignArray& y);

using Ingredient = std::variant<BlockDesign, OrthoArray>;

/// Ingredient file, re-verified on load (the stored lambda comes from the
/// verifier, never from the file):
///   block design: header "BD n w r", then one block per line as w sorted
///   1-based point indices;
///   orthogonal array: header "OA runs factors qminus1 strength", then one
///   row per line as symbols in [1,q-1].
Ingredient read_ingredient(std::istream& in);
Ingredient read_ingredient_file(const std::string& path);

void write_block_design(std::ostream& out, const BlockDesign& bd);
void write_ortho_array(std::ostream& out, const OrthoArray& oa);

} // namespace rsd

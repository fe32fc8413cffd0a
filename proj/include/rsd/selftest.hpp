#pragma once

#include <string>
#include <vector>

namespace rsd {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Runs the acceptance criteria in order; `quick` shrinks the sweeps so the
/// whole run stays below roughly ten seconds.
std::vector<CriterionResult> run_acceptance(bool quick = false);

} // namespace rsd

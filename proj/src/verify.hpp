#pragma once

#include "numerics.hpp"

#include <string>
#include <vector>

namespace freud {

struct CheckResult {
    std::string module;
    std::string name;
    bool passed = false;
    std::string residual;   // decimal text, empty when the check threw
    std::string tolerance;
    std::string detail;
};

// Runs the invariant suites of every module at the given precision.
std::vector<CheckResult> run_verification(const PrecisionContext& ctx);

}  // namespace freud

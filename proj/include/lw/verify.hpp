#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lw/theta.hpp"

namespace lw {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Runs the structural checks (letter coding, counting, runs, two-letter
// factors, richness, windows, projection, interspersion axioms) over the
// length-n prefix of the Lambda word of theta. Deterministic: identical
// input yields an identical report. PrecisionExhausted and BudgetExceeded
// propagate; any other failure inside a check marks that check failed.
std::vector<CheckResult> run_verification(const ThetaSpec& theta, std::size_t n);

}  // namespace lw

#pragma once

#include <string>
#include <vector>

namespace fig8 {

struct CheckResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

// The numbered acceptance criteria (1..13).
std::vector<CheckResult> run_acceptance();

// Invariant suite used by `fig8 selftest`. `quick` drops the slowest
// quadrature checks.
std::vector<CheckResult> run_selftest(bool quick);

}  // namespace fig8

#pragma once

#include <string>
#include <vector>

namespace kickbasis {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;   // empty when passing; first failure otherwise
    double seconds = 0.0;
};

// Full verification suite: every check the library promises, run end to end.
// Deterministic order and content; timings live only in CheckResult.
// nmax > 0 trims every per-check size bound to min(bound, nmax).
std::vector<CheckResult> run_verification_suite(int nmax = 0);

}  // namespace kickbasis

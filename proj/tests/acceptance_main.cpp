#include <cstdio>
#include <string>
#include <vector>

#include "kickbasis/verify.hpp"

// Always-on gate: runs the full verification suite at its spec sizes and
// holds every check to a wall-clock budget. One line per check.
int main() {
    struct Budget {
        const char* name;
        double seconds;
    };
    // Budgets are fixed up front; a slower machine fails loudly rather than
    // silently stretching.
    const std::vector<Budget> budgets = {
        {"degree-poly-2-1", 1.0},    {"worked-examples", 1.0},
        {"tree-recursion", 120.0},   {"nonsingular", 600.0},
        {"hook-triangular", 300.0},  {"qt-symmetry", 600.0},
        {"recurrences", 120.0},      {"reduced-divisibility", 60.0},
        {"orbit-oracle", 300.0},     {"overlap-agreement", 60.0},
    };

    const auto results = kickbasis::run_verification_suite();
    if (results.size() != budgets.size()) {
        std::printf("FAIL suite: expected %zu checks, got %zu\n",
                    budgets.size(), results.size());
        return 1;
    }

    bool ok = true;
    for (size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        const auto& b = budgets[i];
        if (r.name != b.name) {
            std::printf("FAIL %s: unexpected check order (found %s)\n", b.name,
                        r.name.c_str());
            ok = false;
            continue;
        }
        const bool in_budget = r.seconds <= b.seconds;
        if (r.pass && in_budget) {
            std::printf("PASS %s (%.2fs, budget %.0fs)\n", r.name.c_str(),
                        r.seconds, b.seconds);
        } else if (r.pass) {
            std::printf("FAIL %s: over budget (%.2fs > %.0fs)\n",
                        r.name.c_str(), r.seconds, b.seconds);
            ok = false;
        } else {
            std::printf("FAIL %s: %s (%.2fs)\n", r.name.c_str(),
                        r.detail.c_str(), r.seconds);
            ok = false;
        }
        std::fflush(stdout);
    }
    return ok ? 0 : 1;
}

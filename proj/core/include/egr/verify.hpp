#pragma once

#include <string>
#include <vector>

namespace egr {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : checks) n += !c.pass;
        return n;
    }
};

/// Runs the named verification suite.  scope: all, heights, curves, galois,
/// tables.  Deterministic; individual check failures are recorded, never
/// thrown.
VerificationReport verify_all(const std::string& scope, int threads = 1);

}  // namespace egr

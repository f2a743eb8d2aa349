#pragma once

#include <string>
#include <vector>

namespace ksba {

struct CheckResult {
    std::string id;           // "AC4.6.1b"
    int criterion = 0;        // 1..10, 0 for the coverage self-check
    std::string description;
    bool pass = false;
    std::string witness;      // exact values, or the first counterexample
};

struct VerifyOutcome {
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] int exit_code() const { return passed() ? 0 : 1; }
    /// One line per check, "PASS id: description (witness)".
    [[nodiscard]] std::string report() const;
};

struct VerifyOptions {
    long n_max = 100;          // formula sweeps
    long l_max = 200;          // case analysis ranges
    long gap_n_max = 1000;
    long scenario_n_max = 20;
    long scenario_N_max = 12;
    bool concurrent = true;
};

/// Check ids the suite must produce, in report order.
const std::vector<std::string>& expected_check_ids();
/// Scenario names the volume checks must cover.
const std::vector<std::string>& required_scenarios();

/// Runs every check (concurrently if asked) and reports in expected_check_ids() order,
/// followed by a coverage self-check.
VerifyOutcome verify_paper(const VerifyOptions& opts = {});

/// Runs only the checks of one criterion.
VerifyOutcome verify_criterion(int criterion, const VerifyOptions& opts = {});

}  // namespace ksba

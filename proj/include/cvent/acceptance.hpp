#pragma once

#include <string>
#include <vector>

namespace cvent {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AcceptanceOptions {
    int jobs = 0;  // parallelism for the scan-heavy checks; 0 = all cores
    // Multiplies the analytic trace target inside the trace-convergence
    // check. Anything but 1.0 must make that check fail (negative control).
    double bell_trace_tamper = 1.0;
};

CheckResult check_squeezed_oracle();
CheckResult check_bell_trace_convergence(double tamper = 1.0);
CheckResult check_analytic_numeric_equivalence();
CheckResult check_invariance_suite();
CheckResult check_cat_benchmark();
CheckResult check_gaussian_no_purification();
CheckResult check_cat_purification(int jobs = 0);
CheckResult check_moment_identities();
CheckResult check_gate_oracle();

/// All checks, in a fixed order, with deterministic detail strings.
std::vector<CheckResult> run_acceptance_checks(const AcceptanceOptions& opt = {});

/// Single check by name (as reported in CheckResult::name); throws
/// std::invalid_argument for an unknown name.
CheckResult run_acceptance_check(const std::string& name,
                                 const AcceptanceOptions& opt = {});

/// Names in the order run_acceptance_checks uses.
std::vector<std::string> acceptance_check_names();

}  // namespace cvent

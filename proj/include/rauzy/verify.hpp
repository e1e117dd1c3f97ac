#pragma once

#include <functional>
#include <string>
#include <vector>

namespace rauzy {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Check {
    std::string name;
    std::function<CheckResult()> run;
};

struct AcceptanceOptions {
    bool big_class_search = true; // cross-check the 13-letter prediction by search
};

/// The ten acceptance checks, in order.
std::vector<Check> acceptance_checks(const AcceptanceOptions& opts = {});

struct PropertyOptions {
    int max_letters = 7; // exhaustive permutation sweeps
    int max_sum_c = 12;  // formula agreement sweeps
    int max_sum_d = 13;
};

/// The identity and invariant suites, budget-bounded.
std::vector<Check> property_checks(const PropertyOptions& opts = {});

/// Runs checks, printing one PASS/FAIL line per check to the stream-like
/// callback; returns the number of failures.
int run_checks(const std::vector<Check>& checks,
               const std::function<void(const CheckResult&)>& report);

} // namespace rauzy

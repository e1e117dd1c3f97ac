// Acceptance suite: runs every criterion and prints one PASS/FAIL line each.
// RAUZY_SKIP_BIG_SEARCH=1 skips the multi-million-vertex cross-check of the
// predictor (the formula side still runs).

#include <cstdlib>
#include <iostream>

#include "rauzy/verify.hpp"

int main() {
    rauzy::AcceptanceOptions opts;
    if (const char* skip = std::getenv("RAUZY_SKIP_BIG_SEARCH"))
        opts.big_class_search = std::string(skip) != "1";
    int failures = rauzy::run_checks(rauzy::acceptance_checks(opts),
                                     [](const rauzy::CheckResult& r) {
                                         std::cout << (r.pass ? "PASS" : "FAIL") << " — "
                                                   << r.name;
                                         if (!r.detail.empty())
                                             std::cout << " — " << r.detail;
                                         std::cout << std::endl;
                                     });
    if (failures) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}

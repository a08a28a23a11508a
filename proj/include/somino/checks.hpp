#pragma once

#include <functional>
#include <string>
#include <vector>

namespace somino::checks {

struct CheckResult {
    bool pass = true;
    std::string detail;  // first failure, or a short summary of what was covered
};

struct Check {
    std::string suite;  // module owning the invariant (tower, exact, series, ...)
    int criterion;      // acceptance criterion 1..7; 0 = additional invariant
    std::string name;
    std::function<CheckResult()> run;
};

const std::vector<Check>& registry();

std::vector<std::string> suites();

}  // namespace somino::checks

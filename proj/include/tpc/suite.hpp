#pragma once

#include <string>
#include <vector>

namespace tpc {

// One checked statement of a batch suite, tagged with the criterion group it
// belongs to.
struct SuiteItem {
    int criterion = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // empty on pass
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteItem> items;
    bool all_passed = true;
};

// Batch runners: "paper-values" (exact invariant values), "colorer-sweep"
// (every constructive colorer over its input grid), "inequality-sweep"
// (structural bounds), or "all".
SuiteReport run_suite(const std::string& name);
const std::vector<std::string>& suite_names();

}  // namespace tpc

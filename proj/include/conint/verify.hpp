#pragma once

#include <string>
#include <vector>

#include "conint/report.hpp"

namespace conint {

// suite names accepted by run_acceptance: "all", "identities", "integrals",
// "moments", "action"
std::vector<std::string> verify_suites();

// runs one named group of the acceptance checks and returns a record per
// criterion.  Every tolerance, grid, and seed is pinned here; callers only
// choose which group to run.  Unknown suite -> invalid_argument.
std::vector<CheckRecord> run_acceptance(const std::string& suite);

}  // namespace conint

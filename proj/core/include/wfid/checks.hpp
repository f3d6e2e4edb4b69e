#pragma once

#include <map>
#include <string>
#include <vector>

#include "wfid/report.hpp"

namespace wfid {

using CheckFn = Report (*)(const RunConfig&);

// Name -> verifier for every check the CLI can route to.
const std::map<std::string, CheckFn>& check_registry();
std::vector<std::string> check_names();

// Routes cfg.check. Unknown names and invalid shapes throw UsageError.
Report run_check(const RunConfig& cfg);

}  // namespace wfid

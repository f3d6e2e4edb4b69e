#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wfid/report.hpp"

namespace wfid::cli {

// Entry point of the wfid tool. Exit codes: 0 verified, 1 falsified or
// condition not satisfied, 2 usage error, 3 internal or degenerate-input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct SuiteEntry {
  std::size_t index = 0;
  std::string expect = "verified";
  Report report;
  bool matched() const { return to_string(report.verdict) == expect; }
};

struct SuiteResult {
  std::vector<SuiteEntry> entries;
  Verdict verdict = Verdict::Error;
};

// Manifest: {"entries": [run config objects, each with an optional "expect" verdict]}.
// An entry that fails to run is recorded with verdict "error"; siblings still run.
SuiteResult run_suite(const nlohmann::json& manifest);
nlohmann::json to_json(const SuiteResult& s);

// Reruns the report's embedded config. Equality ignores timing_ms.
bool replay_matches(const nlohmann::json& report, nlohmann::json* fresh = nullptr);

}  // namespace wfid::cli

#include "wfid/cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wfid/checks.hpp"
#include "wfid/errors.hpp"

namespace wfid::cli {
namespace {

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

Report error_report(const RunConfig& cfg, const std::string& what) {
  Report r;
  r.config = cfg;
  r.verdict = Verdict::Error;
  r.error = what;
  return r;
}

nlohmann::json without_timing(nlohmann::json j) {
  j.erase("timing_ms");
  return j;
}

}  // namespace

SuiteResult run_suite(const nlohmann::json& manifest) {
  const nlohmann::json* list = &manifest;
  if (manifest.is_object()) {
    if (!manifest.contains("entries")) throw UsageError("manifest has no 'entries' array");
    list = &manifest["entries"];
  }
  if (!list->is_array()) throw UsageError("manifest entries must be an array");
  if (list->empty()) throw UsageError("manifest is empty");
  SuiteResult res;
  bool all_match = true, any_error = false;
  for (std::size_t k = 0; k < list->size(); ++k) {
    const auto& e = (*list)[k];
    SuiteEntry entry;
    entry.index = k;
    RunConfig cfg;
    try {
      if (e.is_object() && e.contains("expect")) entry.expect = e["expect"].get<std::string>();
      cfg = config_from_json(e);
      entry.report = run_check(cfg);
    } catch (const std::exception& ex) {
      entry.report = error_report(cfg, ex.what());
    }
    all_match = all_match && entry.matched();
    any_error = any_error || (entry.report.verdict == Verdict::Error && !entry.matched());
    res.entries.push_back(std::move(entry));
  }
  res.verdict = all_match ? Verdict::Verified : any_error ? Verdict::Error : Verdict::Falsified;
  return res;
}

nlohmann::json to_json(const SuiteResult& s) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : s.entries) {
    nlohmann::json j{{"index", e.index},
                     {"check", e.report.config.check},
                     {"expect", e.expect},
                     {"verdict", to_string(e.report.verdict)},
                     {"matched", e.matched()},
                     {"report", wfid::to_json(e.report)}};
    if (!e.report.error.empty()) j["error"] = e.report.error;
    entries.push_back(std::move(j));
  }
  return {{"schema_version", kSchemaVersion}, {"tool", "wfid"}, {"kind", "suite"},
          {"entries", entries}, {"verdict", to_string(s.verdict)}};
}

bool replay_matches(const nlohmann::json& report, nlohmann::json* fresh) {
  if (!report.is_object() || !report.contains("config")) throw UsageError("report has no embedded config");
  const RunConfig cfg = config_from_json(report["config"]);
  const nlohmann::json again = wfid::to_json(run_check(cfg));
  if (fresh != nullptr) *fresh = again;
  return without_timing(again) == without_timing(report);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of weight-function identities", "wfid"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string check, field = "rational", json_path, manifest_path, report_path;
  std::uint64_t seed = 0;
  bool no_timing = false;

  auto* verify = app.add_subcommand("verify", "Run one check");
  verify->add_option("check", check, "Check name")->required()->check(CLI::IsMember(check_names()));
  verify->add_option("--ell,-l", cfg.ell, "Number of variables ell");
  verify->add_option("--n,-n", cfg.n, "Number of tensor factors n");
  verify->add_option("--i", cfg.i, "Index i");
  verify->add_option("--j", cfg.j, "Index j");
  verify->add_option("--K,--order", cfg.order, "Truncation order K in p");
  verify->add_option("--trials", cfg.trials, "Number of seeded trials");
  auto* seed_opt = verify->add_option("--seed", seed, "Base seed (default: WFID_SEED or 20240601)");
  verify->add_option("--field", field, "rational or prime")->check(CLI::IsMember({"rational", "prime"}));
  verify->add_option("--prime", cfg.prime, "Modulus for prime-field mode");
  verify->add_option("--bound,--height", cfg.height, "Height bound B for sampled rationals");
  verify->add_flag("--mutate", cfg.mutate, "Negative control: perturb one coefficient");
  verify->add_flag("--lift-condition", cfg.lift_condition, "Negative control: drop the hypothesis");
  verify->add_option("--word-len", cfg.word_len, "Word length for the submodule check");
  verify->add_option("--direction", cfg.direction, "kbi direction: raising, lowering or both");
  verify->add_option("--json,-o", json_path, "Write the report here");
  verify->add_flag("--no-timing", no_timing, "Omit timing_ms from the report");

  auto* suite = app.add_subcommand("suite", "Run every entry of a manifest");
  suite->add_option("manifest", manifest_path, "Manifest JSON")->required();
  suite->add_option("--json,-o", json_path, "Write the aggregate report here");

  auto* replay = app.add_subcommand("replay", "Rerun a report's embedded config and compare");
  replay->add_option("report", report_path, "Report JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "wfid: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*verify) {
      cfg.check = check;
      cfg.seed = seed_opt->count() ? seed : default_seed();
      cfg.field = field == "prime" ? FieldMode::Prime : FieldMode::Rational;
      cfg.record_timing = !no_timing;
      cfg.output = json_path;
      const Report rep = run_check(cfg);
      const auto j = wfid::to_json(rep);
      if (json_path.empty()) {
        out << j.dump(2) << '\n';
      } else {
        write_json(json_path, j);
        out << check << ": " << to_string(rep.verdict) << '\n';
      }
      if (!rep.error.empty()) err << "wfid: " << rep.error << '\n';
      return exit_code(rep.verdict);
    }
    if (*suite) {
      const SuiteResult res = run_suite(read_json(manifest_path));
      for (const auto& e : res.entries) {
        out << "[" << e.index << "] " << e.report.config.check << ": " << to_string(e.report.verdict)
            << (e.matched() ? "" : " (expected " + e.expect + ")") << '\n';
        if (!e.report.error.empty()) err << "[" << e.index << "] " << e.report.error << '\n';
      }
      out << "suite: " << to_string(res.verdict) << '\n';
      if (!json_path.empty()) write_json(json_path, to_json(res));
      return exit_code(res.verdict);
    }
    const nlohmann::json stored = read_json(report_path);
    const bool same = replay_matches(stored);
    out << (same ? "replay: identical" : "replay: DIFFERS") << '\n';
    return same ? 0 : 1;
  } catch (const UsageError& e) {
    err << "wfid: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "wfid: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace wfid::cli

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wfid/linalg.hpp"
#include "wfid/pseries.hpp"
#include "wfid/sampler.hpp"
#include "wfid/scalar.hpp"

namespace wfid {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr const char* kSeedEnvVar = "WFID_SEED";

enum class FieldMode { Rational, Prime };

struct RunConfig {
  std::string check;
  int ell = 1;
  int n = 2;
  int i = 1;
  int j = 2;
  int order = 8;
  int trials = 3;
  std::uint64_t seed = kDefaultSeed;
  FieldMode field = FieldMode::Rational;
  std::uint64_t prime = kDefaultPrime;
  long height = 1000;
  bool mutate = false;
  // Negative control: skip imposing the identity's hypothesis.
  bool lift_condition = false;
  int word_len = 2;
  std::string direction = "both";
  std::string output;
  bool record_timing = true;

  SamplerConfig sampler_config(std::uint64_t seed_override) const;
};

// Seed from WFID_SEED when set, otherwise kDefaultSeed.
std::uint64_t default_seed();

enum class Verdict { Verified, Falsified, ConditionNotSatisfied, Error };
std::string to_string(Verdict v);
int exit_code(Verdict v);

struct TrialRecord {
  int index = 0;
  std::uint64_t seed = 0;
  int resamples = 0;
  std::vector<Draw> draws;
  std::vector<std::string> constraints;
  nlohmann::json value;
  bool holds = false;
  std::vector<std::string> notes;
};

struct Report {
  RunConfig config;
  std::vector<TrialRecord> trials;
  Verdict verdict = Verdict::Error;
  std::vector<std::string> notes;
  std::string error;
  double timing_ms = 0;
};

nlohmann::json to_json(const RunConfig& c);
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Report& r);

nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const PSeries& s);
nlohmann::json to_json(const std::vector<Scalar>& v);
nlohmann::json to_json(const Matrix<Scalar>& m);
nlohmann::json to_json(const Matrix<PSeries>& m);

// Per-trial view handed to a check body: sampling with logging, notes, constraints.
class TrialContext {
 public:
  TrialContext(const RunConfig& cfg, TrialRecord& rec, Sampler& sampler)
      : cfg_(cfg), rec_(rec), sampler_(sampler) {}

  const RunConfig& config() const { return cfg_; }
  Scalar draw(const std::string& name, const std::vector<Constraint>& extra = {});
  // count values, pairwise distinct and distinct from `avoid`.
  std::vector<Scalar> draw_distinct(const std::string& prefix, int count,
                                    const std::vector<Scalar>& avoid = {},
                                    const std::vector<Constraint>& extra = {});
  void constraint(const std::string& description);
  void note(const std::string& text);
  Scalar one() const;

 private:
  const RunConfig& cfg_;
  TrialRecord& rec_;
  Sampler& sampler_;
};

struct TrialOutcome {
  nlohmann::json value;
  bool holds = false;
};

using TrialBody = std::function<TrialOutcome(TrialContext&)>;

// Runs cfg.trials trials. DegenerateError inside a body triggers a resample
// (bounded); any other exception ends the run with verdict Error.
Report run_trials(const RunConfig& cfg, const TrialBody& body);

inline constexpr int kMaxResamples = 200;

}  // namespace wfid

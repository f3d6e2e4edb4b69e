#include "wfid/report.hpp"

#include <chrono>
#include <cstdlib>

#include "wfid/errors.hpp"

namespace wfid {

using nlohmann::json;

SamplerConfig RunConfig::sampler_config(std::uint64_t seed_override) const {
  SamplerConfig sc;
  sc.seed = seed_override;
  sc.height = height;
  sc.prime = field == FieldMode::Prime ? prime : 0;
  return sc;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnvVar); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used, 0);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kSeedEnvVar) + " is not an unsigned integer");
  }
  return kDefaultSeed;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Falsified: return "falsified";
    case Verdict::ConditionNotSatisfied: return "condition-not-satisfied";
    case Verdict::Error: return "error";
  }
  return "error";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Verified: return 0;
    case Verdict::Falsified:
    case Verdict::ConditionNotSatisfied: return 1;
    case Verdict::Error: return 3;
  }
  return 3;
}

json to_json(const RunConfig& c) {
  return json{{"check", c.check},
              {"ell", c.ell},
              {"n", c.n},
              {"i", c.i},
              {"j", c.j},
              {"order", c.order},
              {"trials", c.trials},
              {"seed", c.seed},
              {"field", c.field == FieldMode::Rational ? "rational" : "prime"},
              {"prime", c.prime},
              {"height", c.height},
              {"mutate", c.mutate},
              {"lift_condition", c.lift_condition},
              {"word_len", c.word_len},
              {"direction", c.direction},
              {"record_timing", c.record_timing}};
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("run config must be a JSON object");
  RunConfig c;
  c.seed = default_seed();
  try {
    c.check = j.at("check").get<std::string>();
    if (j.contains("ell")) c.ell = j["ell"].get<int>();
    if (j.contains("n")) c.n = j["n"].get<int>();
    if (j.contains("i")) c.i = j["i"].get<int>();
    if (j.contains("j")) c.j = j["j"].get<int>();
    if (j.contains("order")) c.order = j["order"].get<int>();
    if (j.contains("trials")) c.trials = j["trials"].get<int>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("field")) {
      const auto f = j["field"].get<std::string>();
      if (f == "rational") {
        c.field = FieldMode::Rational;
      } else if (f == "prime") {
        c.field = FieldMode::Prime;
      } else {
        throw UsageError("field must be 'rational' or 'prime'");
      }
    }
    if (j.contains("prime")) c.prime = j["prime"].get<std::uint64_t>();
    if (j.contains("height")) c.height = j["height"].get<long>();
    if (j.contains("mutate")) c.mutate = j["mutate"].get<bool>();
    if (j.contains("lift_condition")) c.lift_condition = j["lift_condition"].get<bool>();
    if (j.contains("word_len")) c.word_len = j["word_len"].get<int>();
    if (j.contains("direction")) c.direction = j["direction"].get<std::string>();
    if (j.contains("record_timing")) c.record_timing = j["record_timing"].get<bool>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed run config: ") + e.what());
  }
  return c;
}

json to_json(const Scalar& s) { return s.str(); }

json to_json(const PSeries& s) { return s.strs(); }

json to_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

json to_json(const Matrix<Scalar>& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(to_json(row));
  return out;
}

json to_json(const Matrix<PSeries>& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    out.push_back(r);
  }
  return out;
}

json to_json(const Report& r) {
  json trials = json::array();
  for (const auto& t : r.trials) {
    json draws = json::array();
    for (const auto& d : t.draws) {
      draws.push_back({{"index", d.index}, {"name", d.name}, {"value", d.value.str()}});
    }
    trials.push_back({{"index", t.index},
                      {"seed", t.seed},
                      {"resamples", t.resamples},
                      {"draws", draws},
                      {"constraints", t.constraints},
                      {"value", t.value},
                      {"zero", t.holds},
                      {"notes", t.notes}});
  }
  json out{{"schema_version", kSchemaVersion},
           {"tool", "wfid"},
           {"prng", "splitmix64"},
           {"config", to_json(r.config)},
           {"trials", trials},
           {"verdict", to_string(r.verdict)},
           {"notes", r.notes}};
  if (!r.error.empty()) out["error"] = r.error;
  if (r.config.record_timing) out["timing_ms"] = r.timing_ms;
  return out;
}

Scalar TrialContext::draw(const std::string& name, const std::vector<Constraint>& extra) {
  for (const auto& c : extra) constraint(name + ": " + c.description);
  return sampler_.sample(name, extra);
}

std::vector<Scalar> TrialContext::draw_distinct(const std::string& prefix, int count,
                                                const std::vector<Scalar>& avoid,
                                                const std::vector<Constraint>& extra) {
  std::vector<Scalar> out;
  std::vector<Scalar> taken = avoid;
  for (int k = 1; k <= count; ++k) {
    std::vector<Constraint> cs = extra;
    cs.push_back(distinct_from(taken, "earlier draws"));
    const std::string name = prefix + std::to_string(k);
    out.push_back(sampler_.sample(name, cs));
    taken.push_back(out.back());
  }
  constraint(prefix + "*: pairwise distinct" + (avoid.empty() ? "" : ", avoiding fixed values"));
  for (const auto& c : extra) constraint(prefix + "*: " + c.description);
  return out;
}

void TrialContext::constraint(const std::string& description) {
  for (const auto& c : rec_.constraints) {
    if (c == description) return;
  }
  rec_.constraints.push_back(description);
}

void TrialContext::note(const std::string& text) { rec_.notes.push_back(text); }

Scalar TrialContext::one() const {
  return cfg_.field == FieldMode::Prime ? Scalar::residue(1, cfg_.prime) : Scalar(1);
}

Report run_trials(const RunConfig& cfg, const TrialBody& body) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.config = cfg;
  if (cfg.field == FieldMode::Prime) {
    rep.notes.push_back("prime-field mode (p = " + std::to_string(cfg.prime) +
                        "): an unlucky prime can produce spurious zeros; rational mode is authoritative");
  }
  bool all_hold = true;
  try {
    for (int t = 0; t < cfg.trials; ++t) {
      TrialRecord rec;
      rec.index = t;
      rec.seed = SplitMix64::mix(cfg.seed ^ SplitMix64::mix(static_cast<std::uint64_t>(t) + 1));
      Sampler sampler(cfg.sampler_config(rec.seed));
      for (int attempt = 0;; ++attempt) {
        TrialRecord fresh;
        fresh.index = rec.index;
        fresh.seed = rec.seed;
        fresh.resamples = attempt;
        sampler.clear_log();
        TrialContext ctx(cfg, fresh, sampler);
        try {
          TrialOutcome out = body(ctx);
          fresh.draws = sampler.log();
          fresh.value = std::move(out.value);
          fresh.holds = out.holds;
          rec = std::move(fresh);
          break;
        } catch (const DegenerateError& e) {
          if (attempt + 1 >= kMaxResamples) {
            throw ExhaustionError(std::string("too many degenerate samples; last: ") + e.what());
          }
        }
      }
      all_hold = all_hold && rec.holds;
      rep.trials.push_back(std::move(rec));
    }
    if (all_hold) {
      rep.verdict = Verdict::Verified;
    } else {
      rep.verdict = cfg.lift_condition ? Verdict::ConditionNotSatisfied : Verdict::Falsified;
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    rep.verdict = Verdict::Error;
    rep.error = e.what();
  }
  rep.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace wfid

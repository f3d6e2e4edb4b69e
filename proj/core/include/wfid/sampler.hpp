#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wfid/scalar.hpp"

namespace wfid {

// Counter-based SplitMix64: word(i) depends only on (seed, i).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}
  static std::uint64_t mix(std::uint64_t z);
  std::uint64_t word(std::uint64_t index) const;
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

struct Constraint {
  std::string description;
  std::function<bool(const Scalar&)> holds;
};

Constraint nonzero();
Constraint distinct_from(const std::vector<Scalar>& others, const std::string& what);
// v^s != 1 for s = 1..max_power.
Constraint not_root_of_unity(int max_power);

struct SamplerConfig {
  std::uint64_t seed = 0;
  long height = 1000;
  int max_retries = 10000;
  // 0 selects the rational field; otherwise samples are mapped into F_prime.
  std::uint64_t prime = 0;
};

struct Draw {
  std::uint64_t index = 0;
  std::string name;
  Scalar value;
};

// Draws rationals num/den with 0 < |num| <= B, 0 < den <= B. Candidate k uses
// generator words 2k and 2k+1, so every accepted value is replayable from its index.
class Sampler {
 public:
  explicit Sampler(SamplerConfig cfg);

  Scalar sample(const std::string& name, const std::vector<Constraint>& constraints = {});
  Scalar candidate(std::uint64_t index) const;

  const SamplerConfig& config() const { return cfg_; }
  const std::vector<Draw>& log() const { return log_; }
  void clear_log() { log_.clear(); }
  std::uint64_t next_index() const { return next_; }

 private:
  SamplerConfig cfg_;
  SplitMix64 gen_;
  std::uint64_t next_ = 0;
  std::vector<Draw> log_;
};

}  // namespace wfid

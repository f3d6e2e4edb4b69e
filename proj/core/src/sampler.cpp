#include "wfid/sampler.hpp"

#include "wfid/errors.hpp"

namespace wfid {

std::uint64_t SplitMix64::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::word(std::uint64_t index) const {
  return mix(seed_ + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

Constraint nonzero() {
  return {"nonzero", [](const Scalar& v) { return !v.is_zero(); }};
}

Constraint distinct_from(const std::vector<Scalar>& others, const std::string& what) {
  return {"distinct from " + what, [others](const Scalar& v) {
            for (const auto& o : others) {
              if (o == v) return false;
            }
            return true;
          }};
}

Constraint not_root_of_unity(int max_power) {
  return {"v^s != 1 for s=1.." + std::to_string(max_power), [max_power](const Scalar& v) {
            Scalar p = v;
            for (int s = 1; s <= max_power; ++s, p *= v) {
              if (p.is_one()) return false;
            }
            return true;
          }};
}

Sampler::Sampler(SamplerConfig cfg) : cfg_(cfg), gen_(cfg.seed) {
  if (cfg_.height < 1) throw UsageError("height bound must be positive");
  if (cfg_.max_retries < 1) throw UsageError("retry limit must be positive");
}

Scalar Sampler::candidate(std::uint64_t index) const {
  const auto B = static_cast<std::uint64_t>(cfg_.height);
  const std::uint64_t a = gen_.word(2 * index) % (2 * B);
  const std::uint64_t b = gen_.word(2 * index + 1) % B;
  // a in [0, 2B) maps to a nonzero numerator in [-B, -1] u [1, B].
  const long num = a < B ? static_cast<long>(a) + 1 : -static_cast<long>(a - B) - 1;
  Scalar v = Scalar::ratio(num, static_cast<long>(b) + 1);
  return cfg_.prime ? to_prime_field(v, cfg_.prime) : v;
}

Scalar Sampler::sample(const std::string& name, const std::vector<Constraint>& constraints) {
  for (int attempt = 0; attempt < cfg_.max_retries; ++attempt) {
    const std::uint64_t idx = next_++;
    Scalar v = candidate(idx);
    bool ok = !v.is_zero();
    for (const auto& c : constraints) {
      if (!ok) break;
      ok = c.holds(v);
    }
    if (ok) {
      log_.push_back({idx, name, v});
      return v;
    }
  }
  throw ExhaustionError("sampler exhausted " + std::to_string(cfg_.max_retries) +
                        " candidates for " + name);
}

}  // namespace wfid

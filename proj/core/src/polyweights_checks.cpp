#include "wfid/errors.hpp"
#include "wfid/polyweights.hpp"

namespace wfid {

Report verify_jing(const RunConfig& cfg) {
  if (cfg.ell < 1) throw UsageError("jing requires ell >= 1");
  return run_trials(cfg, [&](TrialContext& ctx) {
    const Scalar eta = ctx.draw("eta", {not_root_of_unity(cfg.ell + 1)});
    const auto t = ctx.draw_distinct("t", cfg.ell);
    const Scalar v = jing_sum(t, eta, cfg.mutate);
    return TrialOutcome{to_json(v), v.is_zero()};
  });
}

Report verify_id(const RunConfig& cfg) {
  const bool first = cfg.check == "id1";
  if (!first && cfg.check != "id2") throw UsageError("verify_id expects id1 or id2");
  if (cfg.ell < 1) throw UsageError("id checks require ell >= 1");
  if (!(1 <= cfg.i && cfg.i < cfg.j && cfg.j <= cfg.n)) {
    throw UsageError("id checks require 1 <= i < j <= n");
  }
  return run_trials(cfg, [&](TrialContext& ctx) {
    PolyParams p = sample_poly_params(ctx, cfg.ell, cfg.n);
    impose_id_condition(ctx, p, cfg.ell, cfg.i, cfg.j);
    const auto t = ctx.draw_distinct("t", cfg.ell);
    const Scalar v = first ? id1_sum(cfg.i, cfg.j, t, p, cfg.mutate) : id2_sum(cfg.j, t, p, cfg.mutate);
    return TrialOutcome{to_json(v), v.is_zero()};
  });
}

}  // namespace wfid

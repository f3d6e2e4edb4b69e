#include <functional>
#include <map>

#include "wfid/errors.hpp"
#include "wfid/uqrep.hpp"

namespace wfid {
namespace {

using Aux = std::pair<int, int>;
using AuxVector = std::map<Aux, TensorVector>;

WeightParams sample_weight_params(TrialContext& ctx, int ell, int n) {
  WeightParams wp;
  wp.q = ctx.draw("q", {not_root_of_unity(2 * ell + 2)});
  wp.s = ctx.draw_distinct("s", n);
  wp.z = ctx.draw_distinct("z", n);
  return wp;
}

void impose_resonance(TrialContext& ctx, WeightParams& wp, int ell, int i, int j) {
  if (ctx.config().lift_condition) {
    ctx.note("resonance z_i = s_i^2 s_j^2 q^(-2 ell) z_j lifted (negative control)");
    return;
  }
  wp.z[static_cast<std::size_t>(i - 1)] = wp.w(i) * wp.w(j) * wp.q.pow(-2L * ell) * wp.z_at(j);
  ctx.constraint("imposed z_" + std::to_string(i) + " := s_" + std::to_string(i) + "^2 s_" + std::to_string(j) +
                 "^2 q^(-" + std::to_string(2 * ell) + ") z_" + std::to_string(j));
}

// s_j^2 q^{-2r} z_j for r = 0..ell.
std::vector<Scalar> resonant_string(const WeightParams& wp, int ell, int j, bool mutate) {
  std::vector<Scalar> us;
  for (int r = 0; r <= ell; ++r) us.push_back(wp.w(j) * wp.q.pow(-2L * r) * wp.z_at(j));
  if (mutate) us[0] *= Scalar(2);
  return us;
}

void require_pair(const RunConfig& cfg) {
  if (cfg.ell < 0) throw UsageError("ell must be >= 0");
  if (!(1 <= cfg.i && cfg.i < cfg.j && cfg.j <= cfg.n)) throw UsageError("this check requires 1 <= i < j <= n");
}

void add_into(AuxVector& big, const Aux& k, const TensorVector& v) {
  auto& slot = big[k];
  slot += v;
  if (slot.is_zero()) big.erase(k);
}

AuxVector apply_r(const AuxVector& big, const RMatrix& R) {
  AuxVector res;
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) {
      for (const auto& [cd, vec] : big) {
        const Scalar& c = R.e[RMatrix::slot(a, b)][RMatrix::slot(cd.first, cd.second)];
        if (!c.is_zero()) add_into(res, {a, b}, vec * c);
      }
    }
  }
  return res;
}

// L(u) acting in auxiliary slot 1 or 2.
AuxVector apply_l(const AuxVector& big, int slot, const Scalar& u, const TensorSpace& sp) {
  AuxVector res;
  for (const auto& [cd, vec] : big) {
    for (int i = 1; i <= 2; ++i) {
      if (slot == 1) {
        add_into(res, {i, cd.second}, sp.apply(i, cd.first, u, vec));
      } else {
        add_into(res, {cd.first, i}, sp.apply(i, cd.second, u, vec));
      }
    }
  }
  return res;
}

std::vector<MultiIndex> indices_up_to(int factors, int depth) {
  std::vector<MultiIndex> out;
  MultiIndex cur(static_cast<std::size_t>(factors), 0);
  std::function<void(int, int)> grow = [&](int f, int left) {
    if (f == factors) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[static_cast<std::size_t>(f)] = k;
      grow(f + 1, left - k);
    }
  };
  grow(0, depth);
  return out;
}

// R(u/z) L_1(u) L_2(z) = L_2(z) L_1(u) R(u/z) on every basis vector up to depth d.
bool rll_holds(const WeightParams& wp, const Scalar& u, const Scalar& z, int d, bool mutate) {
  const TensorSpace sp(wp, TensorSpace::Order::Forward, d + 2, d + 2);
  const RMatrix R = RMatrix::at(u / z, wp.q);
  RMatrix Rl = R;
  if (mutate) Rl.e[RMatrix::slot(1, 2)][RMatrix::slot(2, 1)] *= Scalar(2);
  for (const auto& k : indices_up_to(wp.n(), d)) {
    for (int c = 1; c <= 2; ++c) {
      for (int e = 1; e <= 2; ++e) {
        const AuxVector big{{{c, e}, TensorVector::basis(k)}};
        const auto lhs = apply_r(apply_l(apply_l(big, 2, z, sp), 1, u, sp), Rl);
        const auto rhs = apply_l(apply_l(apply_r(big, R), 1, u, sp), 2, z, sp);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

}  // namespace

Report verify_rll(const RunConfig& cfg) {
  constexpr int depth = 2;
  return run_trials(cfg, [&](TrialContext& ctx) {
    const WeightParams all = sample_weight_params(ctx, depth, 2);
    nlohmann::json v = nlohmann::json::array();
    bool holds = true, agree = true;
    for (int k = 0; k < 3; ++k) {
      const Scalar u = ctx.draw("u" + std::to_string(k + 1));
      const Scalar z = ctx.draw("zeta" + std::to_string(k + 1), {distinct_from({u}, "u")});
      for (int factors = 1; factors <= 2; ++factors) {
        WeightParams wp{all.q, {all.s.begin(), all.s.begin() + factors}, {all.z.begin(), all.z.begin() + factors}};
        const bool ok = rll_holds(wp, u, z, depth, cfg.mutate);
        bool ok_p = ok;
        if (cfg.field == FieldMode::Rational) {
          ok_p = rll_holds(wp.to_prime(cfg.prime), to_prime_field(u, cfg.prime), to_prime_field(z, cfg.prime), depth,
                           cfg.mutate);
        }
        holds = holds && ok;
        agree = agree && ok == ok_p;
        v.push_back({{"pair", k + 1}, {"factors", factors}, {"holds", ok}, {"prime_field_holds", ok_p}});
      }
    }
    ctx.note(cfg.field == FieldMode::Rational ? (agree ? "prime-field recomputation agrees with the rational verdict"
                                                       : "prime-field recomputation DISAGREES with the rational verdict")
                                              : "run in the prime field; no separate agreement pass");
    if (!agree) throw ConsistencyError("rational and prime-field RLL verdicts differ");
    return TrialOutcome{v, holds};
  });
}

Report verify_kbi(const RunConfig& cfg) {
  if (cfg.ell < 0 || cfg.n < 1) throw UsageError("kbi requires ell >= 0 and n >= 1");
  const std::string& d = cfg.direction;
  const bool raising = d == "both" || d == "raising" || d == "raising-12";
  const bool lowering = d == "both" || d == "lowering" || d == "lowering-21";
  if (!raising && !lowering) throw UsageError("direction must be raising, lowering or both");
  const int l = cfg.ell, n = cfg.n;
  return run_trials(cfg, [&](TrialContext& ctx) {
    const WeightParams wp = sample_weight_params(ctx, l, n);
    const auto t = ctx.draw_distinct("t", l);
    const PolyParams pp = param_map(wp);
    const TensorSpace sp(wp, TensorSpace::Order::Forward, l + 2, l + 2);
    const Scalar q = wp.q, qq = q - q.inverse();
    const auto parts = enumerate(l, n);
    bool holds = true;
    bool first = true;
    nlohmann::json v;
    if (raising) {
      const TensorVector vec = sp.apply_string(1, 2, t, sp.vacuum());
      Scalar pre = qq.pow(l);
      for (int m = 1; m <= n; ++m) pre *= (-wp.z_at(m)).pow(-l);
      TensorVector expected;
      for (const auto& lam : parts) {
        const auto w = lam.multiplicities();
        Scalar c = pre * weight(lam, t, pp, Variant::Plain);
        for (int j = 1; j <= n; ++j) {
          for (int k = j + 1; k <= n; ++k) {
            const int wj = w[static_cast<std::size_t>(j - 1)], wk = w[static_cast<std::size_t>(k - 1)];
            c *= wp.s_at(j).pow(wk) * wp.s_at(k).pow(-wj) * q.pow(-static_cast<long>(wj) * wk);
          }
        }
        if (cfg.mutate && first) c *= Scalar(2);
        first = false;
        expected.add(MultiIndex(w.begin(), w.end()), c);
      }
      holds = holds && vec == expected;
      v["raising"] = to_json(vec);
    }
    if (lowering) {
      nlohmann::json low = nlohmann::json::array();
      for (const auto& lam : parts) {
        const auto w = lam.multiplicities();
        const MultiIndex key(w.begin(), w.end());
        const TensorVector vec = sp.apply_string(2, 1, t, TensorVector::basis(key));
        Scalar c = l % 2 ? Scalar(-1) : Scalar(1);
        c *= weight(lam, t, pp, Variant::Primed);
        for (int m = 1; m <= n; ++m) {
          const int wm = w[static_cast<std::size_t>(m - 1)];
          c *= (-wp.z_at(m)).pow(wm - l);
          const Scalar s2 = wp.w(m);
          for (int s = 1; s <= wm; ++s) {
            c *= (q.pow(s) - q.pow(-s)) * (s2 * q.pow(1 - s) - s2.inverse() * q.pow(s - 1)) / qq;
          }
        }
        for (int j = 1; j <= n; ++j) {
          for (int k = j + 1; k <= n; ++k) {
            const int wj = w[static_cast<std::size_t>(j - 1)], wk = w[static_cast<std::size_t>(k - 1)];
            c *= wp.s_at(k).pow(wj) * wp.s_at(j).pow(-wk) * q.pow(-static_cast<long>(wj) * wk);
          }
        }
        if (cfg.mutate && first) c *= Scalar(2);
        first = false;
        holds = holds && vec == TensorVector::basis(MultiIndex(static_cast<std::size_t>(n), 0), c);
        low.push_back(to_json(vec));
      }
      v["lowering"] = low;
    }
    return TrialOutcome{v, holds};
  });
}

Report verify_bc(const RunConfig& cfg) {
  const bool first = cfg.check == "bc1";
  if (!first && cfg.check != "bc2") throw UsageError("verify_bc expects bc1 or bc2");
  require_pair(cfg);
  const int l = cfg.ell;
  return run_trials(cfg, [&](TrialContext& ctx) {
    WeightParams wp = sample_weight_params(ctx, l, cfg.n);
    impose_resonance(ctx, wp, l, cfg.i, cfg.j);
    const auto t = ctx.draw_distinct("t", l + 1);
    const auto lowers = resonant_string(wp, l, cfg.j, cfg.mutate);
    const auto order = first ? TensorSpace::Order::Forward : TensorSpace::Order::Reversed;
    const TensorSpace sp(wp, order, l + 2, l + 2);
    auto evaluate = [&](const std::vector<Scalar>& ts) {
      if (first) return sp.apply_string(2, 1, lowers, sp.apply_string(1, 2, ts, sp.vacuum()));
      return sp.apply_string(2, 1, ts, sp.apply_string(1, 2, lowers, sp.vacuum()));
    };
    const TensorVector v = evaluate(t);
    const TensorVector literal = evaluate(std::vector<Scalar>(t.begin(), t.begin() + l));
    ctx.note("t-string of length ell+1; with length ell the string gives " +
             std::string(literal.is_zero() ? "zero" : "a nonzero vector"));
    return TrialOutcome{to_json(v), v.is_zero()};
  });
}

Report verify_singular(const RunConfig& cfg) {
  require_pair(cfg);
  const int l = cfg.ell, n = cfg.n;
  return run_trials(cfg, [&](TrialContext& ctx) {
    WeightParams wp = sample_weight_params(ctx, l, n);
    impose_resonance(ctx, wp, l, cfg.i, cfg.j);
    const auto ups = resonant_string(wp, l, cfg.j, cfg.mutate);
    const TensorSpace sp(wp, TensorSpace::Order::Reversed, l + 2, l + 2);
    const TensorVector tv = sp.apply_string(1, 2, ups, sp.vacuum());
    if (tv.is_zero()) throw DegenerateError("the candidate singular vector vanished");
    const auto us = ctx.draw_distinct("u", n + l + 2);
    bool holds = true;
    nlohmann::json v = nlohmann::json::array();
    for (const auto& u : us) {
      const TensorVector r = sp.apply(2, 1, u, tv);
      holds = holds && r.is_zero();
      v.push_back(to_json(r));
    }
    return TrialOutcome{nlohmann::json{{"vector", to_json(tv)}, {"lowered", v}}, holds};
  });
}

Report verify_submodule(const RunConfig& cfg) {
  require_pair(cfg);
  if (cfg.word_len < 0 || cfg.word_len > 4) throw UsageError("word length must lie in [0, 4]");
  const int l = cfg.ell, n = cfg.n, wl = cfg.word_len;
  return run_trials(cfg, [&](TrialContext& ctx) {
    WeightParams wp = sample_weight_params(ctx, l, n);
    impose_resonance(ctx, wp, l, cfg.i, cfg.j);
    const auto lowers = resonant_string(wp, l, cfg.j, cfg.mutate);
    const int cap = wl + l + 2;
    const TensorSpace sp(wp, TensorSpace::Order::Forward, cap, cap);
    // One spectral value per (word position, entry).
    std::vector<std::array<Scalar, 4>> spectral(static_cast<std::size_t>(wl));
    for (int pos = 0; pos < wl; ++pos) {
      for (int e = 0; e < 4; ++e) {
        spectral[static_cast<std::size_t>(pos)][static_cast<std::size_t>(e)] =
            ctx.draw("u" + std::to_string(pos + 1) + "_" + std::to_string(e / 2 + 1) + std::to_string(e % 2 + 1));
      }
    }
    std::vector<TensorVector> layer{sp.vacuum()}, span{sp.vacuum()};
    for (int pos = 0; pos < wl; ++pos) {
      std::vector<TensorVector> next;
      for (const auto& w : layer) {
        for (int e = 0; e < 4; ++e) {
          next.push_back(sp.apply(e / 2 + 1, e % 2 + 1, spectral[static_cast<std::size_t>(pos)][static_cast<std::size_t>(e)], w));
        }
      }
      span.insert(span.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    int nonzero = 0, survivors = 0;
    for (const auto& w : span) {
      if (w.is_zero()) continue;
      ++nonzero;
      if (!sp.apply_string(2, 1, lowers, w).is_zero()) ++survivors;
    }
    ctx.note(std::to_string(span.size()) + " words of length <= " + std::to_string(wl) + " in all four entries");
    return TrialOutcome{nlohmann::json{{"spanning_vectors", nonzero}, {"not_annihilated", survivors}}, survivors == 0};
  });
}

}  // namespace wfid

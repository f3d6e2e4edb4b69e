#pragma once

#include <vector>

#include "wfid/partitions.hpp"
#include "wfid/report.hpp"
#include "wfid/scalar.hpp"

namespace wfid {

// x_1..x_n, y_1..y_n and eta; accessors are 1-based.
struct PolyParams {
  std::vector<Scalar> xs, ys;
  Scalar eta;

  int n() const { return static_cast<int>(xs.size()); }
  const Scalar& x(int m) const { return xs[static_cast<std::size_t>(m - 1)]; }
  const Scalar& y(int m) const { return ys[static_cast<std::size_t>(m - 1)]; }
  // (y, x, 1/eta): the data the dual weight is evaluated at.
  PolyParams dual() const;
  // Drop x_n, y_n.
  PolyParams truncated() const;
  // Drop x_1, y_1.
  PolyParams truncated_front() const;
};

enum class Variant { Plain, Primed };

// Plain: u prod_{j<m}(u - y_j) prod_{k>m}(u - x_k). Primed: prod_{j<m}(u - x_j) prod_{k>m}(u - y_k).
Scalar x_factor(const Scalar& u, int m, const PolyParams& p, Variant v);

// prod_m prod_{s=1}^{omega_m} (1 - eta)/(1 - eta^s).
Scalar r_prefactor(const Partition& lambda, const Scalar& eta);

// Full symmetrization over S_ell. Throws DivisionByZero if two t coincide.
Scalar weight(const Partition& lambda, const std::vector<Scalar>& t, const PolyParams& p, Variant v);

// The identity-permutation summand (with r_lambda).
Scalar identity_term(const Partition& lambda, const std::vector<Scalar>& t, const PolyParams& p,
                     Variant v);

// At x>lambda or y<lambda a single summand survives: the one pairing the
// positions with lambda_a = m with block m. Within a block the point order is
// kept for (P, x) and (P', y) and reversed for (P, y) and (P', x). Returns the
// point coordinates rearranged so that this summand is the identity one.
std::vector<Scalar> contributing_order(const Partition& lambda, const EvalPoint& pt, Variant v);

// Weight at a special point: the single-summand shortcut when pt belongs to
// lambda, the full symmetrized sum otherwise.
Scalar weight_at(const Partition& lambda, const EvalPoint& pt, const PolyParams& p, Variant v);

// (1/prod omega!) sum_sigma t_{sigma 1}^{lambda_1} ... t_{sigma l}^{lambda_l}.
Scalar q_monomial(const Partition& lambda, const std::vector<Scalar>& t);
// Sum over distinct rearrangements of the exponent multiset e (entries may be 0).
Scalar monomial_symmetric(const std::vector<int>& exponents, const std::vector<Scalar>& t);

Scalar norm_N(const Partition& lambda, const PolyParams& p);
Scalar c_coeff(const Partition& lambda, int i, int j, const PolyParams& p);

// Double sum of the Jing identity. mutate perturbs the k = 0 coefficient.
Scalar jing_sum(const std::vector<Scalar>& t, const Scalar& eta, bool mutate = false);

// sum_{lambda in window} c_lambda P_lambda(t).
Scalar id1_sum(int i, int j, const std::vector<Scalar>& t, const PolyParams& p, bool mutate = false);
// sum_lambda P'_lambda(x>kappa^(j)) N_lambda P_lambda(t).
Scalar id2_sum(int j, const std::vector<Scalar>& t, const PolyParams& p, bool mutate = false);

// Samples x, y, eta for ell variables; eta avoids roots of unity up to ell + 1.
PolyParams sample_poly_params(TrialContext& ctx, int ell, int n);
// Imposes x_j := eta^{ell-1} y_i unless the run lifts the condition.
void impose_id_condition(TrialContext& ctx, PolyParams& p, int ell, int i, int j);

Report verify_jing(const RunConfig& cfg);
Report verify_id(const RunConfig& cfg);  // cfg.check is "id1" or "id2"

}  // namespace wfid

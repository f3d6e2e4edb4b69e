#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "wfid/linalg.hpp"
#include "wfid/partitions.hpp"
#include "wfid/polyweights.hpp"
#include "wfid/report.hpp"
#include "wfid/residue_engine.hpp"

namespace wfid {

using Evaluator = std::function<Scalar(const std::vector<Scalar>&)>;

// Product of factors sum_v c_v t_v + d, each in the numerator or denominator.
class FactorizedKernel {
 public:
  using Value = Scalar;

  struct Term {
    std::vector<std::pair<int, Scalar>> coeffs;
    Scalar constant;
    Position pos = Position::Numerator;
    FactorTag tag;
    int min_var = 0;

    Scalar value(const std::vector<Scalar>& pt) const;
    bool vanishes(const std::vector<Scalar>& pt) const { return value(pt).is_zero(); }
  };

  FactorizedKernel(int ell, std::vector<Term> terms);

  // S(t) = prod_a prod_m (t_a - x_m)(t_a - y_m) prod_{a != b} (t_a - eta t_b)/(t_a - t_b).
  static FactorizedKernel weight_kernel(int ell, const PolyParams& p);

  int ell() const { return ell_; }
  const std::vector<Term>& terms() const { return terms_; }
  Scalar one() const { return Scalar(1); }
  // 1/(c_a t_a): the cancelled factor c_a (t_a - t_a*) together with dt_a/t_a.
  Scalar pole_weight(const Term& term, const std::vector<Scalar>& pt, int a) const;
  Scalar term_value(const Term& term, const std::vector<Scalar>& pt) const { return term.value(pt); }

  // Direct product; throws DivisionByZero when a denominator factor vanishes.
  Scalar evaluate(const std::vector<Scalar>& pt) const;
  // Same product with one term left out.
  Scalar evaluate_without(std::size_t skip, const std::vector<Scalar>& pt) const;

 private:
  int ell_;
  std::vector<Term> terms_;
};

// W with Res(fg/S prod dt/t) at pt = W * fg(pt).
Scalar residue_weight(const FactorizedKernel& kernel, const EvalPoint& pt);
Scalar iterated_residue(const Evaluator& f, const Evaluator& g, const FactorizedKernel& kernel,
                        const EvalPoint& pt);

// M_kappa = 1/Res(1/S prod dt/t), with the pole at each step fixed by the
// geometry of the point; extra vanishing numerator factors make it zero.
Scalar m_kappa(const FactorizedKernel& kernel, const EvalPoint& pt);

struct ResidueSums {
  Scalar x_side;
  Scalar y_side;
};
ResidueSums residue_sums(const Evaluator& fg, int ell, const PolyParams& p);

// x-side residue sum; throws ConsistencyError unless it equals (-1)^ell times the y-side sum.
Scalar scalar_product_S(const Evaluator& f, const Evaluator& g, int ell, const PolyParams& p);

// [<P'_lambda, P_mu>_S] over enumerate(ell, n), with the y-side self-check.
Matrix<Scalar> gram_pp(int ell, const PolyParams& p);

struct Transition {
  std::vector<Partition> parts;
  Matrix<Scalar> Q;  // Q[lambda][kappa] = Q_lambda(x>kappa)
  Matrix<Scalar> P;  // P[lambda][kappa] = P_lambda(x>kappa)
  Matrix<Scalar> A;  // P = A Q
  Matrix<Scalar> B;  // inverse of Q
};
Transition transition_matrix(int ell, const PolyParams& p);

// [sum_{kappa, lambda} M_kappa^{-1} Q_mu(x>kappa) P'_lambda(x>kappa) N_lambda A_{lambda nu}]_{mu nu}.
Matrix<Scalar> mn_product(const Transition& tr, const PolyParams& p);

long D_exponent(int n, int ell, int s);
Scalar detq_closed_form(int ell, const PolyParams& p);
Scalar deta_closed_form(int ell, const PolyParams& p);

Report verify_pp(const RunConfig& cfg);
Report verify_resI(const RunConfig& cfg);
Report verify_mn(const RunConfig& cfg);
Report verify_det(const RunConfig& cfg);  // cfg.check is "detq" or "deta"

}  // namespace wfid

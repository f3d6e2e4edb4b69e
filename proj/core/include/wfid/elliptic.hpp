#pragma once

#include <vector>

#include "wfid/linalg.hpp"
#include "wfid/partitions.hpp"
#include "wfid/polyweights.hpp"
#include "wfid/pseries.hpp"
#include "wfid/report.hpp"
#include "wfid/residue_engine.hpp"

namespace wfid {

struct EllParams {
  std::vector<Scalar> xs, ys;
  Scalar eta;
  Scalar alpha;
  int order = 8;

  int n() const { return static_cast<int>(xs.size()); }
  const Scalar& x(int m) const { return xs[static_cast<std::size_t>(m - 1)]; }
  const Scalar& y(int m) const { return ys[static_cast<std::size_t>(m - 1)]; }
  // alpha' prod_{j<m} x_j / y_j for a given (possibly shifted) alpha'.
  Scalar alpha_m(int m, const Scalar& shifted_alpha) const;
  Scalar alpha_m(int m) const { return alpha_m(m, alpha); }
  // alpha prod_{j<m} eta^{-2 omega_j} x_j / y_j.
  Scalar alpha_ml(int m, const Partition& lambda) const;
  // (y, x, 1/eta, 1/alpha).
  EllParams dual() const;
  PSeries th(const Scalar& u) const { return theta(u, order); }
  PSeries one() const { return PSeries::constant(Scalar(1), order); }
};

// Which dynamical shift the primed weight uses at position a.
// Matched: alpha eta^{2a-2l}, the shift that makes the duality, the residue
// sign and the biorthogonality hold. Printed: alpha eta^{2l-2a}.
enum class PrimedShift { Matched, Printed };

PSeries z_factor(const Scalar& u, int m, const EllParams& p, const Scalar& shifted_alpha, Variant v);
PSeries rho_prefactor(const Partition& lambda, const EllParams& p);
PSeries xi_weight(const Partition& lambda, const std::vector<Scalar>& t, const EllParams& p, Variant v,
                  PrimedShift shift = PrimedShift::Matched);

PSeries norm_D(const Partition& lambda, const EllParams& p);
PSeries C_coeff(const Partition& lambda, int i, int j, const EllParams& p);

PSeries idp1_sum(int i, int j, const std::vector<Scalar>& t, const EllParams& p, bool mutate = false);
// The n = 2 example with free beta. mutate perturbs the k = 0 coefficient.
PSeries idp2_sum(const std::vector<Scalar>& t, const Scalar& eta, const Scalar& beta, int order,
                 bool mutate = false);
// sum_lambda Xi'_lambda(x>kappa^(j)) D_lambda Xi_lambda(t).
PSeries xi_id2_sum(int j, const std::vector<Scalar>& t, const EllParams& p);

// Product of theta(c prod_v t_v^{e_v}) factors (e_v = +-1).
class EllipticKernel {
 public:
  using Value = PSeries;

  struct Term {
    Scalar constant;
    std::vector<std::pair<int, int>> exps;
    Position pos = Position::Numerator;
    FactorTag tag;
    int min_var = 0;

    Scalar argument(const std::vector<Scalar>& pt) const;
    bool vanishes(const std::vector<Scalar>& pt) const { return argument(pt).is_one(); }
  };

  // Omega(t) = prod_a prod_m theta(t_a/x_m) theta(t_a/y_m) prod_{a != b} theta(eta t_a/t_b)/theta(t_a/t_b).
  static EllipticKernel omega_kernel(int ell, const EllParams& p);

  const std::vector<Term>& terms() const { return terms_; }
  PSeries one() const { return PSeries::constant(Scalar(1), order_); }
  // Near the zero of theta(c t_a^e), 1/(t_a theta) has residue -e/theta_reduced(1).
  PSeries pole_weight(const Term& term, const std::vector<Scalar>& pt, int a) const;
  PSeries term_value(const Term& term, const std::vector<Scalar>& pt) const;
  PSeries evaluate(const std::vector<Scalar>& pt) const;

 private:
  EllipticKernel(int ell, int order, std::vector<Term> terms);
  int ell_;
  int order_;
  std::vector<Term> terms_;
  PSeries reduced_at_one_;
};

struct OmegaGram {
  Matrix<PSeries> x_side;
  Matrix<PSeries> y_side;
};
// [<Xi'_lambda, Xi_mu>_Omega] from x> and y< residue sums.
OmegaGram gram_xx(int ell, const EllParams& p, PrimedShift shift = PrimedShift::Matched);

// vartheta_m(u) = u^{m-1} theta(-p^{m-1} eta^{l-1} alpha^{-1} X (-u)^n; p^n) (p;p)^n / (p^n;p^n)
// with X = prod x_m^{-1}, or prod x_m when printed_product is set.
PSeries vartheta(int m, const Scalar& u, int ell, const EllParams& p, bool printed_product = false);
PSeries theta_lambda(const Partition& lambda, const std::vector<Scalar>& t, const EllParams& p,
                     bool printed_product = false);

struct EllTransition {
  std::vector<Partition> parts;
  Matrix<PSeries> Xi;     // Xi[lambda][kappa] = Xi_lambda(x>kappa)
  Matrix<PSeries> Theta;  // Theta[lambda][kappa] = Theta_lambda(x>kappa)
  Matrix<PSeries> A;      // Xi = A Theta
};
EllTransition ell_transition(int ell, const EllParams& p, bool printed_product = false);

long d_exponent(int n, int m, int ell, int s);
// Right sides of the two determinant formulas without the constant K^{+-1}.
PSeries detT_rhs(int ell, const EllParams& p, bool printed_exponent = false);
PSeries detAe_rhs(int ell, const EllParams& p);

EllParams sample_ell_params(TrialContext& ctx, int ell, int n, int order);

Report verify_idp(const RunConfig& cfg);  // idp1 | idp2
Report verify_xx(const RunConfig& cfg);
Report verify_xt(const RunConfig& cfg);
Report verify_detprod(const RunConfig& cfg);
Report verify_theta(const RunConfig& cfg);

}  // namespace wfid

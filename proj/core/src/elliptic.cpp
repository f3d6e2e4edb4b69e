#include "wfid/elliptic.hpp"

#include <algorithm>
#include <numeric>

#include "wfid/errors.hpp"
#include "wfid/residues.hpp"

namespace wfid {
namespace {

// theta(c p^v; p^e) for 0 <= v <= e, expanded without reading c p^v as a truncated series.
PSeries theta_monomial(const Scalar& c, int v, int e, int order) {
  return pochhammer(PSeries::monomial(c, v, order), e) *
         pochhammer(PSeries::monomial(c.inverse(), e - v, order), e) *
         pochhammer(PSeries::monomial(Scalar(1), e, order), e);
}

template <class F>
PSeries perm_sum(int l, const PSeries& zero, F&& term) {
  std::vector<int> idx(static_cast<std::size_t>(l));
  std::iota(idx.begin(), idx.end(), 0);
  PSeries total = zero;
  do {
    total += term(idx);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return total;
}

}  // namespace

Scalar EllParams::alpha_m(int m, const Scalar& shifted_alpha) const {
  Scalar r = shifted_alpha;
  for (int j = 1; j < m; ++j) r *= x(j) / y(j);
  return r;
}

Scalar EllParams::alpha_ml(int m, const Partition& lambda) const {
  Scalar r = alpha;
  for (int j = 1; j < m; ++j) r *= eta.pow(-2L * lambda.omega(j)) * x(j) / y(j);
  return r;
}

EllParams EllParams::dual() const { return EllParams{ys, xs, eta.inverse(), alpha.inverse(), order}; }

PSeries z_factor(const Scalar& u, int m, const EllParams& p, const Scalar& shifted_alpha, Variant v) {
  const int n = p.n();
  if (m < 1 || m > n) throw UsageError("z_factor: m out of range");
  const Scalar am = p.alpha_m(m, shifted_alpha);
  if (v == Variant::Plain) {
    PSeries r = p.th(u / (am * p.x(m)));
    for (int j = 1; j < m; ++j) r *= p.th(u / p.y(j));
    for (int k = m + 1; k <= n; ++k) r *= p.th(u / p.x(k));
    return r;
  }
  PSeries r = p.th(am * u / p.y(m));
  for (int j = 1; j < m; ++j) r *= p.th(u / p.x(j));
  for (int k = m + 1; k <= n; ++k) r *= p.th(u / p.y(k));
  return r;
}

PSeries rho_prefactor(const Partition& lambda, const EllParams& p) {
  PSeries r = p.one();
  const PSeries te = p.th(p.eta);
  for (int m = 1; m <= lambda.n(); ++m) {
    for (int s = 1; s <= lambda.omega(m); ++s) r *= te / p.th(p.eta.pow(s));
  }
  return r;
}

PSeries xi_weight(const Partition& lambda, const std::vector<Scalar>& t, const EllParams& p, Variant v,
                  PrimedShift shift) {
  const int l = lambda.length();
  if (static_cast<int>(t.size()) != l) throw UsageError("xi_weight: point length differs from ell");
  const auto L = static_cast<std::size_t>(l);
  // z[c][a]: the factor for coordinate c sitting at position a.
  Matrix<PSeries> z(L, std::vector<PSeries>(L, p.one()));
  for (int a = 1; a <= l; ++a) {
    const long e = (v == Variant::Primed && shift == PrimedShift::Printed) ? 2L * l - 2L * a : 2L * a - 2L * l;
    const Scalar sa = p.alpha * p.eta.pow(e);
    for (std::size_t c = 0; c < L; ++c) {
      z[c][static_cast<std::size_t>(a - 1)] = z_factor(t[c], lambda.at(a), p, sa, v);
    }
  }
  // pair[c][d]: the ratio for coordinate c before coordinate d.
  Matrix<PSeries> pair(L, std::vector<PSeries>(L, p.one()));
  for (std::size_t c = 0; c < L; ++c) {
    for (std::size_t d = 0; d < L; ++d) {
      if (c == d) continue;
      const Scalar r = v == Variant::Plain ? t[d] / t[c] : t[c] / t[d];
      pair[c][d] = p.th(p.eta * r) / p.th(r);
    }
  }
  const PSeries sum = perm_sum(l, PSeries(p.order), [&](const std::vector<int>& sg) {
    PSeries term = p.one();
    for (std::size_t a = 0; a < L; ++a) {
      term *= z[static_cast<std::size_t>(sg[a])][a];
      for (std::size_t b = a + 1; b < L; ++b) {
        term *= pair[static_cast<std::size_t>(sg[a])][static_cast<std::size_t>(sg[b])];
      }
    }
    return term;
  });
  return rho_prefactor(lambda, p) * sum;
}

PSeries norm_D(const Partition& lambda, const EllParams& p) {
  const int l = lambda.length();
  PSeries r = PSeries::constant(l % 2 ? Scalar(-1) : Scalar(1), p.order);
  const PSeries e3 = euler_cubed(p.order);
  const PSeries te = p.th(p.eta);
  for (int m = 1; m <= lambda.n(); ++m) {
    const int w = lambda.omega(m);
    if (w == 0) continue;
    const Scalar aml = p.alpha_ml(m, lambda);
    const Scalar xy = p.x(m) / p.y(m);
    for (int s = 0; s < w; ++s) {
      r *= e3 * p.th(p.eta.pow(s + 1)) * p.th(p.eta.pow(-s) * xy);
      r /= te * p.th(p.eta.pow(s) / aml) * p.th(p.eta.pow(1 - s - w) * aml * xy);
    }
  }
  return r;
}

PSeries C_coeff(const Partition& lambda, int i, int j, const EllParams& p) {
  if (!(1 <= i && i < j && j <= p.n())) throw UsageError("C_coeff requires 1 <= i < j <= n");
  if (!lambda.within(i, j)) throw UsageError("C_coeff: partition outside the window [i, j]");
  const int l = lambda.length();
  const int wi = lambda.omega(i), wj = lambda.omega(j);
  const Scalar ai = p.alpha_m(i);
  PSeries r = PSeries::constant((ai * p.x(i) / p.y(i)).pow(wi) * p.eta.pow(-static_cast<long>(wi) * (wi - 1)),
                                p.order);
  for (int k = i + 1; k < j; ++k) {
    const int wk = lambda.omega(k);
    const Scalar akl = p.alpha_ml(k, lambda);
    const Scalar xy = p.x(k) / p.y(k);
    for (int s = 0; s < wk; ++s) {
      r *= p.th(p.eta.pow(-s) * xy);
      r /= p.th(p.eta.pow(s) / akl) * p.th(p.eta.pow(1 - s - wk) * akl * xy);
    }
  }
  const Scalar ail = p.alpha_ml(i, lambda), ajl = p.alpha_ml(j, lambda);
  for (int s = 0; s < wi; ++s) r /= p.th(p.eta.pow(1 - s - wi) * ail * p.x(i) / p.y(i));
  for (int s = 0; s < wj; ++s) r /= p.th(p.eta.pow(s) / ajl);
  for (int a = wj + 1; a <= l - wi; ++a) {
    const int la = lambda.at(a);
    r *= p.th(p.alpha_m(la) * p.eta.pow(a - l) * p.y(i) / p.y(la));
  }
  for (int a = 1; a <= l; ++a) {
    const int la = lambda.at(a);
    const Scalar ey = p.eta.pow(l - a) * p.y(i);
    for (int k = i + 1; k < la; ++k) r *= p.th(ey / p.x(k));
    for (int m = la + 1; m < j; ++m) r *= p.th(ey / p.y(m));
  }
  return r;
}

PSeries idp1_sum(int i, int j, const std::vector<Scalar>& t, const EllParams& p, bool mutate) {
  const int l = static_cast<int>(t.size());
  PSeries total(p.order);
  bool first = true;
  for (const auto& lambda : enumerate_window(l, p.n(), i, j)) {
    PSeries c = C_coeff(lambda, i, j, p);
    if (mutate && first) c *= Scalar(2);
    first = false;
    total += c * xi_weight(lambda, t, p, Variant::Plain);
  }
  return total;
}

PSeries idp2_sum(const std::vector<Scalar>& t, const Scalar& eta, const Scalar& beta, int order, bool mutate) {
  const int l = static_cast<int>(t.size());
  const auto L = static_cast<std::size_t>(l);
  auto th = [order](const Scalar& u) { return theta(u, order); };
  const PSeries one = PSeries::constant(Scalar(1), order);
  // head[c][a]: factor of coordinate c at 1-based position a+1, for a <= k and a > k.
  Matrix<PSeries> low(L, std::vector<PSeries>(L, one)), high(L, std::vector<PSeries>(L, one));
  for (std::size_t c = 0; c < L; ++c) {
    for (int a = 1; a <= l; ++a) {
      low[c][static_cast<std::size_t>(a - 1)] = th(t[c]) * th(eta.pow(2 - 2 * a - l) * t[c] / beta);
      high[c][static_cast<std::size_t>(a - 1)] = th(eta.pow(1 - l) * t[c]) * th(eta.pow(1 - 2 * a) * t[c] / beta);
    }
  }
  Matrix<PSeries> pair(L, std::vector<PSeries>(L, one));
  for (std::size_t c = 0; c < L; ++c) {
    for (std::size_t d = 0; d < L; ++d) {
      if (c != d) pair[c][d] = th(eta * t[d] / t[c]) / th(t[d] / t[c]);
    }
  }
  PSeries total(order);
  for (int k = 0; k <= l; ++k) {
    PSeries c = th(eta.pow(2 * k) * beta);
    if (k % 2) c = -c;
    for (int s = 0; s < k; ++s) {
      c *= eta.pow(s);
      c *= th(eta.pow(l - s)) * th(eta.pow(s) * beta);
      c /= th(eta.pow(s + 1)) * th(eta.pow(s + l + 1) * beta);
    }
    if (mutate && k == 0) c *= Scalar(2);
    const PSeries inner = perm_sum(l, PSeries(order), [&](const std::vector<int>& sg) {
      PSeries term = one;
      for (std::size_t a = 0; a < L; ++a) {
        const auto c0 = static_cast<std::size_t>(sg[a]);
        term *= static_cast<int>(a) < k ? low[c0][a] : high[c0][a];
        for (std::size_t b = a + 1; b < L; ++b) term *= pair[c0][static_cast<std::size_t>(sg[b])];
      }
      return term;
    });
    total += c * inner;
  }
  return total;
}

PSeries xi_id2_sum(int j, const std::vector<Scalar>& t, const EllParams& p) {
  const int l = static_cast<int>(t.size());
  const auto kap = x_point(kappa(l, j, p.n()), p.xs, p.eta);
  PSeries total(p.order);
  for (const auto& lambda : enumerate(l, p.n())) {
    total += xi_weight(lambda, kap.coords, p, Variant::Primed) * norm_D(lambda, p) *
             xi_weight(lambda, t, p, Variant::Plain);
  }
  return total;
}

Scalar EllipticKernel::Term::argument(const std::vector<Scalar>& pt) const {
  Scalar v = constant;
  for (const auto& [var, e] : exps) {
    const Scalar& tv = pt[static_cast<std::size_t>(var)];
    v *= e > 0 ? tv : tv.inverse();
  }
  return v;
}

EllipticKernel::EllipticKernel(int ell, int order, std::vector<Term> terms)
    : ell_(ell), order_(order), terms_(std::move(terms)), reduced_at_one_(theta_reduced(Scalar(1), order)) {
  for (auto& t : terms_) {
    t.min_var = ell_;
    for (const auto& ve : t.exps) t.min_var = std::min(t.min_var, ve.first);
  }
}

EllipticKernel EllipticKernel::omega_kernel(int ell, const EllParams& p) {
  std::vector<Term> terms;
  for (int a = 0; a < ell; ++a) {
    for (int m = 1; m <= p.n(); ++m) {
      terms.push_back({p.x(m).inverse(), {{a, 1}}, Position::Numerator,
                       {FactorTag::Kind::Point, a, -1, m, PointKind::X}, 0});
      terms.push_back({p.y(m).inverse(), {{a, 1}}, Position::Numerator,
                       {FactorTag::Kind::Point, a, -1, m, PointKind::Y}, 0});
    }
  }
  for (int a = 0; a < ell; ++a) {
    for (int b = 0; b < ell; ++b) {
      if (a == b) continue;
      terms.push_back({p.eta, {{a, 1}, {b, -1}}, Position::Numerator,
                       {FactorTag::Kind::Ratio, a, b, 0, PointKind::X}, 0});
      terms.push_back({Scalar(1), {{a, 1}, {b, -1}}, Position::Denominator,
                       {FactorTag::Kind::Ratio, a, b, 0, PointKind::X}, 0});
    }
  }
  return EllipticKernel(ell, p.order, std::move(terms));
}

PSeries EllipticKernel::pole_weight(const Term& term, const std::vector<Scalar>&, int a) const {
  for (const auto& [var, e] : term.exps) {
    if (var == a) return PSeries::constant(Scalar(-e), order_) / reduced_at_one_;
  }
  throw PoleOrderError("pole factor does not involve t_" + std::to_string(a + 1));
}

PSeries EllipticKernel::term_value(const Term& term, const std::vector<Scalar>& pt) const {
  return theta(term.argument(pt), order_);
}

PSeries EllipticKernel::evaluate(const std::vector<Scalar>& pt) const {
  PSeries num = one(), den = one();
  for (const auto& t : terms_) (t.pos == Position::Numerator ? num : den) *= term_value(t, pt);
  return num / den;
}

OmegaGram gram_xx(int ell, const EllParams& p, PrimedShift shift) {
  const auto parts = enumerate(ell, p.n());
  const auto kernel = EllipticKernel::omega_kernel(ell, p);
  const std::size_t N = parts.size();
  OmegaGram g{Matrix<PSeries>(N, std::vector<PSeries>(N, PSeries(p.order))),
              Matrix<PSeries>(N, std::vector<PSeries>(N, PSeries(p.order)))};
  for (int side = 0; side < 2; ++side) {
    auto& m = side == 0 ? g.x_side : g.y_side;
    for (const auto& kap : parts) {
      const EvalPoint pt = side == 0 ? x_point(kap, p.xs, p.eta) : y_point(kap, p.ys, p.eta);
      const PSeries w = kernel_residue_weight(kernel, pt.coords);
      std::vector<PSeries> primed, plain;
      for (const auto& lam : parts) {
        primed.push_back(xi_weight(lam, pt.coords, p, Variant::Primed, shift));
        plain.push_back(xi_weight(lam, pt.coords, p, Variant::Plain));
      }
      for (std::size_t a = 0; a < N; ++a) {
        if (primed[a].is_zero()) continue;
        const PSeries wa = w * primed[a];
        for (std::size_t b = 0; b < N; ++b) m[a][b] += wa * plain[b];
      }
    }
  }
  return g;
}

PSeries vartheta(int m, const Scalar& u, int ell, const EllParams& p, bool printed_product) {
  const int n = p.n();
  if (m < 1 || m > n) throw UsageError("vartheta: m out of range");
  Scalar X(1);
  for (int k = 1; k <= n; ++k) X *= p.x(k);
  if (!printed_product) X = X.inverse();
  const Scalar c = -(p.eta.pow(ell - 1) / p.alpha * X * (-u).pow(n));
  PSeries r = theta_monomial(c, m - 1, n, p.order) * u.pow(m - 1);
  r /= pochhammer(PSeries::monomial(Scalar(1), n, p.order), n);
  r *= pochhammer(PSeries::monomial(Scalar(1), 1, p.order), 1).pow(n);
  return r;
}

PSeries theta_lambda(const Partition& lambda, const std::vector<Scalar>& t, const EllParams& p,
                     bool printed_product) {
  const int l = lambda.length();
  if (static_cast<int>(t.size()) != l) throw UsageError("theta_lambda: point length differs from ell");
  const auto L = static_cast<std::size_t>(l);
  // v[c][a] = vartheta_{lambda_a}(t_c)
  Matrix<PSeries> v(L, std::vector<PSeries>(L, p.one()));
  for (std::size_t c = 0; c < L; ++c) {
    for (std::size_t a = 0; a < L; ++a) {
      v[c][a] = vartheta(lambda.at(static_cast<int>(a) + 1), t[c], l, p, printed_product);
    }
  }
  PSeries sum = perm_sum(l, PSeries(p.order), [&](const std::vector<int>& sg) {
    PSeries term = p.one();
    for (std::size_t a = 0; a < L; ++a) term *= v[static_cast<std::size_t>(sg[a])][a];
    return term;
  });
  long norm = 1;
  for (int m = 1; m <= lambda.n(); ++m) {
    for (int k = 2; k <= lambda.omega(m); ++k) norm *= k;
  }
  return sum * Scalar(norm).inverse();
}

EllTransition ell_transition(int ell, const EllParams& p, bool printed_product) {
  EllTransition tr;
  tr.parts = enumerate(ell, p.n());
  const std::size_t N = tr.parts.size();
  tr.Xi.assign(N, std::vector<PSeries>(N, PSeries(p.order)));
  tr.Theta = tr.Xi;
  for (std::size_t k = 0; k < N; ++k) {
    const auto pt = x_point(tr.parts[k], p.xs, p.eta);
    for (std::size_t l = 0; l < N; ++l) {
      tr.Xi[l][k] = xi_weight(tr.parts[l], pt.coords, p, Variant::Plain);
      tr.Theta[l][k] = theta_lambda(tr.parts[l], pt.coords, p, printed_product);
    }
  }
  tr.A = multiply(tr.Xi, inverse(tr.Theta));
  return tr;
}

long d_exponent(int n, int m, int ell, int s) {
  long total = 0;
  for (int i = 0; i < ell; ++i) {
    const int j = i - s;
    if (j < 0 || i + j >= ell) continue;
    total += binomial(m - 1 + i, m - 1) * binomial(n - m - 1 + j, n - m - 1);
  }
  return total;
}

PSeries detT_rhs(int ell, const EllParams& p, bool printed_exponent) {
  const int n = p.n();
  const long C = binomial(n + ell - 1, n);
  PSeries r = PSeries::constant(p.eta.pow(static_cast<long>(n) * (1 - n) / 2 * binomial(n + ell - 1, n + 1)),
                                p.order);
  for (int m = 1; m <= n; ++m) r *= (-p.x(m)).pow((m - 1) * C);
  for (int s = 0; s < ell; ++s) {
    const long e = printed_exponent ? binomial(n + s - 1, n - 1) : binomial(n + ell - s - 2, n - 1);
    r *= p.th(p.eta.pow(s) / p.alpha).pow(e);
  }
  for (int s = 1 - ell; s <= ell - 1; ++s) {
    const long d = D_exponent(n, ell, s);
    if (d == 0) continue;
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) r *= p.th(p.eta.pow(s) * p.x(j) / p.x(k)).pow(d);
    }
  }
  return r;
}

PSeries detAe_rhs(int ell, const EllParams& p) {
  const int n = p.n();
  const long C = binomial(n + ell - 1, n);
  Scalar lead(1);
  for (int m = 1; m <= n; ++m) lead *= p.y(m).pow((m - n) * C);
  PSeries r = PSeries::constant(lead, p.order);
  for (int s = 1 - ell; s <= ell - 1; ++s) {
    for (int m = 1; m < n; ++m) {
      const long d = d_exponent(n, m, ell, s);
      if (d == 0) continue;
      Scalar yx(1);
      for (int j = 1; j <= m; ++j) yx *= p.y(j) / p.x(j);
      r *= p.th(p.eta.pow(s + ell - 1) / p.alpha * yx).pow(d);
    }
  }
  for (int s = 0; s < ell; ++s) {
    const long e = binomial(n + ell - s - 2, n - 1);
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) r *= p.th(p.eta.pow(s) * p.y(j) / p.x(k)).pow(e);
    }
  }
  return r;
}

EllParams sample_ell_params(TrialContext& ctx, int ell, int n, int order) {
  EllParams p;
  p.order = order;
  p.eta = ctx.draw("eta", {not_root_of_unity(2 * std::max(ell, 1) + 2)});
  p.alpha = ctx.draw("alpha", {not_root_of_unity(1)});
  const auto xy = ctx.draw_distinct("xy", 2 * n);
  p.xs.assign(xy.begin(), xy.begin() + n);
  p.ys.assign(xy.begin() + n, xy.end());
  return p;
}

}  // namespace wfid

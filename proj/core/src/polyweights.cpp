#include "wfid/polyweights.hpp"

#include <algorithm>
#include <numeric>

#include "wfid/errors.hpp"

namespace wfid {
namespace {

// Sum over sigma of sign(sigma) * f(sigma), where f receives the permuted
// coordinates. The pair denominators prod_{a<b}(t_{sigma a} - t_{sigma b})
// equal sign(sigma) * V(t), so callers divide once by the Vandermonde.
template <class F>
Scalar signed_perm_sum(const std::vector<Scalar>& t, F&& f) {
  const std::size_t l = t.size();
  std::vector<std::size_t> idx(l);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Scalar> perm(l);
  Scalar total(0);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < l; ++a) {
      perm[a] = t[idx[a]];
      for (std::size_t b = a + 1; b < l; ++b) inversions += idx[a] > idx[b];
    }
    Scalar term = f(perm);
    if (inversions & 1) {
      total -= term;
    } else {
      total += term;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return total;
}

Scalar vandermonde(const std::vector<Scalar>& t) {
  Scalar v(1);
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = a + 1; b < t.size(); ++b) v *= t[a] - t[b];
  }
  if (v.is_zero()) throw DivisionByZero("coincident t coordinates");
  return v;
}

Scalar pair_numerator(const std::vector<Scalar>& t, const Scalar& eta, Variant v) {
  Scalar r(1);
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      r *= v == Variant::Plain ? t[a] - eta * t[b] : eta * t[a] - t[b];
    }
  }
  return r;
}

}  // namespace

PolyParams PolyParams::dual() const { return PolyParams{ys, xs, eta.inverse()}; }

PolyParams PolyParams::truncated() const {
  return PolyParams{{xs.begin(), xs.end() - 1}, {ys.begin(), ys.end() - 1}, eta};
}

PolyParams PolyParams::truncated_front() const {
  return PolyParams{{xs.begin() + 1, xs.end()}, {ys.begin() + 1, ys.end()}, eta};
}

Scalar x_factor(const Scalar& u, int m, const PolyParams& p, Variant v) {
  const int n = p.n();
  if (m < 1 || m > n) throw UsageError("x_factor: m out of range");
  Scalar r = v == Variant::Plain ? u : Scalar(1);
  const auto& before = v == Variant::Plain ? p.ys : p.xs;
  const auto& after = v == Variant::Plain ? p.xs : p.ys;
  for (int j = 1; j < m; ++j) r *= u - before[static_cast<std::size_t>(j - 1)];
  for (int k = m + 1; k <= n; ++k) r *= u - after[static_cast<std::size_t>(k - 1)];
  return r;
}

Scalar r_prefactor(const Partition& lambda, const Scalar& eta) {
  Scalar r(1);
  for (int m = 1; m <= lambda.n(); ++m) {
    Scalar es = eta;
    for (int s = 1; s <= lambda.omega(m); ++s, es *= eta) r *= (Scalar(1) - eta) / (Scalar(1) - es);
  }
  return r;
}

Scalar weight(const Partition& lambda, const std::vector<Scalar>& t, const PolyParams& p, Variant v) {
  const int l = lambda.length();
  if (static_cast<int>(t.size()) != l) throw UsageError("weight: point length differs from ell");
  const Scalar V = vandermonde(t);
  const Scalar sum = signed_perm_sum(t, [&](const std::vector<Scalar>& s) {
    Scalar term = pair_numerator(s, p.eta, v);
    for (int a = 1; a <= l && !term.is_zero(); ++a) {
      term *= x_factor(s[static_cast<std::size_t>(a - 1)], lambda.at(a), p, v);
    }
    return term;
  });
  return r_prefactor(lambda, p.eta) * sum / V;
}

Scalar identity_term(const Partition& lambda, const std::vector<Scalar>& t, const PolyParams& p,
                     Variant v) {
  const int l = lambda.length();
  if (static_cast<int>(t.size()) != l) throw UsageError("identity_term: point length differs from ell");
  Scalar term = r_prefactor(lambda, p.eta) * pair_numerator(t, p.eta, v) / vandermonde(t);
  for (int a = 1; a <= l; ++a) term *= x_factor(t[static_cast<std::size_t>(a - 1)], lambda.at(a), p, v);
  return term;
}

std::vector<Scalar> contributing_order(const Partition& lambda, const EvalPoint& pt, Variant v) {
  if (!(pt.source == lambda)) throw UsageError("contributing_order: point does not belong to the partition");
  // Coordinates of block m, in point order.
  std::vector<std::vector<Scalar>> blocks(static_cast<std::size_t>(lambda.n()) + 1);
  for (std::size_t a = 0; a < pt.coords.size(); ++a) {
    blocks[static_cast<std::size_t>(pt.block[a])].push_back(pt.coords[a]);
  }
  const bool keep = (v == Variant::Plain) == (pt.kind == PointKind::X);
  std::vector<Scalar> out;
  out.reserve(pt.coords.size());
  // lambda is weakly decreasing, so blocks are visited from m = n down to 1.
  for (int m = lambda.n(); m >= 1; --m) {
    auto& b = blocks[static_cast<std::size_t>(m)];
    if (!keep) std::reverse(b.begin(), b.end());
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

Scalar weight_at(const Partition& lambda, const EvalPoint& pt, const PolyParams& p, Variant v) {
  if (pt.source == lambda) return identity_term(lambda, contributing_order(lambda, pt, v), p, v);
  return weight(lambda, pt.coords, p, v);
}

Scalar monomial_symmetric(const std::vector<int>& exponents, const std::vector<Scalar>& t) {
  if (exponents.size() != t.size()) throw UsageError("monomial: exponent count differs from ell");
  std::vector<int> e = exponents;
  std::sort(e.begin(), e.end());
  Scalar total(0);
  do {
    Scalar term(1);
    for (std::size_t a = 0; a < t.size(); ++a) term *= t[a].pow(e[a]);
    total += term;
  } while (std::next_permutation(e.begin(), e.end()));
  return total;
}

Scalar q_monomial(const Partition& lambda, const std::vector<Scalar>& t) {
  // Distinct rearrangements already carry the 1/prod(omega!) normalization.
  return monomial_symmetric(lambda.parts(), t);
}

Scalar norm_N(const Partition& lambda, const PolyParams& p) {
  Scalar r(1);
  for (int m = 1; m <= lambda.n(); ++m) {
    Scalar es(1);  // eta^{s-1}
    for (int s = 1; s <= lambda.omega(m); ++s) {
      r *= (Scalar(1) - es * p.eta) * (p.x(m) - es * p.y(m)) / (Scalar(1) - p.eta);
      es *= p.eta;
    }
  }
  return r;
}

Scalar c_coeff(const Partition& lambda, int i, int j, const PolyParams& p) {
  if (!(1 <= i && i < j && j <= p.n())) throw UsageError("c_coeff requires 1 <= i < j <= n");
  if (!lambda.within(i, j)) throw UsageError("c_coeff: partition outside the window [i, j]");
  const int l = lambda.length();
  const int wi = lambda.omega(i), wj = lambda.omega(j);
  Scalar r = p.eta.pow(static_cast<long>(wj) * (wj - 1) / 2);
  if (wi & 1) r = -r;
  for (int k = i + 1; k < j; ++k) {
    for (int s = 0; s < lambda.omega(k); ++s) r *= p.x(k) - p.eta.pow(s) * p.y(k);
  }
  for (int a = 1; a <= l; ++a) {
    const int la = lambda.at(a);
    const Scalar ey = p.eta.pow(l - a) * p.y(i);
    for (int k = i + 1; k < la; ++k) r *= ey - p.x(k);
    for (int m = la + 1; m < j; ++m) r *= ey - p.y(m);
  }
  return r;
}

Scalar jing_sum(const std::vector<Scalar>& t, const Scalar& eta, bool mutate) {
  const int l = static_cast<int>(t.size());
  std::vector<Scalar> c(static_cast<std::size_t>(l) + 1);
  c[0] = Scalar(1);
  const Scalar el = eta.pow(l);
  for (int k = 1; k <= l; ++k) {
    c[static_cast<std::size_t>(k)] =
        c[static_cast<std::size_t>(k - 1)] * (el - eta.pow(k - 1)) / (Scalar(1) - eta.pow(k));
  }
  if (mutate) c[0] = Scalar(2);
  const Scalar shift = eta.pow(l - 1);
  const Scalar V = vandermonde(t);
  const Scalar sum = signed_perm_sum(t, [&](const std::vector<Scalar>& s) {
    // suffix[k] = prod_{b >= k} (s_b - eta^{l-1}) over 0-based b.
    std::vector<Scalar> suffix(static_cast<std::size_t>(l) + 1, Scalar(1));
    for (int b = l - 1; b >= 0; --b) {
      suffix[static_cast<std::size_t>(b)] = suffix[static_cast<std::size_t>(b + 1)] * (s[static_cast<std::size_t>(b)] - shift);
    }
    Scalar inner(0), prefix(1);
    for (int k = 0; k <= l; ++k) {
      inner += c[static_cast<std::size_t>(k)] * prefix * suffix[static_cast<std::size_t>(k)];
      if (k < l) prefix *= s[static_cast<std::size_t>(k)] - Scalar(1);
    }
    return inner * pair_numerator(s, eta, Variant::Plain);
  });
  return sum / V;
}

Scalar id1_sum(int i, int j, const std::vector<Scalar>& t, const PolyParams& p, bool mutate) {
  const int l = static_cast<int>(t.size());
  Scalar total(0);
  bool pending = mutate;
  for (const auto& lambda : enumerate_window(l, p.n(), i, j)) {
    Scalar term = c_coeff(lambda, i, j, p) * weight(lambda, t, p, Variant::Plain);
    if (pending && !term.is_zero()) {
      term *= Scalar(2);
      pending = false;
    }
    total += term;
  }
  return total;
}

Scalar id2_sum(int j, const std::vector<Scalar>& t, const PolyParams& p, bool mutate) {
  const int l = static_cast<int>(t.size());
  const EvalPoint kap = x_point(kappa(l, j, p.n()), p.xs, p.eta);
  Scalar total(0);
  bool pending = mutate;
  for (const auto& lambda : enumerate(l, p.n())) {
    const Scalar coeff = weight_at(lambda, kap, p, Variant::Primed) * norm_N(lambda, p);
    // Most coefficients vanish by triangularity; perturb the first live one.
    Scalar term = coeff * weight(lambda, t, p, Variant::Plain);
    if (pending && !term.is_zero()) {
      term *= Scalar(2);
      pending = false;
    }
    total += term;
  }
  return total;
}

PolyParams sample_poly_params(TrialContext& ctx, int ell, int n) {
  PolyParams p;
  p.eta = ctx.draw("eta", {not_root_of_unity(std::max(ell, 1) + 1)});
  const auto xy = ctx.draw_distinct("xy", 2 * n);
  p.xs.assign(xy.begin(), xy.begin() + n);
  p.ys.assign(xy.begin() + n, xy.end());
  return p;
}

void impose_id_condition(TrialContext& ctx, PolyParams& p, int ell, int i, int j) {
  if (ctx.config().lift_condition) {
    ctx.note("condition x_j = eta^(ell-1) y_i lifted (negative control)");
    return;
  }
  p.xs[static_cast<std::size_t>(j - 1)] = p.eta.pow(ell - 1) * p.y(i);
  ctx.constraint("imposed x_" + std::to_string(j) + " := eta^" + std::to_string(ell - 1) + " * y_" +
                 std::to_string(i));
}

}  // namespace wfid

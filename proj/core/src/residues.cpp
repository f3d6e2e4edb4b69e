#include "wfid/residues.hpp"

#include <algorithm>

#include "wfid/errors.hpp"

namespace wfid {

std::string FactorTag::str() const {
  const std::string ta = "t_" + std::to_string(a + 1);
  if (kind == Kind::Ratio) return "ratio(" + ta + ", t_" + std::to_string(b + 1) + ")";
  return "(" + ta + " - " + (side == PointKind::X ? "x_" : "y_") + std::to_string(m) + ")";
}

Scalar FactorizedKernel::Term::value(const std::vector<Scalar>& pt) const {
  Scalar v = constant;
  for (const auto& [var, c] : coeffs) v += c * pt[static_cast<std::size_t>(var)];
  return v;
}

FactorizedKernel::FactorizedKernel(int ell, std::vector<Term> terms) : ell_(ell), terms_(std::move(terms)) {
  for (auto& t : terms_) {
    if (t.coeffs.empty()) throw UsageError("kernel factor without a variable");
    t.min_var = ell_;
    for (const auto& cv : t.coeffs) t.min_var = std::min(t.min_var, cv.first);
  }
}

FactorizedKernel FactorizedKernel::weight_kernel(int ell, const PolyParams& p) {
  std::vector<Term> terms;
  for (int a = 0; a < ell; ++a) {
    for (int m = 1; m <= p.n(); ++m) {
      terms.push_back({{{a, Scalar(1)}}, -p.x(m), Position::Numerator,
                       {FactorTag::Kind::Point, a, -1, m, PointKind::X}, 0});
      terms.push_back({{{a, Scalar(1)}}, -p.y(m), Position::Numerator,
                       {FactorTag::Kind::Point, a, -1, m, PointKind::Y}, 0});
    }
  }
  for (int a = 0; a < ell; ++a) {
    for (int b = 0; b < ell; ++b) {
      if (a == b) continue;
      terms.push_back({{{a, Scalar(1)}, {b, -p.eta}}, Scalar(0), Position::Numerator,
                       {FactorTag::Kind::Ratio, a, b, 0, PointKind::X}, 0});
      terms.push_back({{{a, Scalar(1)}, {b, Scalar(-1)}}, Scalar(0), Position::Denominator,
                       {FactorTag::Kind::Ratio, a, b, 0, PointKind::X}, 0});
    }
  }
  return FactorizedKernel(ell, std::move(terms));
}

Scalar FactorizedKernel::pole_weight(const Term& term, const std::vector<Scalar>& pt, int a) const {
  for (const auto& [var, c] : term.coeffs) {
    if (var == a) return (c * pt[static_cast<std::size_t>(a)]).inverse();
  }
  throw PoleOrderError("pole factor does not involve t_" + std::to_string(a + 1));
}

Scalar FactorizedKernel::evaluate(const std::vector<Scalar>& pt) const {
  return evaluate_without(terms_.size(), pt);
}

Scalar FactorizedKernel::evaluate_without(std::size_t skip, const std::vector<Scalar>& pt) const {
  Scalar num(1), den(1);
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k == skip) continue;
    (terms_[k].pos == Position::Numerator ? num : den) *= terms_[k].value(pt);
  }
  return num / den;
}

Scalar residue_weight(const FactorizedKernel& kernel, const EvalPoint& pt) {
  if (static_cast<int>(pt.coords.size()) != kernel.ell()) throw UsageError("point length differs from ell");
  return kernel_residue_weight(kernel, pt.coords);
}

Scalar iterated_residue(const Evaluator& f, const Evaluator& g, const FactorizedKernel& kernel,
                        const EvalPoint& pt) {
  return residue_weight(kernel, pt) * f(pt.coords) * g(pt.coords);
}

namespace {

// The factor that carries the pole at step a for a point of the given kind.
bool designated(const FactorizedKernel::Term& term, const EvalPoint& pt, int a) {
  const auto& tag = term.tag;
  if (term.pos != Position::Numerator) return false;
  const bool last = pt.last_in_block(static_cast<std::size_t>(a));
  if (last) {
    return tag.kind == FactorTag::Kind::Point && tag.a == a && tag.side == pt.kind &&
           tag.m == pt.block[static_cast<std::size_t>(a)];
  }
  if (tag.kind != FactorTag::Kind::Ratio) return false;
  // x-blocks: t_{a+1} = eta t_a kills (t_{a+1} - eta t_a); y-blocks: t_a = eta t_{a+1}.
  return pt.kind == PointKind::X ? (tag.a == a + 1 && tag.b == a) : (tag.a == a && tag.b == a + 1);
}

}  // namespace

Scalar m_kappa(const FactorizedKernel& kernel, const EvalPoint& pt) {
  const auto& terms = kernel.terms();
  const auto& c = pt.coords;
  std::vector<bool> used(terms.size(), false);
  Scalar m(1);
  for (int a = static_cast<int>(c.size()) - 1; a >= 0; --a) {
    std::size_t pole = terms.size();
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (terms[k].min_var == a && designated(terms[k], pt, a)) pole = k;
    }
    if (pole == terms.size() || !terms[pole].vanishes(c)) {
      throw PoleOrderError("designated pole missing at step t_" + std::to_string(a + 1));
    }
    used[pole] = true;
    m /= kernel.pole_weight(terms[pole], c, a);
  }
  Scalar den(1);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (used[k]) continue;
    (terms[k].pos == Position::Numerator ? m : den) *= terms[k].value(c);
  }
  if (den.is_zero()) throw DivisionByZero("M_kappa: a denominator factor vanishes");
  return m / den;
}

ResidueSums residue_sums(const Evaluator& fg, int ell, const PolyParams& p) {
  const auto kernel = FactorizedKernel::weight_kernel(ell, p);
  ResidueSums s;
  for (const auto& lambda : enumerate(ell, p.n())) {
    const auto xp = x_point(lambda, p.xs, p.eta);
    const auto yp = y_point(lambda, p.ys, p.eta);
    s.x_side += residue_weight(kernel, xp) * fg(xp.coords);
    s.y_side += residue_weight(kernel, yp) * fg(yp.coords);
  }
  return s;
}

Scalar scalar_product_S(const Evaluator& f, const Evaluator& g, int ell, const PolyParams& p) {
  const auto s = residue_sums([&](const std::vector<Scalar>& t) { return f(t) * g(t); }, ell, p);
  const Scalar signed_y = (ell % 2 ? -s.y_side : s.y_side);
  if (s.x_side != signed_y) {
    throw ConsistencyError("x-side and (-1)^ell y-side residue sums differ: inadmissible f g");
  }
  return s.x_side;
}

Matrix<Scalar> gram_pp(int ell, const PolyParams& p) {
  const auto parts = enumerate(ell, p.n());
  const auto kernel = FactorizedKernel::weight_kernel(ell, p);
  const std::size_t N = parts.size();
  Matrix<Scalar> gx(N, std::vector<Scalar>(N)), gy(N, std::vector<Scalar>(N));
  for (int side = 0; side < 2; ++side) {
    auto& g = side == 0 ? gx : gy;
    for (const auto& kap : parts) {
      const EvalPoint pt = side == 0 ? x_point(kap, p.xs, p.eta) : y_point(kap, p.ys, p.eta);
      const Scalar w = residue_weight(kernel, pt);
      std::vector<Scalar> primed(N), plain(N);
      for (std::size_t l = 0; l < N; ++l) {
        primed[l] = weight_at(parts[l], pt, p, Variant::Primed);
        plain[l] = weight_at(parts[l], pt, p, Variant::Plain);
      }
      for (std::size_t l = 0; l < N; ++l) {
        if (primed[l].is_zero()) continue;
        for (std::size_t m = 0; m < N; ++m) g[l][m] += w * primed[l] * plain[m];
      }
    }
  }
  for (std::size_t l = 0; l < N; ++l) {
    for (std::size_t m = 0; m < N; ++m) {
      const Scalar signed_y = ell % 2 ? -gy[l][m] : gy[l][m];
      if (gx[l][m] != signed_y) {
        throw ConsistencyError("gram_pp: x- and y-side residue sums differ at " + parts[l].str() + ", " +
                               parts[m].str());
      }
    }
  }
  return gx;
}

Transition transition_matrix(int ell, const PolyParams& p) {
  Transition tr;
  tr.parts = enumerate(ell, p.n());
  const std::size_t N = tr.parts.size();
  tr.Q.assign(N, std::vector<Scalar>(N));
  tr.P.assign(N, std::vector<Scalar>(N));
  for (std::size_t k = 0; k < N; ++k) {
    const auto pt = x_point(tr.parts[k], p.xs, p.eta);
    for (std::size_t l = 0; l < N; ++l) {
      tr.Q[l][k] = q_monomial(tr.parts[l], pt.coords);
      tr.P[l][k] = weight_at(tr.parts[l], pt, p, Variant::Plain);
    }
  }
  tr.B = inverse(tr.Q);
  tr.A = multiply(tr.P, tr.B);
  return tr;
}

Matrix<Scalar> mn_product(const Transition& tr, const PolyParams& p) {
  const std::size_t N = tr.parts.size();
  const int ell = N ? tr.parts[0].length() : 0;
  const auto kernel = FactorizedKernel::weight_kernel(ell, p);
  // C[mu][lambda] = sum_kappa M_kappa^{-1} Q_mu(x>kappa) P'_lambda(x>kappa).
  Matrix<Scalar> C(N, std::vector<Scalar>(N));
  for (std::size_t k = 0; k < N; ++k) {
    const auto pt = x_point(tr.parts[k], p.xs, p.eta);
    const Scalar minv = residue_weight(kernel, pt);
    for (std::size_t l = 0; l < N; ++l) {
      const Scalar pl = weight_at(tr.parts[l], pt, p, Variant::Primed) * norm_N(tr.parts[l], p);
      if (pl.is_zero()) continue;
      for (std::size_t m = 0; m < N; ++m) C[m][l] += minv * tr.Q[m][k] * pl;
    }
  }
  return multiply(C, tr.A);
}

long D_exponent(int n, int ell, int s) {
  long total = 0;
  const int abs_s = s < 0 ? -s : s;
  for (int r = 0; 2 * r <= ell - abs_s - 1; ++r) total += binomial(n + ell - abs_s - 2 * r - 3, n - 2);
  return total;
}

Scalar detq_closed_form(int ell, const PolyParams& p) {
  const int n = p.n();
  Scalar r = p.eta.pow(-static_cast<long>(n) * (n + 1) / 2 * binomial(n + ell - 1, n + 1));
  const long cx = binomial(n + ell - 1, n);
  for (int m = 1; m <= n; ++m) r *= p.x(m).pow(cx);
  for (int s = 1 - ell; s <= ell - 1; ++s) {
    const long d = D_exponent(n, ell, s);
    if (d == 0) continue;
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) r *= (p.eta.pow(s) * p.x(k) - p.x(j)).pow(d);
    }
  }
  return r;
}

Scalar deta_closed_form(int ell, const PolyParams& p) {
  const int n = p.n();
  Scalar r(1);
  for (int s = 0; s <= ell - 1; ++s) {
    const long e = binomial(n + ell - s - 2, n - 1);
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) r *= (p.eta.pow(s) * p.y(j) - p.x(k)).pow(e);
    }
  }
  return r;
}

}  // namespace wfid

#include <gtest/gtest.h>

#include <algorithm>

#include "wfid/elliptic.hpp"
#include "wfid/errors.hpp"
#include "wfid/sampler.hpp"

using namespace wfid;

namespace {

struct Fixture {
  EllParams p;
  std::vector<Scalar> t;
};

Fixture sampled(int ell, int n, int order, std::uint64_t seed) {
  Sampler s(SamplerConfig{seed});
  Fixture f;
  f.p.order = order;
  f.p.eta = s.sample("eta", {not_root_of_unity(2 * ell + 2)});
  f.p.alpha = s.sample("alpha", {not_root_of_unity(1)});
  std::vector<Scalar> taken;
  auto fresh = [&] {
    taken.push_back(s.sample("v", {distinct_from(taken, "earlier"), not_root_of_unity(1)}));
    return taken.back();
  };
  for (int m = 0; m < n; ++m) f.p.xs.push_back(fresh());
  for (int m = 0; m < n; ++m) f.p.ys.push_back(fresh());
  for (int a = 0; a < ell; ++a) f.t.push_back(fresh());
  return f;
}

long count_compositions(int k, int total) {
  if (total < 0) return 0;
  if (k == 0) return total == 0 ? 1 : 0;
  long c = 0;
  for (int v = 0; v <= total; ++v) c += count_compositions(k - 1, total - v);
  return c;
}

// #{(a in N^m, b in N^{n-m}) : |a| + |b| < l, |a| - |b| = s}.
long lattice_d(int n, int m, int ell, int s) {
  long total = 0;
  for (int i = 0; i < ell; ++i) {
    for (int j = 0; i + j < ell; ++j) {
      if (i - j == s) total += count_compositions(m, i) * count_compositions(n - m, j);
    }
  }
  return total;
}

}  // namespace

TEST(Elliptic, NormDSmallestCase) {
  const Fixture f = sampled(1, 1, 5, 1);
  const auto& p = f.p;
  const Scalar xy = p.x(1) / p.y(1);
  const PSeries expected = -(euler_cubed(5) * p.th(xy)) / (p.th(p.alpha.inverse()) * p.th(p.alpha * xy));
  EXPECT_EQ(norm_D(Partition({1}, 1), p), expected);
  EXPECT_EQ(norm_D(Partition({}, 1), p), p.one());
}

TEST(Elliptic, VarthetaLimitsAtOrderZero) {
  const int ell = 2, n = 3;
  const Fixture f = sampled(ell, n, 0, 2);
  const Scalar u = f.t[0];
  for (int m = 2; m <= n; ++m) EXPECT_EQ(vartheta(m, u, ell, f.p)[0], u.pow(m - 1));
  Scalar X(1);
  for (const auto& x : f.p.xs) X *= x;
  EXPECT_EQ(vartheta(1, u, ell, f.p)[0], Scalar(1) + f.p.eta.pow(ell - 1) / f.p.alpha / X * (-u).pow(n));
  EXPECT_EQ(vartheta(1, u, ell, f.p, true)[0], Scalar(1) + f.p.eta.pow(ell - 1) / f.p.alpha * X * (-u).pow(n));
}

TEST(Elliptic, ThetaLambdaAtEllOne) {
  const Fixture f = sampled(1, 3, 4, 3);
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(theta_lambda(Partition({m}, 3), f.t, f.p), vartheta(m, f.t[0], 1, f.p));
}

TEST(Elliptic, XiSymmetricInT) {
  const Fixture f = sampled(3, 2, 3, 4);
  for (const auto& lam : enumerate(3, 2)) {
    for (Variant v : {Variant::Plain, Variant::Primed}) {
      const PSeries ref = xi_weight(lam, f.t, f.p, v);
      std::vector<int> idx{0, 1, 2};
      while (std::next_permutation(idx.begin(), idx.end())) {
        const std::vector<Scalar> t{f.t[idx[0]], f.t[idx[1]], f.t[idx[2]]};
        EXPECT_EQ(xi_weight(lam, t, f.p, v), ref);
      }
    }
  }
}

TEST(Elliptic, DualityWithMatchedShift) {
  for (int ell = 1; ell <= 2; ++ell) {
    const Fixture f = sampled(ell, 2, 4, 10 + ell);
    for (const auto& lam : enumerate(ell, 2)) {
      long e = static_cast<long>(ell) * (ell - 1) / 2;
      for (int w : lam.multiplicities()) e -= static_cast<long>(w) * (w - 1) / 2;
      EXPECT_EQ(xi_weight(lam, f.t, f.p, Variant::Plain),
                xi_weight(lam, f.t, f.p.dual(), Variant::Primed) * f.p.eta.pow(e))
          << lam.str();
    }
  }
}

TEST(Elliptic, PrintedShiftBreaksBiorthogonality) {
  const Fixture f = sampled(2, 2, 3, 20);
  const auto g = gram_xx(2, f.p, PrimedShift::Printed);
  bool diagonal = true;
  for (std::size_t a = 0; a < g.x_side.size(); ++a) {
    for (std::size_t b = 0; b < g.x_side.size(); ++b) {
      if (a != b && !g.x_side[a][b].is_zero()) diagonal = false;
    }
  }
  EXPECT_FALSE(diagonal);
}

TEST(Elliptic, GramSmallestCase) {
  const Fixture f = sampled(1, 1, 6, 21);
  const auto g = gram_xx(1, f.p);
  EXPECT_EQ(g.x_side[0][0], norm_D(Partition({1}, 1), f.p).inverse());
  EXPECT_EQ(g.x_side[0][0], -g.y_side[0][0]);
}

TEST(Elliptic, GramOffDiagonalVanishes) {
  const Fixture f = sampled(1, 2, 6, 22);
  const auto g = gram_xx(1, f.p);
  EXPECT_TRUE(g.x_side[0][1].is_zero());
  EXPECT_TRUE(g.x_side[1][0].is_zero());
}

TEST(Elliptic, Idp2AtEllOne) {
  const Fixture f = sampled(1, 2, 6, 23);
  const Scalar beta = f.p.eta.inverse() * f.p.alpha * f.p.x(1) / f.p.y(1);
  EXPECT_TRUE(idp2_sum(f.t, f.p.eta, beta, 6).is_zero());
  EXPECT_FALSE(idp2_sum(f.t, f.p.eta, beta, 6, true).is_zero());
}

TEST(Elliptic, Idp1AtOrderZero) {
  Fixture f = sampled(2, 2, 0, 24);
  f.p.xs[1] = f.p.eta * f.p.y(1);
  EXPECT_TRUE(idp1_sum(1, 2, f.t, f.p).is_zero());
}

TEST(Elliptic, SmallExponentTables) {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 1; m < n; ++m) {
      for (int ell = 1; ell <= 4; ++ell) {
        for (int s = 1 - ell; s <= ell - 1; ++s) EXPECT_EQ(d_exponent(n, m, ell, s), lattice_d(n, m, ell, s));
      }
    }
  }
}

TEST(Elliptic, TransitionReproducesTheBasisPoints) {
  const Fixture f = sampled(1, 2, 4, 25);
  const auto tr = ell_transition(1, f.p);
  EXPECT_EQ(multiply(tr.A, tr.Theta), tr.Xi);
}

TEST(Elliptic, KernelPoleWeightUsesTheReducedTheta) {
  const Fixture f = sampled(1, 1, 5, 26);
  const auto k = EllipticKernel::omega_kernel(1, f.p);
  const auto& term = k.terms().front();
  EXPECT_EQ(k.pole_weight(term, {f.p.x(1)}, 0), -euler_cubed(5).inverse());
}

#include <gtest/gtest.h>

#include <algorithm>

#include "wfid/errors.hpp"
#include "wfid/polyweights.hpp"
#include "wfid/sampler.hpp"

using namespace wfid;

namespace {

struct Fixture {
  PolyParams p;
  std::vector<Scalar> t;
};

Fixture sampled(int ell, int n, std::uint64_t seed) {
  Sampler s(SamplerConfig{seed});
  Fixture f;
  f.p.eta = s.sample("eta", {not_root_of_unity(ell + 1)});
  std::vector<Scalar> taken;
  auto fresh = [&] {
    Scalar v = s.sample("v", {distinct_from(taken, "earlier")});
    taken.push_back(v);
    return v;
  };
  for (int m = 0; m < n; ++m) f.p.xs.push_back(fresh());
  for (int m = 0; m < n; ++m) f.p.ys.push_back(fresh());
  for (int a = 0; a < ell; ++a) f.t.push_back(fresh());
  return f;
}

long duality_exponent(const Partition& lam) {
  const long l = lam.length();
  long e = l * (l - 1) / 2;
  for (int w : lam.multiplicities()) e -= static_cast<long>(w) * (w - 1) / 2;
  return e;
}

}  // namespace

TEST(Polyweights, XFactorExamples) {
  const PolyParams p{{Scalar(2)}, {Scalar(3)}, Scalar(5)};
  EXPECT_EQ(x_factor(Scalar(7), 1, p, Variant::Plain), Scalar(7));
  EXPECT_EQ(x_factor(Scalar(7), 1, p, Variant::Primed), Scalar(1));
  const Fixture f = sampled(1, 3, 4);
  for (int m = 1; m <= 3; ++m) {
    EXPECT_EQ(x_factor(f.t[0], m, f.p, Variant::Plain), f.t[0] * x_factor(f.t[0], m, f.p.dual(), Variant::Primed));
  }
}

TEST(Polyweights, WeightSmallCases) {
  const Fixture f = sampled(2, 3, 5);
  for (int m = 1; m <= 3; ++m) {
    EXPECT_EQ(weight(Partition({m}, 3), {f.t[0]}, f.p, Variant::Plain), x_factor(f.t[0], m, f.p, Variant::Plain));
  }
  const PolyParams one{{f.p.xs[0]}, {f.p.ys[0]}, f.p.eta};
  EXPECT_EQ(weight(Partition({1, 1}, 1), f.t, one, Variant::Plain), f.t[0] * f.t[1]);
  EXPECT_EQ(weight(Partition({1, 1}, 1), f.t, one, Variant::Primed), Scalar(1));
}

TEST(Polyweights, CoincidentPointsAreReported) {
  const Fixture f = sampled(2, 2, 6);
  EXPECT_THROW(weight(Partition({2, 1}, 2), {f.t[0], f.t[0]}, f.p, Variant::Plain), DegenerateError);
}

TEST(Polyweights, SymmetricInT) {
  for (int ell = 1; ell <= 3; ++ell) {
    const Fixture f = sampled(ell, 3, 10 + ell);
    for (const auto& lam : enumerate(ell, 3)) {
      for (Variant v : {Variant::Plain, Variant::Primed}) {
        const Scalar ref = weight(lam, f.t, f.p, v);
        auto t = f.t;
        std::sort(t.begin(), t.end(), [](const Scalar& a, const Scalar& b) { return a.str() < b.str(); });
        do {
          EXPECT_EQ(weight(lam, t, f.p, v), ref);
        } while (std::next_permutation(t.begin(), t.end(),
                                       [](const Scalar& a, const Scalar& b) { return a.str() < b.str(); }));
      }
    }
  }
}

TEST(Polyweights, Duality) {
  for (int ell = 1; ell <= 3; ++ell) {
    const Fixture f = sampled(ell, 3, 20 + ell);
    Scalar prod(1);
    for (const auto& v : f.t) prod *= v;
    for (const auto& lam : enumerate(ell, 3)) {
      EXPECT_EQ(weight(lam, f.t, f.p, Variant::Plain),
                f.p.eta.pow(duality_exponent(lam)) * prod * weight(lam, f.t, f.p.dual(), Variant::Primed));
    }
  }
}

TEST(Polyweights, DegreeAtMostNInEachVariable) {
  const int n = 2, ell = 2;
  const Fixture f = sampled(ell, n, 31);
  for (const auto& lam : enumerate(ell, n)) {
    // (n+1)-th finite difference in t_1 at unit steps away from t_2.
    Scalar diff(0);
    for (int k = 0; k <= n + 1; ++k) {
      const Scalar sign = (n + 1 - k) % 2 ? Scalar(-1) : Scalar(1);
      const Scalar t1 = f.t[1] + Scalar(1000 + k);
      diff += sign * Scalar(binomial(n + 1, k)) * weight(lam, {t1, f.t[1]}, f.p, Variant::Plain);
    }
    EXPECT_TRUE(diff.is_zero()) << lam.str();
  }
}

TEST(Polyweights, RecursionEmbeddings) {
  const int n = 3;
  for (int ell = 1; ell <= 2; ++ell) {
    const Fixture f = sampled(ell, n, 40 + ell);
    Scalar tx(1), ty(1);
    for (const auto& t : f.t) {
      tx *= t - f.p.x(n);
      ty *= t - f.p.y(1);
    }
    for (const auto& lam : enumerate(ell, n - 1)) {
      EXPECT_EQ(weight(lam.with_bound(n), f.t, f.p, Variant::Plain),
                weight(lam, f.t, f.p.truncated(), Variant::Plain) * tx);
      EXPECT_EQ(weight(lam.shifted_up(), f.t, f.p, Variant::Plain),
                weight(lam, f.t, f.p.truncated_front(), Variant::Plain) * ty);
    }
  }
}

TEST(Polyweights, Triangularity) {
  for (int ell = 1; ell <= 3; ++ell) {
    for (int n = 1; n <= 3; ++n) {
      const Fixture f = sampled(ell, n, 50 + 3 * ell + n);
      const auto ps = enumerate(ell, n);
      for (const auto& lam : ps) {
        for (const auto& mu : ps) {
          const Order o = compare(lam, mu);
          const bool ge = o == Order::Greater || o == Order::Both;
          const bool le = o == Order::Less || o == Order::Both;
          const auto xp = x_point(mu, f.p.xs, f.p.eta), yp = y_point(mu, f.p.ys, f.p.eta);
          if (!ge) EXPECT_TRUE(weight_at(lam, xp, f.p, Variant::Plain).is_zero());
          if (!le) EXPECT_TRUE(weight_at(lam, yp, f.p, Variant::Plain).is_zero());
          if (!le) EXPECT_TRUE(weight_at(lam, xp, f.p, Variant::Primed).is_zero());
          if (!ge) EXPECT_TRUE(weight_at(lam, yp, f.p, Variant::Primed).is_zero());
        }
      }
    }
  }
}

TEST(Polyweights, SpecialPointShortcutMatchesTheFullSum) {
  for (int ell = 1; ell <= 3; ++ell) {
    for (int n = 1; n <= 3; ++n) {
      const Fixture f = sampled(ell, n, 70 + 3 * ell + n);
      for (const auto& lam : enumerate(ell, n)) {
        for (Variant v : {Variant::Plain, Variant::Primed}) {
          for (const auto& pt : {x_point(lam, f.p.xs, f.p.eta), y_point(lam, f.p.ys, f.p.eta)}) {
            const auto order = contributing_order(lam, pt, v);
            EXPECT_EQ(identity_term(lam, order, f.p, v), weight(lam, pt.coords, f.p, v)) << lam.str();
            EXPECT_FALSE(weight(lam, pt.coords, f.p, v).is_zero()) << lam.str();
          }
        }
      }
    }
  }
}

TEST(Polyweights, QMonomialExamples) {
  const std::vector<Scalar> t{Scalar(2), Scalar(3)};
  EXPECT_EQ(q_monomial(Partition({2, 1}, 2), t), Scalar(4 * 3 + 9 * 2));
  EXPECT_EQ(q_monomial(Partition({1, 1}, 2), t), Scalar(6));
  EXPECT_EQ(q_monomial(Partition({3}, 3), {Scalar(5)}), Scalar(125));
}

TEST(Polyweights, NormExamples) {
  const PolyParams p{{Scalar(2)}, {Scalar(3)}, Scalar(5)};
  EXPECT_EQ(norm_N(Partition({1}, 1), p), Scalar(2 - 3));
  EXPECT_EQ(norm_N(Partition({1, 1}, 1), p), Scalar(2 - 3) * Scalar(1 + 5) * Scalar(2 - 5 * 3));
  EXPECT_EQ(norm_N(Partition({}, 1), p), Scalar(1));
}

TEST(Polyweights, CCoeffExamplesAndId1AtEllOne) {
  Fixture f = sampled(1, 2, 90);
  EXPECT_EQ(c_coeff(Partition({1}, 2), 1, 2, f.p), Scalar(-1));
  EXPECT_EQ(c_coeff(Partition({2}, 2), 1, 2, f.p), Scalar(1));
  EXPECT_THROW(c_coeff(Partition({3}, 3), 1, 2, PolyParams{{Scalar(1), Scalar(2), Scalar(3)},
                                                          {Scalar(4), Scalar(5), Scalar(6)}, Scalar(7)}),
               UsageError);
  f.p.xs[1] = f.p.ys[0];
  EXPECT_TRUE(id1_sum(1, 2, f.t, f.p).is_zero());
}

TEST(Polyweights, JingTwoTermCancellation) {
  const Fixture f = sampled(1, 1, 91);
  EXPECT_TRUE(jing_sum(f.t, f.p.eta).is_zero());
  EXPECT_FALSE(jing_sum(f.t, f.p.eta, true).is_zero());
}

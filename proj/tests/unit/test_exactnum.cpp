#include <gtest/gtest.h>

#include "wfid/errors.hpp"
#include "wfid/pseries.hpp"
#include "wfid/sampler.hpp"
#include "wfid/scalar.hpp"

using namespace wfid;

namespace {

PSeries series(std::initializer_list<Scalar> c) {
  return PSeries(std::vector<Scalar>(c), static_cast<int>(c.size()) - 1);
}

std::vector<Scalar> sample_values(std::uint64_t seed, int count) {
  Sampler s(SamplerConfig{seed});
  std::vector<Scalar> out;
  for (int k = 0; k < count; ++k) out.push_back(s.sample("v", {nonzero()}));
  return out;
}

}  // namespace

TEST(Scalar, RationalArithmeticIsExact) {
  const Scalar a = Scalar::ratio(7, 3), b = Scalar::ratio(-5, 11);
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(Scalar::ratio(2, 4), Scalar::ratio(1, 2));
  EXPECT_EQ(Scalar(3).pow(-2), Scalar::ratio(1, 9));
  EXPECT_EQ(Scalar::parse("-12/8"), Scalar::ratio(-3, 2));
}

TEST(Scalar, DivisionByZeroIsReported) {
  EXPECT_THROW(Scalar(1) / Scalar(0), DivisionByZero);
  EXPECT_THROW(Scalar(0).inverse(), DivisionByZero);
  EXPECT_THROW(Scalar::residue(0, 7).inverse(), DivisionByZero);
}

TEST(Scalar, ToPrimeField) {
  EXPECT_EQ(to_prime_field(Scalar::ratio(1, 2), 7), Scalar::residue(4, 7));
  EXPECT_TRUE(to_prime_field(Scalar(0), 13).is_zero());
  EXPECT_THROW(to_prime_field(Scalar::ratio(1, 7), 7), DegenerateError);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto v = sample_values(seed, 2);
    const std::uint64_t p = kDefaultPrime;
    EXPECT_EQ(to_prime_field(v[0] + v[1], p), to_prime_field(v[0], p) + to_prime_field(v[1], p));
    EXPECT_EQ(to_prime_field(v[0] * v[1], p), to_prime_field(v[0], p) * to_prime_field(v[1], p));
    EXPECT_EQ(to_prime_field(v[0] / v[1], p), to_prime_field(v[0], p) / to_prime_field(v[1], p));
  }
}

TEST(Scalar, MixedFieldsPromoteAndMismatchedPrimesThrow) {
  const Scalar r = Scalar::ratio(1, 2);
  EXPECT_EQ(r * Scalar::residue(2, 7), Scalar::residue(1, 7));
  EXPECT_THROW(Scalar::residue(1, 7) + Scalar::residue(1, 11), FieldMismatch);
}

TEST(Sampler, DeterministicAndWithinBounds) {
  EXPECT_EQ(sample_values(1, 8), sample_values(1, 8));
  EXPECT_NE(sample_values(1, 8), sample_values(2, 8));
  for (const auto& v : sample_values(5, 200)) {
    ASSERT_FALSE(v.is_zero());
    EXPECT_LE(abs(v.rational().get_num()), 1000);
    EXPECT_LE(v.rational().get_den(), 1000);
  }
}

TEST(Sampler, ConstraintsHold) {
  Sampler s(SamplerConfig{42});
  for (int k = 0; k < 50; ++k) {
    const Scalar eta = s.sample("eta", {not_root_of_unity(3)});
    EXPECT_NE(eta, Scalar(1));
    EXPECT_NE(eta * eta, Scalar(1));
    EXPECT_NE(eta.pow(3), Scalar(1));
  }
}

TEST(Sampler, CandidatesAreReplayableFromTheirIndex) {
  Sampler s(SamplerConfig{9});
  for (int k = 0; k < 10; ++k) s.sample("v", {nonzero()});
  for (const auto& d : s.log()) EXPECT_EQ(s.candidate(d.index), d.value);
}

TEST(Sampler, ExhaustionAfterRetryLimit) {
  SamplerConfig cfg{3};
  cfg.max_retries = 50;
  Sampler s(cfg);
  const Constraint never{"never", [](const Scalar&) { return false; }};
  EXPECT_THROW(s.sample("v", {never}), ExhaustionError);
}

TEST(Sampler, PrimeModeMapsIntoTheField) {
  SamplerConfig cfg{11};
  cfg.prime = 1000003;
  Sampler s(cfg);
  const Scalar v = s.sample("v");
  EXPECT_FALSE(v.is_rational());
  EXPECT_EQ(v.prime(), 1000003u);
}

TEST(PSeries, PochhammerExamples) {
  EXPECT_EQ(pochhammer(Scalar(5), 1, 0), series({Scalar(-4)}));
  EXPECT_EQ(pochhammer(Scalar(0), 1, 6), PSeries::constant(Scalar(1), 6));
  EXPECT_EQ(pochhammer(Scalar(2), 1, 1), series({Scalar(-1), Scalar(2)}));
}

TEST(PSeries, ThetaExamples) {
  EXPECT_EQ(theta(Scalar(3), 0), series({Scalar(-2)}));
  EXPECT_EQ(theta(Scalar(2), 1), series({Scalar(-1), Scalar::ratio(7, 2)}));
  EXPECT_TRUE(theta(Scalar(1), 8).is_zero());
  EXPECT_THROW(theta(Scalar(0), 3), DegenerateError);
}

TEST(PSeries, ThetaReducedExamples) {
  EXPECT_EQ(theta_reduced(Scalar(1), 0), series({Scalar(1)}));
  EXPECT_EQ(theta_reduced(Scalar(1), 8), euler_cubed(8));
  EXPECT_EQ(theta_reduced(Scalar(2), 1), series({Scalar(1), Scalar::ratio(-7, 2)}));
  // (p;p)^3 = 1 - 3p + 5p^3 - 7p^6 + ...
  const PSeries e3 = euler_cubed(7);
  const int expected[] = {1, -3, 0, 5, 0, 0, -7, 0};
  for (int k = 0; k <= 7; ++k) EXPECT_EQ(e3[k], Scalar(expected[k])) << k;
}

TEST(PSeries, ThetaQuasiPeriodicityAndInversion) {
  const int K = 8;
  for (const auto& u : sample_values(77, 5)) {
    if (u.is_one()) continue;
    const PSeries t = theta(u, K);
    EXPECT_EQ(theta(PSeries::monomial(u, 1, K)), t * (-u.inverse()));
    EXPECT_EQ(theta(u.inverse(), K), t * (-u.inverse()));
    EXPECT_EQ(theta_reduced(u, K) * (Scalar(1) - u), t);
  }
  EXPECT_EQ(theta_reduced(Scalar(1), K) * Scalar(0), theta(Scalar(1), K));
}

TEST(PSeries, RingAxioms) {
  const auto v = sample_values(123, 12);
  const int K = 3;
  const PSeries a({v[0], v[1], v[2], v[3]}, K), b({v[4], v[5], v[6], v[7]}, K), c({v[8], v[9], v[10], v[11]}, K);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ((a / b) * b, a);
  EXPECT_THROW(PSeries::monomial(Scalar(1), 1, K).inverse(), DivisionByZero);
}

TEST(PSeries, TruncationNeverLeaksPastOrder) {
  const PSeries a = PSeries::monomial(Scalar(1), 2, 3);
  EXPECT_TRUE((a * a).is_zero());
  EXPECT_EQ(PSeries::monomial(Scalar(4), 5, 3), PSeries(3));
}

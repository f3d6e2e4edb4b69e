#include <gtest/gtest.h>

#include <set>

#include "wfid/errors.hpp"
#include "wfid/partitions.hpp"

using namespace wfid;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<Partition>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.push_back(p.parts());
  return out;
}

// Brute force: all ell-tuples in [1,n]^ell, kept when weakly decreasing.
std::size_t brute_count(int ell, int n) {
  std::size_t count = 0;
  std::vector<int> t(static_cast<std::size_t>(ell), 1);
  while (true) {
    bool dec = true;
    for (std::size_t a = 1; a < t.size(); ++a) dec = dec && t[a - 1] >= t[a];
    if (dec) ++count;
    std::size_t k = 0;
    while (k < t.size() && t[k] == n) t[k++] = 1;
    if (k == t.size()) break;
    ++t[k];
  }
  return count;
}

}  // namespace

TEST(Partitions, EnumerateExamples) {
  EXPECT_EQ(parts_of(enumerate(2, 2)), (std::vector<std::vector<int>>{{1, 1}, {2, 1}, {2, 2}}));
  EXPECT_EQ(parts_of(enumerate(1, 3)), (std::vector<std::vector<int>>{{1}, {2}, {3}}));
  EXPECT_EQ(enumerate(3, 3).size(), 10u);
  EXPECT_EQ(enumerate(0, 4).size(), 1u);
  EXPECT_THROW(enumerate(-1, 2), UsageError);
  EXPECT_THROW(enumerate(2, 0), UsageError);
}

TEST(Partitions, CountMatchesBinomialAndBruteForce) {
  for (int ell = 0; ell <= 6; ++ell) {
    for (int n = 1; n <= 6; ++n) {
      const auto ps = enumerate(ell, n);
      EXPECT_EQ(static_cast<long>(ps.size()), binomial(n + ell - 1, ell)) << ell << "," << n;
      if (ell > 0) EXPECT_EQ(ps.size(), brute_count(ell, n));
      EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
      const auto parts = parts_of(ps);
      EXPECT_EQ(std::set<std::vector<int>>(parts.begin(), parts.end()).size(), ps.size());
    }
  }
}

TEST(Partitions, WindowIsAFilter) {
  for (int ell = 0; ell <= 3; ++ell) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = i; j <= 3; ++j) {
        std::vector<Partition> filtered;
        for (const auto& p : enumerate(ell, 3)) {
          if (p.within(i, j)) filtered.push_back(p);
        }
        EXPECT_EQ(enumerate_window(ell, 3, i, j), filtered);
      }
    }
  }
}

TEST(Partitions, Multiplicities) {
  EXPECT_EQ(multiplicities(Partition({2, 2, 1}, 3), 3), (std::vector<int>{1, 2, 0}));
  EXPECT_EQ(multiplicities(Partition({}, 3), 3), (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(multiplicities(Partition({3, 3, 3}, 3), 3), (std::vector<int>{0, 0, 3}));
  EXPECT_THROW(Partition({1, 2}, 3), UsageError);
  EXPECT_THROW(Partition({4}, 3), UsageError);
}

TEST(Partitions, SpecialPoints) {
  const std::vector<Scalar> x{Scalar(2), Scalar(3)}, y{Scalar(5), Scalar(7)};
  const Scalar eta(11);
  EXPECT_EQ(x_point(Partition({2, 1}, 2), x, eta).coords, (std::vector<Scalar>{Scalar(2), Scalar(3)}));
  EXPECT_EQ(x_point(Partition({2, 2}, 2), x, eta).coords, (std::vector<Scalar>{Scalar::ratio(3, 11), Scalar(3)}));
  EXPECT_EQ(y_point(Partition({1, 1}, 1), {Scalar(5)}, eta).coords, (std::vector<Scalar>{Scalar(55), Scalar(5)}));
  const auto kp = x_point(kappa(2, 2, 2), x, eta);
  EXPECT_EQ(kp.coords, (std::vector<Scalar>{Scalar::ratio(3, 11), Scalar(3)}));
  for (const auto& p : enumerate(3, 2)) {
    EXPECT_EQ(x_point(p, x, eta).coords.size(), 3u);
    EXPECT_EQ(y_point(p, y, eta).coords.size(), 3u);
  }
}

TEST(Partitions, Kappa) {
  EXPECT_EQ(kappa(3, 2, 3).parts(), (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(kappa(0, 1, 3).length(), 0);
}

TEST(Partitions, CompareExamples) {
  EXPECT_EQ(compare(Partition({2, 1}, 3), Partition({1, 1}, 3)), Order::Greater);
  EXPECT_EQ(compare(Partition({3, 1}, 3), Partition({2, 2}, 3)), Order::Incomparable);
  EXPECT_EQ(compare(Partition({2, 1}, 3), Partition({2, 1}, 3)), Order::Both);
  EXPECT_THROW(compare(Partition({2}, 3), Partition({2, 1}, 3)), UsageError);
}

TEST(Partitions, CompareIsAPartialOrder) {
  auto leq = [](const Partition& a, const Partition& b) {
    const Order o = compare(a, b);
    return o == Order::Less || o == Order::Both;
  };
  for (int ell = 1; ell <= 3; ++ell) {
    const auto ps = enumerate(ell, 3);
    for (const auto& a : ps) {
      EXPECT_TRUE(leq(a, a));
      for (const auto& b : ps) {
        if (leq(a, b) && leq(b, a)) EXPECT_EQ(a, b);
        for (const auto& c : ps) {
          if (leq(a, b) && leq(b, c)) EXPECT_TRUE(leq(a, c));
        }
      }
    }
  }
}

TEST(Partitions, EmbeddingsAreInjective) {
  for (int ell = 1; ell <= 3; ++ell) {
    for (int n = 2; n <= 4; ++n) {
      std::set<std::vector<int>> plain, shifted;
      const auto target = enumerate(ell, n);
      for (const auto& p : enumerate(ell, n - 1)) {
        const Partition a = p.with_bound(n), b = p.shifted_up();
        EXPECT_NE(std::find(target.begin(), target.end(), a), target.end());
        EXPECT_NE(std::find(target.begin(), target.end(), b), target.end());
        plain.insert(a.parts());
        shifted.insert(b.parts());
      }
      EXPECT_EQ(plain.size(), enumerate(ell, n - 1).size());
      EXPECT_EQ(shifted.size(), enumerate(ell, n - 1).size());
    }
  }
}

TEST(Partitions, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 0), 1);
  EXPECT_EQ(binomial(2, 3), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
}

#pragma once

#include <string>
#include <vector>

#include "wfid/scalar.hpp"

namespace wfid {

// Weakly decreasing tuple with entries in [1, n]; entries are 1-based via at().
class Partition {
 public:
  Partition(std::vector<int> parts, int n);

  int length() const { return static_cast<int>(parts_.size()); }
  int n() const { return n_; }
  // a in [1, length()].
  int at(int a) const { return parts_[static_cast<std::size_t>(a - 1)]; }
  const std::vector<int>& parts() const { return parts_; }
  // omega_{m} for m in [1, n]; omega(0) is 0.
  int omega(int m) const;
  const std::vector<int>& multiplicities() const { return omega_; }

  // (lambda_1 + 1, ..., lambda_l + 1) viewed inside entries bounded by n + 1.
  Partition shifted_up() const;
  Partition with_bound(int n) const;
  bool within(int lo, int hi) const;

  std::string str() const;
  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.parts_ == b.parts_;
  }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
  int n_;
  std::vector<int> omega_;  // size n, omega_[m-1]
};

std::vector<int> multiplicities(const Partition& lambda, int n);

// All partitions of length ell with entries in [1, n], lexicographic ascending.
std::vector<Partition> enumerate(int ell, int n);
// Those with i <= entries <= j.
std::vector<Partition> enumerate_window(int ell, int n, int i, int j);

enum class Order { Less, Greater, Both, Incomparable };
// Componentwise comparison: Less means lambda <= mu.
Order compare(const Partition& lambda, const Partition& mu);

// (j, ..., j) of length ell.
Partition kappa(int ell, int j, int n);

enum class PointKind { X, Y };

struct EvalPoint {
  std::vector<Scalar> coords;
  PointKind kind = PointKind::X;
  Partition source{{}, 1};
  std::vector<int> block;  // block[a] = m for coordinate a (0-based a)
  bool last_in_block(std::size_t a) const {
    return a + 1 == coords.size() || block[a + 1] != block[a];
  }
};

// x>lambda: blocks m ascending, each (eta^{1-w} x_m, ..., eta^{-1} x_m, x_m).
EvalPoint x_point(const Partition& lambda, const std::vector<Scalar>& x, const Scalar& eta);
// y<lambda: blocks m ascending, each (eta^{w-1} y_m, ..., eta y_m, y_m).
EvalPoint y_point(const Partition& lambda, const std::vector<Scalar>& y, const Scalar& eta);

long binomial(long n, long k);

}  // namespace wfid

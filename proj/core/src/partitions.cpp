#include "wfid/partitions.hpp"

#include <algorithm>

#include "wfid/errors.hpp"

namespace wfid {

Partition::Partition(std::vector<int> parts, int n) : parts_(std::move(parts)), n_(n) {
  if (n_ < 1) throw UsageError("partition bound n must be at least 1");
  for (std::size_t a = 0; a < parts_.size(); ++a) {
    if (parts_[a] < 1 || parts_[a] > n_) throw UsageError("partition entry out of [1, n]");
    if (a > 0 && parts_[a] > parts_[a - 1]) throw UsageError("partition must be weakly decreasing");
  }
  omega_.assign(static_cast<std::size_t>(n_), 0);
  for (int v : parts_) ++omega_[static_cast<std::size_t>(v - 1)];
}

int Partition::omega(int m) const {
  if (m < 1 || m > n_) return 0;
  return omega_[static_cast<std::size_t>(m - 1)];
}

Partition Partition::shifted_up() const {
  std::vector<int> p = parts_;
  for (int& v : p) ++v;
  return Partition(std::move(p), n_ + 1);
}

Partition Partition::with_bound(int n) const { return Partition(parts_, n); }

bool Partition::within(int lo, int hi) const {
  return std::all_of(parts_.begin(), parts_.end(), [&](int v) { return lo <= v && v <= hi; });
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t a = 0; a < parts_.size(); ++a) {
    if (a) s += ",";
    s += std::to_string(parts_[a]);
  }
  return s + ")";
}

std::vector<int> multiplicities(const Partition& lambda, int n) {
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (int v : lambda.parts()) {
    if (v > n) throw UsageError("partition entry exceeds n");
    ++w[static_cast<std::size_t>(v - 1)];
  }
  return w;
}

namespace {

void grow(int ell, int hi, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == ell) {
    out.push_back(cur);
    return;
  }
  for (int v = 1; v <= hi; ++v) {
    cur.push_back(v);
    grow(ell, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate(int ell, int n) {
  if (ell < 0 || n < 1) throw UsageError("enumerate requires ell >= 0 and n >= 1");
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  grow(ell, n, cur, raw);
  std::sort(raw.begin(), raw.end());
  std::vector<Partition> out;
  out.reserve(raw.size());
  for (auto& p : raw) out.emplace_back(std::move(p), n);
  return out;
}

std::vector<Partition> enumerate_window(int ell, int n, int i, int j) {
  if (i < 1 || j > n || i > j) throw UsageError("window requires 1 <= i <= j <= n");
  std::vector<Partition> out;
  for (auto& p : enumerate(ell, n)) {
    if (p.within(i, j)) out.push_back(std::move(p));
  }
  return out;
}

Order compare(const Partition& lambda, const Partition& mu) {
  if (lambda.length() != mu.length()) throw UsageError("comparing partitions of different lengths");
  bool le = true, ge = true;
  for (int a = 1; a <= lambda.length(); ++a) {
    le = le && lambda.at(a) <= mu.at(a);
    ge = ge && lambda.at(a) >= mu.at(a);
  }
  if (le && ge) return Order::Both;
  if (le) return Order::Less;
  if (ge) return Order::Greater;
  return Order::Incomparable;
}

Partition kappa(int ell, int j, int n) {
  if (j < 1 || j > n) throw UsageError("kappa requires 1 <= j <= n");
  return Partition(std::vector<int>(static_cast<std::size_t>(ell), j), n);
}

namespace {

EvalPoint special_point(const Partition& lambda, const std::vector<Scalar>& base, const Scalar& eta,
                        PointKind kind) {
  const int n = lambda.n();
  if (static_cast<int>(base.size()) < n) throw UsageError("parameter vector shorter than n");
  EvalPoint pt;
  pt.kind = kind;
  pt.source = lambda;
  const Scalar step = kind == PointKind::X ? eta.inverse() : eta;
  for (int m = 1; m <= n; ++m) {
    const int w = lambda.omega(m);
    for (int k = w - 1; k >= 0; --k) {
      pt.coords.push_back(step.pow(k) * base[static_cast<std::size_t>(m - 1)]);
      pt.block.push_back(m);
    }
  }
  return pt;
}

}  // namespace

EvalPoint x_point(const Partition& lambda, const std::vector<Scalar>& x, const Scalar& eta) {
  return special_point(lambda, x, eta, PointKind::X);
}

EvalPoint y_point(const Partition& lambda, const std::vector<Scalar>& y, const Scalar& eta) {
  return special_point(lambda, y, eta, PointKind::Y);
}

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace wfid

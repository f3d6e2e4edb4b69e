#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wfid/polyweights.hpp"
#include "wfid/report.hpp"
#include "wfid/scalar.hpp"

namespace wfid {

// q, s_m = q^{Lambda_m}, z_m. Accessors are 1-based.
struct WeightParams {
  Scalar q;
  std::vector<Scalar> s, z;

  int n() const { return static_cast<int>(s.size()); }
  const Scalar& s_at(int m) const { return s[static_cast<std::size_t>(m - 1)]; }
  const Scalar& z_at(int m) const { return z[static_cast<std::size_t>(m - 1)]; }
  Scalar w(int m) const { return s_at(m) * s_at(m); }
  WeightParams to_prime(std::uint64_t prime) const;
};

// eta = q^2, x_m = w_m z_m, y_m = z_m / w_m.
PolyParams param_map(const WeightParams& wp);

// Evaluation Verma module V(z) with highest weight s, basis F^k v for k <= depth_cap.
class VermaModule {
 public:
  VermaModule(Scalar q, Scalar s, Scalar z, int depth_cap);

  const Scalar& highest() const { return s_; }
  const Scalar& z() const { return z_; }
  int depth_cap() const { return cap_; }
  // q^H on F^k v.
  Scalar qh(int k) const { return s_ * q_.pow(-k); }
  // E F^k v = gamma(k) F^{k-1} v.
  const Scalar& gamma(int k) const;
  // L^+_{ij}(u) F^k v = coefficient * F^{k'} v, or nothing when it vanishes.
  std::optional<std::pair<int, Scalar>> l_entry(int i, int j, const Scalar& u, int k) const;

 private:
  Scalar q_, s_, z_;
  int cap_;
  std::vector<Scalar> gamma_;
};

using MultiIndex = std::vector<int>;

class TensorVector {
 public:
  TensorVector() = default;
  static TensorVector basis(MultiIndex k, Scalar c = Scalar(1));

  const std::map<MultiIndex, Scalar>& terms() const { return terms_; }
  void add(const MultiIndex& k, const Scalar& c);
  Scalar at(const MultiIndex& k) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  TensorVector& operator+=(const TensorVector& o);
  TensorVector operator*(const Scalar& c) const;
  bool operator==(const TensorVector& o) const { return terms_ == o.terms_; }

 private:
  std::map<MultiIndex, Scalar> terms_;  // zero coefficients are never stored
};

nlohmann::json to_json(const TensorVector& v);

// V_1(z_1) x ... x V_n(z_n) (forward) or V_n(z_n) x ... x V_1(z_1) (reversed).
class TensorSpace {
 public:
  enum class Order { Forward, Reversed };
  TensorSpace(const WeightParams& wp, Order order, int depth_cap, int total_cap);

  Order order() const { return order_; }
  int factors() const { return static_cast<int>(modules_.size()); }
  const VermaModule& module(int f) const { return modules_[static_cast<std::size_t>(f)]; }
  TensorVector vacuum() const;
  // Coproduct action of L^+_{ij}(u): sum over internal index paths.
  TensorVector apply(int i, int j, const Scalar& u, const TensorVector& v) const;
  // L^+_{i1 j1}(u_1) ... L^+_{ik jk}(u_k) v; the rightmost operator acts first.
  TensorVector apply_string(int i, int j, const std::vector<Scalar>& us, const TensorVector& v) const;

 private:
  Order order_;
  Scalar q_;
  std::vector<VermaModule> modules_;
  int total_cap_;
};

// R(u) on C^2 x C^2, entry (ab, cd) maps e_c x e_d to e_a x e_b.
struct RMatrix {
  std::array<std::array<Scalar, 4>, 4> e;
  static RMatrix at(const Scalar& u, const Scalar& q);
  static int slot(int a, int b) { return 2 * (a - 1) + (b - 1); }
};

Report verify_rll(const RunConfig& cfg);
Report verify_kbi(const RunConfig& cfg);
Report verify_bc(const RunConfig& cfg);  // bc1 | bc2
Report verify_singular(const RunConfig& cfg);
Report verify_submodule(const RunConfig& cfg);

}  // namespace wfid

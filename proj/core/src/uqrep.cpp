#include "wfid/uqrep.hpp"

#include <numeric>

#include "wfid/errors.hpp"

namespace wfid {

WeightParams WeightParams::to_prime(std::uint64_t prime) const {
  WeightParams r{to_prime_field(q, prime), {}, {}};
  for (const auto& v : s) r.s.push_back(to_prime_field(v, prime));
  for (const auto& v : z) r.z.push_back(to_prime_field(v, prime));
  return r;
}

PolyParams param_map(const WeightParams& wp) {
  PolyParams p;
  p.eta = wp.q * wp.q;
  for (int m = 1; m <= wp.n(); ++m) {
    p.xs.push_back(wp.w(m) * wp.z_at(m));
    p.ys.push_back(wp.z_at(m) / wp.w(m));
  }
  return p;
}

VermaModule::VermaModule(Scalar q, Scalar s, Scalar z, int depth_cap)
    : q_(std::move(q)), s_(std::move(s)), z_(std::move(z)), cap_(depth_cap) {
  if (z_.is_zero()) throw DegenerateError("evaluation module with z = 0");
  const Scalar qq = q_ - q_.inverse();
  // [E, F] = (q^{2H} - q^{-2H}) / (q - q^{-1}) applied to F^{k-1} v.
  gamma_.push_back(Scalar(0));
  for (int k = 1; k <= cap_; ++k) {
    const Scalar h = qh(k - 1);
    gamma_.push_back(gamma_.back() + (h * h - (h * h).inverse()) / qq);
  }
  const Scalar s2 = s_ * s_;
  for (int k = 1; k <= cap_; ++k) {
    const Scalar closed = (q_.pow(k) - q_.pow(-k)) * (s2 * q_.pow(1 - k) - s2.inverse() * q_.pow(k - 1)) / (qq * qq);
    if (gamma_[static_cast<std::size_t>(k)] != closed) {
      throw ConsistencyError("E F^k coefficient disagrees with its product form at k = " + std::to_string(k));
    }
  }
}

const Scalar& VermaModule::gamma(int k) const {
  if (k < 0 || k > cap_) throw DepthOverflowError("E F^k requested beyond the depth cap");
  return gamma_[static_cast<std::size_t>(k)];
}

std::optional<std::pair<int, Scalar>> VermaModule::l_entry(int i, int j, const Scalar& u, int k) const {
  const Scalar uz = u / z_;
  const Scalar qq = q_ - q_.inverse();
  const Scalar h = qh(k);
  if (i == 1 && j == 1) return std::pair{k, -(uz * h - h.inverse())};
  if (i == 2 && j == 2) return std::pair{k, -(uz * h.inverse() - h)};
  if (i == 1 && j == 2) {
    if (k + 1 > cap_) throw DepthOverflowError("F raises past the depth cap " + std::to_string(cap_));
    return std::pair{k + 1, -(uz * qq)};
  }
  if (i == 2 && j == 1) {
    if (k == 0) return std::nullopt;
    return std::pair{k - 1, -(qq * gamma(k))};
  }
  throw UsageError("L-operator indices must be 1 or 2");
}

TensorVector TensorVector::basis(MultiIndex k, Scalar c) {
  TensorVector v;
  v.add(k, c);
  return v;
}

void TensorVector::add(const MultiIndex& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar TensorVector::at(const MultiIndex& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar(0) : it->second;
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

TensorVector TensorVector::operator*(const Scalar& c) const {
  TensorVector r;
  for (const auto& [k, v] : terms_) r.add(k, v * c);
  return r;
}

nlohmann::json to_json(const TensorVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, c] : v.terms()) out.push_back({{"index", k}, {"coefficient", c.str()}});
  return out;
}

TensorSpace::TensorSpace(const WeightParams& wp, Order order, int depth_cap, int total_cap)
    : order_(order), q_(wp.q), total_cap_(total_cap) {
  for (int f = 0; f < wp.n(); ++f) {
    const int m = order == Order::Forward ? f + 1 : wp.n() - f;
    modules_.emplace_back(wp.q, wp.s_at(m), wp.z_at(m), depth_cap);
  }
}

TensorVector TensorSpace::vacuum() const { return TensorVector::basis(MultiIndex(modules_.size(), 0)); }

TensorVector TensorSpace::apply(int i, int j, const Scalar& u, const TensorVector& v) const {
  // State: the running auxiliary index and the partially updated multi-index.
  std::map<std::pair<int, MultiIndex>, Scalar> cur;
  for (const auto& [k, c] : v.terms()) cur[{i, k}] += c;
  const int n = factors();
  for (int f = 0; f < n; ++f) {
    std::map<std::pair<int, MultiIndex>, Scalar> next;
    for (const auto& [state, c] : cur) {
      for (int b = 1; b <= 2; ++b) {
        if (f == n - 1 && b != j) continue;
        const auto hit = modules_[static_cast<std::size_t>(f)].l_entry(state.first, b, u, state.second[static_cast<std::size_t>(f)]);
        if (!hit || hit->second.is_zero()) continue;
        MultiIndex k = state.second;
        k[static_cast<std::size_t>(f)] = hit->first;
        next[{b, std::move(k)}] += c * hit->second;
      }
    }
    cur = std::move(next);
  }
  TensorVector out;
  for (const auto& [state, c] : cur) {
    const int depth = std::accumulate(state.second.begin(), state.second.end(), 0);
    if (depth > total_cap_) throw DepthOverflowError("total depth " + std::to_string(depth) + " exceeds the cap");
    out.add(state.second, c);
  }
  return out;
}

TensorVector TensorSpace::apply_string(int i, int j, const std::vector<Scalar>& us, const TensorVector& v) const {
  TensorVector r = v;
  for (auto it = us.rbegin(); it != us.rend(); ++it) r = apply(i, j, *it, r);
  return r;
}

RMatrix RMatrix::at(const Scalar& u, const Scalar& q) {
  RMatrix r;
  for (auto& row : r.e) row.fill(Scalar(0));
  const Scalar qq = q - q.inverse();
  for (int a = 1; a <= 2; ++a) r.e[slot(a, a)][slot(a, a)] = u * q - q.inverse();
  r.e[slot(1, 2)][slot(1, 2)] = u - Scalar(1);
  r.e[slot(2, 1)][slot(2, 1)] = u - Scalar(1);
  r.e[slot(1, 2)][slot(2, 1)] = u * qq;
  r.e[slot(2, 1)][slot(1, 2)] = qq;
  return r;
}

}  // namespace wfid

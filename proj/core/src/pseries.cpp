#include "wfid/pseries.hpp"

#include "wfid/errors.hpp"

namespace wfid {

PSeries::PSeries(int order) {
  if (order < 0) throw UsageError("truncation order must be nonnegative");
  c_.assign(static_cast<std::size_t>(order) + 1, Scalar(0));
}

PSeries::PSeries(std::vector<Scalar> coeffs, int order) : PSeries(order) {
  for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = std::move(coeffs[k]);
}

PSeries PSeries::constant(const Scalar& c, int order) {
  PSeries r(order);
  r.c_[0] = c;
  return r;
}

PSeries PSeries::monomial(const Scalar& c, int k, int order) {
  PSeries r(order);
  if (k < 0) throw UsageError("negative exponent in PSeries::monomial");
  if (k <= order) r.c_[static_cast<std::size_t>(k)] = c;
  return r;
}

void PSeries::check_order(const PSeries& o) const {
  if (o.order() != order()) throw UsageError("PSeries truncation orders differ");
}

bool PSeries::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

int PSeries::valuation() const {
  for (int k = 0; k <= order(); ++k) {
    if (!c_[static_cast<std::size_t>(k)].is_zero()) return k;
  }
  return order() + 1;
}

PSeries PSeries::operator-() const {
  PSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PSeries& PSeries::operator+=(const PSeries& o) {
  check_order(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

PSeries& PSeries::operator-=(const PSeries& o) {
  check_order(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

PSeries& PSeries::operator*=(const PSeries& o) {
  check_order(o);
  const std::size_t n = c_.size();
  std::vector<Scalar> r(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(r);
  return *this;
}

PSeries& PSeries::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

PSeries& PSeries::operator/=(const PSeries& o) { return *this *= o.inverse(); }

bool operator==(const PSeries& a, const PSeries& b) {
  a.check_order(b);
  for (std::size_t k = 0; k < a.c_.size(); ++k) {
    if (a.c_[k] != b.c_[k]) return false;
  }
  return true;
}

PSeries PSeries::inverse() const {
  if (c_[0].is_zero()) throw DivisionByZero("PSeries with zero constant term is not invertible");
  const std::size_t n = c_.size();
  PSeries r(order());
  const Scalar i0 = c_[0].inverse();
  r.c_[0] = i0;
  for (std::size_t k = 1; k < n; ++k) {
    Scalar acc(0);
    for (std::size_t j = 1; j <= k; ++j) {
      if (!c_[j].is_zero()) acc += c_[j] * r.c_[k - j];
    }
    r.c_[k] = -(i0 * acc);
  }
  return r;
}

PSeries PSeries::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  PSeries base = *this, r = constant(Scalar(1), order());
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

PSeries PSeries::shifted(int k) const {
  PSeries r(order());
  const int n = order() + 1;
  if (k >= 0) {
    for (int i = 0; i + k < n; ++i) r.c_[static_cast<std::size_t>(i + k)] = c_[static_cast<std::size_t>(i)];
    return r;
  }
  for (int i = 0; i < -k && i < n; ++i) {
    if (!c_[static_cast<std::size_t>(i)].is_zero()) {
      throw UsageError("PSeries::shifted: series not divisible by p^" + std::to_string(-k));
    }
  }
  // The top -k coefficients are filled with zero: the series is treated as an exact polynomial.
  for (int i = -k; i < n; ++i) r.c_[static_cast<std::size_t>(i + k)] = c_[static_cast<std::size_t>(i)];
  return r;
}

std::vector<std::string> PSeries::strs() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.str());
  return out;
}

PSeries pochhammer(const PSeries& u, int e) {
  if (e < 1) throw UsageError("pochhammer: nome exponent must be positive");
  const int K = u.order();
  PSeries one = PSeries::constant(Scalar(1), K);
  PSeries r = one;
  for (int s = 0; s == 0 || e * s <= K; ++s) {
    PSeries f = one - u.shifted(e * s);
    r *= f;
  }
  return r;
}

PSeries pochhammer(const Scalar& u, int e, int order) {
  return pochhammer(PSeries::constant(u, order), e);
}

PSeries theta(const PSeries& u, int e) {
  if (e < 1) throw UsageError("theta: nome exponent must be positive");
  const int K = u.order();
  const int v = u.valuation();
  if (v > e || v > K) {
    throw DivisionByZero("theta: argument valuation exceeds the nome exponent");
  }
  // u = p^v w with w a unit, so p^e/u = p^{e-v}/w.
  PSeries w(K);
  {
    std::vector<Scalar> c(u.coeffs().begin() + v, u.coeffs().end());
    w = PSeries(std::move(c), K);
  }
  // u is read as an exact polynomial in p, so w = u / p^v is exact as well.
  PSeries pu = w.inverse().shifted(e - v);
  return pochhammer(u, e) * pochhammer(pu, e) * pochhammer(PSeries::monomial(Scalar(1), e, K), e);
}

PSeries theta(const Scalar& u, int order, int e) {
  if (u.is_zero()) throw DivisionByZero("theta: zero argument");
  return theta(PSeries::constant(u, order), e);
}

PSeries theta_reduced(const Scalar& u, int order) {
  if (u.is_zero()) throw DivisionByZero("theta_reduced: zero argument");
  return pochhammer(PSeries::monomial(u, 1, order), 1) *
         pochhammer(PSeries::monomial(u.inverse(), 1, order), 1) *
         pochhammer(PSeries::monomial(Scalar(1), 1, order), 1);
}

PSeries euler_cubed(int order) {
  return pochhammer(PSeries::monomial(Scalar(1), 1, order), 1).pow(3);
}

}  // namespace wfid

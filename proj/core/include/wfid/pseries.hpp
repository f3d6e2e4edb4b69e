#pragma once

#include <string>
#include <vector>

#include "wfid/scalar.hpp"

namespace wfid {

// Truncated power series c_0 + c_1 p + ... + c_K p^K, arithmetic mod p^{K+1}.
class PSeries {
 public:
  explicit PSeries(int order = 0);
  PSeries(std::vector<Scalar> coeffs, int order);

  static PSeries constant(const Scalar& c, int order);
  // c * p^k (zero if k > order).
  static PSeries monomial(const Scalar& c, int k, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  bool is_zero() const;
  // Index of the first nonzero coefficient, or order()+1 for the zero series.
  int valuation() const;

  PSeries operator-() const;
  PSeries& operator+=(const PSeries& o);
  PSeries& operator-=(const PSeries& o);
  PSeries& operator*=(const PSeries& o);
  PSeries& operator/=(const PSeries& o);
  PSeries& operator*=(const Scalar& s);

  friend PSeries operator+(PSeries a, const PSeries& b) { return a += b; }
  friend PSeries operator-(PSeries a, const PSeries& b) { return a -= b; }
  friend PSeries operator*(PSeries a, const PSeries& b) { return a *= b; }
  friend PSeries operator/(PSeries a, const PSeries& b) { return a /= b; }
  friend PSeries operator*(PSeries a, const Scalar& s) { return a *= s; }
  friend PSeries operator*(const Scalar& s, PSeries a) { return a *= s; }
  friend bool operator==(const PSeries& a, const PSeries& b);
  friend bool operator!=(const PSeries& a, const PSeries& b) { return !(a == b); }

  // Requires an invertible constant term.
  PSeries inverse() const;
  PSeries pow(long e) const;
  // Multiply by p^k; negative k divides and requires the low coefficients to vanish.
  PSeries shifted(int k) const;

  std::vector<std::string> strs() const;

 private:
  void check_order(const PSeries& o) const;
  std::vector<Scalar> c_;
};

// (u; p^e)_inf truncated at order K.
PSeries pochhammer(const PSeries& u, int e);
PSeries pochhammer(const Scalar& u, int e, int order);

// theta(u; p^e) = (u;p^e)(p^e/u;p^e)(p^e;p^e). u may carry a valuation v with 0 <= v <= e;
// it is read as an exact polynomial in p.
PSeries theta(const PSeries& u, int e = 1);
PSeries theta(const Scalar& u, int order, int e = 1);

// theta(u)/(1-u) with the factor cancelled before expansion; regular at u = 1.
PSeries theta_reduced(const Scalar& u, int order);

// (p;p)_inf^3, the residue constant of theta at its zero.
PSeries euler_cubed(int order);

}  // namespace wfid

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wfid/errors.hpp"
#include "wfid/pseries.hpp"
#include "wfid/scalar.hpp"

namespace wfid {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Ring helpers so that elimination works over Scalar and PSeries alike.
inline Scalar zero_like(const Scalar&) { return Scalar(0); }
inline Scalar one_like(const Scalar&) { return Scalar(1); }
inline bool is_unit(const Scalar& s) { return !s.is_zero(); }
inline PSeries zero_like(const PSeries& s) { return PSeries(s.order()); }
inline PSeries one_like(const PSeries& s) { return PSeries::constant(Scalar(1), s.order()); }
inline bool is_unit(const PSeries& s) { return !s[0].is_zero(); }

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) throw UsageError("matrix shapes do not match");
  Matrix<T> r(a.size(), std::vector<T>(b[0].size(), zero_like(a[0][0])));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  }
  return r;
}

// Fraction-free is unnecessary over a field; over PSeries the pivot must have a
// unit constant term, otherwise the matrix counts as singular at this order.
template <class T>
T determinant(Matrix<T> m) {
  const std::size_t n = m.size();
  if (n == 0) throw UsageError("determinant of an empty matrix");
  T det = one_like(m[0][0]);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !is_unit(m[p][c])) ++p;
    if (p == n) {
      bool all_zero = true;
      for (std::size_t r = c; r < n; ++r) all_zero = all_zero && (m[r][c] == zero_like(m[r][c]));
      if (all_zero) return zero_like(det);
      throw DegenerateError("determinant: no invertible pivot");
    }
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const T inv = m[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == zero_like(m[r][c])) continue;
      const T f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  const std::size_t n = a.size();
  if (n == 0) return {};
  Matrix<T> m = a;
  Matrix<T> r(n, std::vector<T>(n, zero_like(a[0][0])));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = one_like(a[0][0]);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && !is_unit(m[p][c])) ++p;
    if (p == n) throw DegenerateError("matrix is singular (no invertible pivot)");
    std::swap(m[p], m[c]);
    std::swap(r[p], r[c]);
    const T inv = m[c][c].inverse();
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] *= inv;
      r[c][k] *= inv;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == c || m[row][c] == zero_like(m[row][c])) continue;
      const T f = m[row][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[row][k] -= f * m[c][k];
        r[row][k] -= f * r[c][k];
      }
    }
  }
  return r;
}

template <class T>
Matrix<T> identity_like(std::size_t n, const T& sample) {
  Matrix<T> r(n, std::vector<T>(n, zero_like(sample)));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = one_like(sample);
  return r;
}

}  // namespace wfid

#pragma once

#include <gtest/gtest.h>

#include <ostream>
#include <string>
#include <vector>

#include "riordan_gep/matrix.hpp"
#include "riordan_gep/poly.hpp"
#include "riordan_gep/series.hpp"

namespace rgep {

inline void PrintTo(const Poly& p, std::ostream* os) {
  *os << "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) *os << (i ? ", " : "") << to_string(p.coeffs()[i]);
  *os << "]";
}

inline void PrintTo(const Series& s, std::ostream* os) {
  *os << "Series<" << s.order() << ">[";
  for (int i = 0; i <= s.order(); ++i) *os << (i ? ", " : "") << to_string(s[i]);
  *os << "]";
}

inline void PrintTo(const RMatrix& m, std::ostream* os) {
  *os << m.shape() << " {";
  for (int i = 0; i < m.rows(); ++i) {
    *os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) *os << (j ? " " : "") << to_string(m(i, j));
  }
  *os << "}";
}

}  // namespace rgep

namespace testing_support {

using rgep::Poly;
using rgep::Rational;
using rgep::RMatrix;
using rgep::Series;

/// Rational from "p" or "p/q".
inline Rational R(const char* text) { return rgep::parse_rational(text); }

/// Series from integer coefficients.
inline Series S(std::initializer_list<long> coeffs, int order) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Series(std::move(c), order);
}

inline Poly P(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

/// Matrix from integer rows, optionally scaled.
inline RMatrix M(std::initializer_list<std::initializer_list<long>> rows, const Rational& scale = 1) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.begin()->size()) : 0;
  RMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long v : row) m(i, j++) = scale * Rational(v);
    ++i;
  }
  return m;
}

/// Matrix from rational strings.
inline RMatrix MQ(std::initializer_list<std::initializer_list<const char*>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.begin()->size()) : 0;
  RMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const char* v : row) m(i, j++) = R(v);
    ++i;
  }
  return m;
}

/// Schoolbook product of coefficient lists, truncated to n+1 terms.
inline std::vector<Rational> naive_mul(const std::vector<Rational>& a, const std::vector<Rational>& b, int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n - i; ++j)
      if (i < static_cast<int>(a.size()) && j < static_cast<int>(b.size())) c[i + j] += a[i] * b[j];
  return c;
}

/// a^k by k schoolbook multiplications.
inline std::vector<Rational> naive_pow(const std::vector<Rational>& a, int k, int n) {
  std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
  r[0] = 1;
  for (int i = 0; i < k; ++i) r = naive_mul(r, a, n);
  return r;
}

/// [x^n] of a^k for a given as a coefficient list.
inline Rational naive_coeff_of_power(const std::vector<Rational>& a, int k, int n) { return naive_pow(a, k, n)[n]; }

inline Rational fact(long n) {
  Rational r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

/// C(n, k) by the multiplicative formula, zero outside 0 <= k <= n.
inline Rational choose(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  Rational r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace testing_support

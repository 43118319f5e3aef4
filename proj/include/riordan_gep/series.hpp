#pragma once

// Truncated formal power series over exact rationals. Every series carries an
// explicit truncation order; coefficients 0..order are known exactly and
// binary operations produce the min of their operands' orders.

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "riordan_gep/poly.hpp"
#include "riordan_gep/rational.hpp"

namespace rgep {

class Series {
 public:
  /// The zero series known to order 0.
  Series() : c_(1) {}

  /// Coefficients 0..order; missing entries are zero, extra entries are dropped.
  Series(std::vector<Rational> coeffs, int order) : c_(std::move(coeffs)) {
    if (order < 0) fail(ErrorKind::InvalidArgument, "negative truncation order");
    c_.resize(static_cast<std::size_t>(order) + 1);
  }
  Series(std::initializer_list<Rational> coeffs, int order)
      : Series(std::vector<Rational>(coeffs), order) {}

  static Series zero(int order) { return Series({}, order); }
  static Series constant(const Rational& value, int order) { return Series({value}, order); }
  static Series x(int order) { return Series({0, 1}, order); }
  static Series from_poly(const Poly& p, int order) { return Series(p.coeffs(), order); }
  /// 1/(1 - r x)
  static Series geometric(const Rational& ratio, int order) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    Rational term = 1;
    for (auto& v : c) {
      v = term;
      term *= ratio;
    }
    return Series(std::move(c), order);
  }
  /// exp(r x)
  static Series exponential(const Rational& rate, int order) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    Rational term = 1;
    for (int k = 0; k <= order; ++k) {
      c[k] = term;
      term *= rate;
      term /= k + 1;
    }
    return Series(std::move(c), order);
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Coefficient k; InsufficientOrder when k is beyond the truncation.
  const Rational& coeff(int k) const {
    if (k < 0) fail(ErrorKind::OutOfRange, "negative coefficient index");
    if (k > order())
      fail(ErrorKind::InsufficientOrder, "coefficient " + std::to_string(k) +
                                            " requested from a series of order " + std::to_string(order()));
    return c_[k];
  }

  /// Same series, known to a lower order.
  Series truncated(int order) const {
    if (order > this->order()) fail(ErrorKind::InsufficientOrder, "cannot raise truncation order");
    return Series(std::vector<Rational>(c_.begin(), c_.begin() + order + 1), order);
  }

  /// Index of the last nonzero known coefficient, -1 for zero.
  int degree() const {
    for (std::size_t i = c_.size(); i > 0; --i)
      if (c_[i - 1] != 0) return static_cast<int>(i) - 1;
    return -1;
  }

  Poly to_poly() const { return Poly(c_); }

  /// s(c x)
  Series scaled_argument(const Rational& c) const {
    Series r = *this;
    Rational f = 1;
    for (auto& v : r.c_) {
      v *= f;
      f *= c;
    }
    return r;
  }

  /// s(x)/x^k, losing k orders; the low coefficients must vanish.
  Series div_x(int k = 1) const {
    for (int i = 0; i < k && i <= order(); ++i)
      if (c_[i] != 0) fail(ErrorKind::InvalidArgument, "series not divisible by x^" + std::to_string(k));
    if (order() < k) fail(ErrorKind::InsufficientOrder, "not enough coefficients to divide by x^" + std::to_string(k));
    return Series(std::vector<Rational>(c_.begin() + k, c_.end()), order() - k);
  }

  /// x^k s(x), gaining k orders.
  Series times_x(int k = 1) const {
    std::vector<Rational> c(static_cast<std::size_t>(k), Rational(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Series(std::move(c), order() + k);
  }

  Series derivative() const {
    if (order() == 0) return zero(0);
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k] * static_cast<long>(k);
    return Series(std::move(c), order() - 1);
  }

  friend Series operator+(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[k] = a.c_[k] + b.c_[k];
    return Series(std::move(c), n);
  }
  friend Series operator-(const Series& a) {
    Series r = a;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
  friend Series operator*(const Rational& s, const Series& a) {
    Series r = a;
    for (auto& v : r.c_) v *= s;
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; i + j <= n; ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Series(std::move(c), n);
  }
  /// Equal orders and equal coefficients.
  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  std::vector<Rational> c_;
};

/// Coefficientwise equality up to the smaller of the two orders.
inline bool agree(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  for (int k = 0; k <= n; ++k)
    if (a[k] != b[k]) return false;
  return true;
}

inline Series series_mul(const Series& a, const Series& b) { return a * b; }

/// a(g(x)); g must have zero constant term.
inline Series series_compose(const Series& a, const Series& g) {
  if (g[0] != 0) fail(ErrorKind::NonzeroConstantTerm, "inner series of a composition must have g_0 = 0");
  const int n = std::min(a.order(), g.order());
  Series gt = g.truncated(n);
  Series result = Series::constant(a[n], n);
  for (int k = n - 1; k >= 0; --k) result = result * gt + Series::constant(a[k], n);
  return result;
}

/// Multiplicative inverse 1/a(x).
inline Series series_inv(const Series& a) {
  if (a[0] == 0) fail(ErrorKind::ZeroConstantTerm, "series with a_0 = 0 has no multiplicative inverse");
  const int n = a.order();
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  const Rational inv0 = Rational(1) / a[0];
  b[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += a[j] * b[k - j];
    b[k] = -acc * inv0;
  }
  return Series(std::move(b), n);
}

inline Series series_log(const Series& a) {
  if (a[0] != 1) fail(ErrorKind::ConstantTermNotOne, "log requires a_0 = 1");
  const int n = a.order();
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  // k b_k = k a_k - sum_{j=1}^{k-1} j b_j a_{k-j}
  for (int k = 1; k <= n; ++k) {
    Rational acc = a[k] * k;
    for (int j = 1; j < k; ++j) acc -= b[j] * j * a[k - j];
    b[k] = acc / k;
  }
  return Series(std::move(b), n);
}

inline Series series_exp(const Series& a) {
  if (a[0] != 0) fail(ErrorKind::NonzeroConstantTerm, "exp requires a_0 = 0");
  const int n = a.order();
  std::vector<Rational> e(static_cast<std::size_t>(n) + 1);
  e[0] = 1;
  // k e_k = sum_{j=1}^{k} j a_j e_{k-j}
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) acc += a[j] * j * e[k - j];
    e[k] = acc / k;
  }
  return Series(std::move(e), n);
}

/// a^phi. Integer exponents work for any a (negative ones need a_0 != 0);
/// other exponents need a_0 = 1.
inline Series series_pow(const Series& a, const Rational& phi) {
  const int n = a.order();
  if (is_integer(phi)) {
    long e = to_long(phi);
    if (e < 0) return series_pow(series_inv(a), -Rational(phi));
    Series result = Series::constant(1, n), base = a;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }
  if (a[0] != 1) fail(ErrorKind::ConstantTermNotOne, "non-integer power requires a_0 = 1");
  // k p_k = sum_{j=1}^{k} ((phi + 1) j - k) a_j p_{k-j}
  std::vector<Rational> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  const Rational phi1 = phi + 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) {
      if (a[j] == 0) continue;
      acc += (phi1 * j - k) * a[j] * p[k - j];
    }
    p[k] = acc / k;
  }
  return Series(std::move(p), n);
}

/// The series h with h(g(x)) = x (equivalently g(h(x)) = x), solved term by term.
inline Series series_comp_inverse(const Series& g) {
  if (g[0] != 0 || g.order() < 1 || g[1] == 0)
    fail(ErrorKind::NotInvertibleForComposition, "compositional inverse requires g_0 = 0 and g_1 != 0");
  const int n = g.order();
  const Rational inv1 = Rational(1) / g[1];
  std::vector<Rational> h(static_cast<std::size_t>(n) + 1);
  h[1] = inv1;
  for (int k = 2; k <= n; ++k) {
    // With h_k still zero, [x^k] g(h) collects every term not involving h_k.
    Series gh = series_compose(g.truncated(k), Series(h, k));
    h[k] = -gh[k] * inv1;
  }
  return Series(std::move(h), n);
}

}  // namespace rgep

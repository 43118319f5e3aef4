#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "riordan_gep/rational.hpp"

namespace rgep {

/// Exact polynomial with dense coefficients, lowest degree first.
/// Trailing zeros are allowed; equality compares values, not storage.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) {}
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

  static Poly constant(const Rational& value) { return Poly({value}); }
  static Poly monomial(int degree, const Rational& coeff = 1) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    c.back() = coeff;
    return Poly(std::move(c));
  }
  /// (x + shift)^k
  static Poly linear_power(const Rational& shift, int k) {
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) c[i] = Rational(binomial(k, i)) * rgep::pow(shift, k - i);
    return Poly(std::move(c));
  }

  /// Index of the last nonzero coefficient, -1 for the zero polynomial.
  int degree() const {
    for (std::size_t i = c_.size(); i > 0; --i)
      if (c_[i - 1] != 0) return static_cast<int>(i) - 1;
    return -1;
  }
  bool is_zero() const { return degree() < 0; }

  Rational coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return 0;
    return c_[i];
  }
  void set_coeff(int i, const Rational& value) {
    if (static_cast<std::size_t>(i) >= c_.size()) c_.resize(static_cast<std::size_t>(i) + 1);
    c_[i] = value;
  }
  const std::vector<Rational>& coeffs() const { return c_; }
  std::size_t storage_size() const { return c_.size(); }

  /// Exactly `size` coefficients; throws DegreeTooHigh if the polynomial does not fit.
  std::vector<Rational> to_vector(int size) const {
    if (degree() >= size)
      fail(ErrorKind::DegreeTooHigh, "degree " + std::to_string(degree()) +
                                        " does not fit in " + std::to_string(size) + " coefficients");
    std::vector<Rational> out(static_cast<std::size_t>(size));
    for (int i = 0; i <= degree(); ++i) out[i] = c_[i];
    return out;
  }

  Poly trimmed() const {
    Poly p = *this;
    p.c_.resize(static_cast<std::size_t>(degree() + 1));
    return p;
  }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = c_.size(); i > 0; --i) acc = acc * x + c_[i - 1];
    return acc;
  }

  /// p(x + s)
  Poly shifted(const Rational& s) const {
    Poly result;
    for (int i = degree(); i >= 0; --i) result = result * Poly({s, 1}) + constant(c_[i]);
    return result;
  }

  /// x^k p(x)
  Poly times_x(int k = 1) const {
    std::vector<Rational> c(static_cast<std::size_t>(k), Rational(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Poly(std::move(c));
  }

  /// p(x)/x^k; the low coefficients must vanish.
  Poly div_x(int k = 1) const {
    for (int i = 0; i < k; ++i)
      if (coeff(i) != 0) fail(ErrorKind::InvalidArgument, "polynomial not divisible by x^" + std::to_string(k));
    if (c_.size() <= static_cast<std::size_t>(k)) return {};
    return Poly(std::vector<Rational>(c_.begin() + k, c_.end()));
  }

  /// Coefficients 0..n in reverse order (the n+1 point reversal).
  Poly reversed(int n) const {
    if (degree() > n) fail(ErrorKind::DegreeTooHigh, "cannot reverse beyond degree " + std::to_string(n));
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[n - i] = coeff(i);
    return Poly(std::move(c));
  }

  Poly pow(int e) const {
    if (e < 0) fail(ErrorKind::InvalidArgument, "negative polynomial power");
    Poly result{1}, base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  /// Quotient and remainder with respect to a nonzero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const {
    const int dd = divisor.degree();
    if (dd < 0) fail(ErrorKind::InvalidArgument, "division by the zero polynomial");
    Poly rem = trimmed();
    const int qd = rem.degree() - dd;
    if (qd < 0) return {Poly{}, rem};
    std::vector<Rational> quot(static_cast<std::size_t>(qd) + 1);
    const Rational lead = divisor.c_[dd];
    for (int i = qd; i >= 0; --i) {
      Rational t = rem.coeff(i + dd) / lead;
      quot[i] = t;
      if (t == 0) continue;
      for (int j = 0; j <= dd; ++j) rem.c_[i + j] -= t * divisor.c_[j];
    }
    return {Poly(std::move(quot)), rem.trimmed()};
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<Rational> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    const int da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return {};
    std::vector<Rational> c(static_cast<std::size_t>(da + db) + 1);
    for (int i = 0; i <= da; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j <= db; ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> c(p.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * p.c_[i];
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    const int d = std::max(a.degree(), b.degree());
    for (int i = 0; i <= d; ++i)
      if (a.coeff(i) != b.coeff(i)) return false;
    return true;
  }

 private:
  std::vector<Rational> c_;
};

/// The polynomial of degree <= values.size()-1 through (m, values[m]), m = 0, 1, ...
/// Newton form in the binomial basis C(x, k).
inline Poly interpolate_at_naturals(std::span<const Rational> values) {
  std::vector<Rational> diff(values.begin(), values.end());
  Poly result;
  Poly basis{1};  // C(x, k) as a polynomial
  for (std::size_t k = 0; k < diff.size(); ++k) {
    result = result + diff[0] * basis;
    for (std::size_t i = 0; i + 1 < diff.size() - k; ++i) diff[i] = diff[i + 1] - diff[i];
    basis = q(1, static_cast<long>(k) + 1) * (basis * Poly({-Rational(static_cast<long>(k)), 1}));
  }
  return result;
}

/// x(x+1)...(x+m-1)
inline Poly rising_factorial(int m) {
  Poly p{1};
  for (int i = 0; i < m; ++i) p = p * Poly({Rational(i), 1});
  return p;
}

/// x(x-1)...(x-m+1)
inline Poly falling_factorial(int m) {
  Poly p{1};
  for (int i = 0; i < m; ++i) p = p * Poly({Rational(-i), 1});
  return p;
}

}  // namespace rgep

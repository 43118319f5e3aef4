#pragma once

// Formal Dirichlet series a(s) = sum_{n>=1} a_n / n^s, truncated at N, and the
// GEP pipeline for the arrays <a(s)> whose column k holds the coefficients of a^k.
// Row n of such an array only involves the divisors of n, so the row-level
// functions below work on the divisor lattice of n.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "riordan_gep/gep.hpp"
#include "riordan_gep/matrix.hpp"
#include "riordan_gep/poly.hpp"
#include "riordan_gep/riordan.hpp"

namespace rgep {

/// Prime factorization as (prime, exponent) pairs, ascending.
inline std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) fail(ErrorKind::OutOfRange, "factorize needs n >= 1");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Number of prime factors with multiplicity; the degree of v_n.
inline int big_omega(long n) {
  int total = 0;
  for (const auto& [p, e] : factorize(n)) total += e;
  return total;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> d{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = d.size();
    long pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) d.push_back(d[i] * pk);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

class DirichletSeries {
 public:
  /// Zero series with coefficients 1..N.
  explicit DirichletSeries(int N) : c_(static_cast<std::size_t>(check_bound(N)) + 1) {}

  /// coeffs[i] is the coefficient of (i+1)^{-s}.
  DirichletSeries(const std::vector<Rational>& coeffs, int N) : DirichletSeries(N) {
    for (std::size_t i = 0; i < coeffs.size() && i < static_cast<std::size_t>(N); ++i) c_[i + 1] = coeffs[i];
  }

  static DirichletSeries identity(int N) {
    DirichletSeries s(N);
    s.c_[1] = 1;
    return s;
  }
  static DirichletSeries zeta(int N) {
    DirichletSeries s(N);
    for (int n = 1; n <= N; ++n) s.c_[n] = 1;
    return s;
  }

  int bound() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  Rational& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }

  friend bool operator==(const DirichletSeries&, const DirichletSeries&) = default;

  friend DirichletSeries operator+(const DirichletSeries& a, const DirichletSeries& b) {
    DirichletSeries r(std::min(a.bound(), b.bound()));
    for (int n = 1; n <= r.bound(); ++n) r.c_[n] = a.c_[n] + b.c_[n];
    return r;
  }
  friend DirichletSeries operator-(const DirichletSeries& a, const DirichletSeries& b) {
    DirichletSeries r(std::min(a.bound(), b.bound()));
    for (int n = 1; n <= r.bound(); ++n) r.c_[n] = a.c_[n] - b.c_[n];
    return r;
  }
  friend DirichletSeries operator*(const Rational& s, const DirichletSeries& a) {
    DirichletSeries r = a;
    for (auto& v : r.c_) v *= s;
    return r;
  }

 private:
  static int check_bound(int N) {
    if (N < 1) fail(ErrorKind::OutOfRange, "Dirichlet series needs N >= 1");
    return N;
  }
  std::vector<Rational> c_;
};

inline DirichletSeries dirichlet_mul(const DirichletSeries& a, const DirichletSeries& b) {
  const int N = std::min(a.bound(), b.bound());
  DirichletSeries r(N);
  for (int d = 1; d <= N; ++d) {
    if (a[d] == 0) continue;
    for (int e = 1; d * e <= N; ++e)
      if (b[e] != 0) r[d * e] += a[d] * b[e];
  }
  return r;
}

namespace detail {

inline void require_unit_leading(const DirichletSeries& a, const char* what) {
  if (a[1] != 1) fail(ErrorKind::LeadingCoefficientNotOne, std::string(what) + " requires a_1 = 1");
}

}  // namespace detail

inline DirichletSeries dirichlet_inv(const DirichletSeries& a) {
  if (a[1] == 0) fail(ErrorKind::LeadingCoefficientNotOne, "Dirichlet inverse requires a_1 != 0");
  const int N = a.bound();
  DirichletSeries r(N);
  r[1] = Rational(1) / a[1];
  for (int n = 2; n <= N; ++n) {
    Rational acc = 0;
    for (long d : divisors(n))
      if (d > 1) acc += a[static_cast<int>(d)] * r[static_cast<int>(n / d)];
    r[n] = -acc / a[1];
  }
  return r;
}

/// log a through the derivation a_n -> Omega(n) a_n: Omega(log a) = Omega(a) * a^{-1}.
inline DirichletSeries dirichlet_log(const DirichletSeries& a) {
  detail::require_unit_leading(a, "Dirichlet log");
  const int N = a.bound();
  DirichletSeries da(N);
  for (int n = 2; n <= N; ++n) da[n] = Rational(big_omega(n)) * a[n];
  DirichletSeries r = dirichlet_mul(da, dirichlet_inv(a));
  for (int n = 2; n <= N; ++n) r[n] /= big_omega(n);
  r[1] = 0;
  return r;
}

/// exp b for b_1 = 0, from Omega(e) = Omega(b) * e.
inline DirichletSeries dirichlet_exp(const DirichletSeries& b) {
  if (b[1] != 0) fail(ErrorKind::NonzeroConstantTerm, "Dirichlet exp requires b_1 = 0");
  const int N = b.bound();
  DirichletSeries e(N);
  e[1] = 1;
  for (int n = 2; n <= N; ++n) {
    Rational acc = 0;
    for (long d : divisors(n))
      if (d > 1) acc += Rational(big_omega(d)) * b[static_cast<int>(d)] * e[static_cast<int>(n / d)];
    e[n] = acc / big_omega(n);
  }
  return e;
}

inline DirichletSeries dirichlet_pow(const DirichletSeries& a, const Rational& phi) {
  detail::require_unit_leading(a, "Dirichlet power");
  return dirichlet_exp(phi * dirichlet_log(a));
}

enum class DirichletOp { Pow, Log, Inv };

inline DirichletSeries dirichlet_pow_log_inv(const DirichletSeries& a, DirichletOp op, const Rational& phi = 1) {
  detail::require_unit_leading(a, "Dirichlet pow/log/inv");
  switch (op) {
    case DirichletOp::Pow: return dirichlet_pow(a, phi);
    case DirichletOp::Log: return dirichlet_log(a);
    case DirichletOp::Inv: return dirichlet_inv(a);
  }
  fail(ErrorKind::InvalidArgument, "unknown Dirichlet operation");
}

enum class DirichletVariant { Plain, MinusOne, Log, Inv };

inline const char* to_string(DirichletVariant v) {
  switch (v) {
    case DirichletVariant::Plain: return "plain";
    case DirichletVariant::MinusOne: return "minus-one";
    case DirichletVariant::Log: return "log";
    case DirichletVariant::Inv: return "inv";
  }
  return "?";
}

inline DirichletSeries dirichlet_base(const DirichletSeries& a, DirichletVariant variant) {
  switch (variant) {
    case DirichletVariant::Plain: return a;
    case DirichletVariant::MinusOne: return a - DirichletSeries::identity(a.bound());
    case DirichletVariant::Log: return dirichlet_log(a);
    case DirichletVariant::Inv: return dirichlet_inv(a);
  }
  fail(ErrorKind::InvalidArgument, "unknown Dirichlet variant");
}

/// Rows n = 0..rows-1 (row 0 is zero), columns k = 0..cols-1 holding [n] base^k.
inline RMatrix dirichlet_window(const DirichletSeries& a, DirichletVariant variant, int rows, int cols) {
  if (rows < 1 || cols < 1) fail(ErrorKind::OutOfRange, "Dirichlet window needs rows, cols >= 1");
  if (rows - 1 > a.bound())
    fail(ErrorKind::InsufficientOrder, "Dirichlet series known to " + std::to_string(a.bound()) + ", need " +
                                          std::to_string(rows - 1));
  const DirichletSeries base = dirichlet_base(a, variant);
  RMatrix w(rows, cols);
  DirichletSeries power = DirichletSeries::identity(a.bound());
  for (int k = 0; k < cols; ++k) {
    for (int n = 1; n < rows; ++n) w(n, k) = power[n];
    if (k + 1 < cols) power = dirichlet_mul(power, base);
  }
  return w;
}

namespace detail {

/// Dirichlet series restricted to the divisors of n.
class DivisorRow {
 public:
  DivisorRow(long n, std::vector<long> divs) : n_(n), d_(std::move(divs)), c_(d_.size()) {}

  static DivisorRow from(const DirichletSeries& a, long n) {
    if (n > a.bound())
      fail(ErrorKind::InsufficientOrder, "Dirichlet series known to " + std::to_string(a.bound()) + ", need " +
                                            std::to_string(n));
    DivisorRow r(n, divisors(n));
    for (std::size_t i = 0; i < r.d_.size(); ++i) r.c_[i] = a[static_cast<int>(r.d_[i])];
    return r;
  }
  DivisorRow unit() const {
    DivisorRow r(n_, d_);
    r.c_[0] = 1;
    return r;
  }

  std::size_t index(long d) const { return static_cast<std::size_t>(std::lower_bound(d_.begin(), d_.end(), d) - d_.begin()); }
  const Rational& at(long d) const { return c_[index(d)]; }
  Rational& at(long d) { return c_[index(d)]; }
  const Rational& top() const { return c_.back(); }
  const std::vector<long>& divs() const { return d_; }

  DivisorRow operator*(const DivisorRow& b) const {
    DivisorRow r(n_, d_);
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < d_.size(); ++j) {
        const long m = d_[i] * d_[j];
        if (n_ % m != 0 || b.c_[j] == 0) continue;
        r.at(m) += c_[i] * b.c_[j];
      }
    }
    return r;
  }

  DivisorRow inverse() const {
    DivisorRow r(n_, d_);
    r.c_[0] = Rational(1) / c_[0];
    for (std::size_t i = 1; i < d_.size(); ++i) {
      Rational acc = 0;
      for (std::size_t j = 1; j <= i; ++j)
        if (d_[i] % d_[j] == 0) acc += c_[j] * r.at(d_[i] / d_[j]);
      r.c_[i] = -acc / c_[0];
    }
    return r;
  }

  DivisorRow log() const {
    DivisorRow da(n_, d_);
    for (std::size_t i = 1; i < d_.size(); ++i) da.c_[i] = Rational(big_omega(d_[i])) * c_[i];
    DivisorRow r = da * inverse();
    r.c_[0] = 0;
    for (std::size_t i = 1; i < d_.size(); ++i) r.c_[i] /= big_omega(d_[i]);
    return r;
  }

 private:
  long n_;
  std::vector<long> d_;
  std::vector<Rational> c_;
};

inline void require_row(const DirichletSeries& a, int n) {
  if (n < 2) fail(ErrorKind::OutOfRange, "Dirichlet row polynomials need n >= 2, got " + std::to_string(n));
  require_unit_leading(a, "Dirichlet row polynomial");
}

/// [n] base^k for k = 0..K.
inline std::vector<Rational> row_values(const DivisorRow& base, int K) {
  std::vector<Rational> out;
  DivisorRow power = base.unit();
  for (int k = 0; k <= K; ++k) {
    out.push_back(power.top());
    if (k < K) power = power * base;
  }
  return out;
}

}  // namespace detail

/// Row n of <a(s) - 1>: sum_m B~_{n,m}(a_2..a_n) x^m.
inline Poly dir_v_poly(const DirichletSeries& a, int n) {
  detail::require_row(a, n);
  detail::DivisorRow base = detail::DivisorRow::from(a, n);
  base.at(1) = 0;
  return Poly(detail::row_values(base, big_omega(n))).trimmed();
}

/// u_n(x)/n!, the polynomial with value [n] a^m at x = m.
inline Poly dir_u_poly_scaled(const DirichletSeries& a, int n) {
  detail::require_row(a, n);
  const detail::DivisorRow b = detail::DivisorRow::from(a, n).log();
  const std::vector<Rational> powers = detail::row_values(b, big_omega(n));
  Poly u;
  for (std::size_t m = 1; m < powers.size(); ++m)
    u.set_coeff(static_cast<int>(m), powers[m] / Rational(factorial(static_cast<long>(m))));
  return u.trimmed();
}

/// u_n(x) = n! sum_m B~_{n,m}(b_2..b_n)/m! x^m with b = log a.
inline Poly dir_u_poly(const DirichletSeries& a, int n) { return Rational(factorial(n)) * dir_u_poly_scaled(a, n); }

enum class DirAlphaRoute { V, U };

/// Numerator of row n of <a(s)> over (1-x)^{Omega(n)+1}.
inline Poly dir_alpha_poly(const DirichletSeries& a, int n, DirAlphaRoute route = DirAlphaRoute::V) {
  detail::require_row(a, n);
  const int v = big_omega(n);
  if (route == DirAlphaRoute::V) return matrix_Vinv(v).apply(dir_v_poly(a, n).div_x()).times_x().trimmed();
  const Poly scaled = dir_u_poly_scaled(a, n);
  return (Rational(factorial(v)) * matrix_U(v).apply(scaled.div_x())).times_x().trimmed();
}

/// Numerator of row n of <base> read directly off the powers, base = a or a^{-1}.
inline Poly dir_row_numerator(const DirichletSeries& a, int n, DirichletVariant variant = DirichletVariant::Plain) {
  detail::require_row(a, n);
  if (variant != DirichletVariant::Plain && variant != DirichletVariant::Inv)
    fail(ErrorKind::InvalidArgument, "row numerators exist for plain and inverse arrays");
  const int v = big_omega(n);
  detail::DivisorRow base = detail::DivisorRow::from(a, n);
  if (variant == DirichletVariant::Inv) base = base.inverse();
  const int K = 2 * v + 2;
  const std::vector<Rational> values = detail::row_values(base, K);
  const Series product = Series(values, K) * series_pow(Series({1, -1}, K), v + 1);
  for (int i = v + 1; i <= K; ++i)
    if (product[i] != 0) fail(ErrorKind::NotPolynomial, "row " + std::to_string(n) + " is not rational of the expected form");
  return product.truncated(v).to_poly().trimmed();
}

/// alpha_n^{(-1)} = (-1)^{v(n)} x I^_{v(n)} alpha_n.
inline Poly dir_alpha_inverse_poly(const DirichletSeries& a, int n) {
  const int v = big_omega(n);
  const Rational sign = v % 2 == 0 ? 1 : -1;
  return (sign * dir_alpha_poly(a, n).reversed(v).times_x()).trimmed();
}

/// <a-1>(1, 1+x) = <a>, <a-1>(1, 1/(1+x)) = <a^{-1}> and <log a>(1, e^x) = <a> on rows 0..rows-1.
inline bool dirichlet_window_identities(const DirichletSeries& a, int rows) {
  detail::require_unit_leading(a, "Dirichlet window identities");
  int K = 1;
  for (int n = 2; n < rows; ++n) K = std::max(K, big_omega(n) + 1);
  const int cols = K + 2;
  const RMatrix minus_one = dirichlet_window(a, DirichletVariant::MinusOne, rows, K);
  const RMatrix log_w = dirichlet_window(a, DirichletVariant::Log, rows, K);
  const Series one = Series::constant(1, K);
  const RMatrix shift = riordan_window(RiordanArray::square(one, Series({1, 1}, K)), K, cols);
  const RMatrix inv_shift = riordan_window(RiordanArray::square(one, series_inv(Series({1, 1}, K))), K, cols);
  const RMatrix ex = riordan_window(RiordanArray::square(one, Series::exponential(1, K)), K, cols);
  const RMatrix plain = dirichlet_window(a, DirichletVariant::Plain, rows, cols);
  return minus_one * shift == plain && minus_one * inv_shift == dirichlet_window(a, DirichletVariant::Inv, rows, cols) &&
         log_w * ex == plain;
}

/// Product of the first r primes, each to the power p.
inline long carlitz_hoggatt_index(int r, int p) {
  if (r < 1 || p < 1) fail(ErrorKind::OutOfRange, "Carlitz-Hoggatt index needs r, p >= 1");
  long n = 1;
  int found = 0;
  for (long c = 2; found < r; ++c) {
    bool prime = true;
    for (long d = 2; d * d <= c; ++d)
      if (c % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    for (int i = 0; i < p; ++i) n *= c;
    ++found;
  }
  return n;
}

/// G_r^{(p)}(x) = (1-x)^{pr+1} sum_m C(m+p-1, p)^r x^m, summed to m = M.
inline Poly carlitz_hoggatt(int r, int p, int M) {
  if (r < 1 || p < 1) fail(ErrorKind::OutOfRange, "carlitz_hoggatt needs r, p >= 1");
  const int e = p * r + 1;
  if (M < 2 * e) fail(ErrorKind::NotPolynomial, "cutoff " + std::to_string(M) + " too small, need " + std::to_string(2 * e));
  std::vector<Rational> s(static_cast<std::size_t>(M) + 1);
  for (int m = 0; m <= M; ++m) s[m] = pow(Rational(binomial(m + p - 1, p)), r);
  const Series product = Series(s, M) * series_pow(Series({1, -1}, M), e);
  const int degree = p * r - p + 1;
  for (int i = degree + 1; i <= M; ++i)
    if (product[i] != 0) fail(ErrorKind::NotPolynomial, "Carlitz-Hoggatt sum left a tail at x^" + std::to_string(i));
  return product.truncated(degree).to_poly().trimmed();
}

inline Poly carlitz_hoggatt(int r, int p) { return carlitz_hoggatt(r, p, 2 * (p * r + 1)); }

/// The same polynomial as alpha_n of zeta, n = carlitz_hoggatt_index(r, p), by the U route.
inline Poly carlitz_hoggatt_via_zeta(int r, int p) {
  const long n = carlitz_hoggatt_index(r, p);
  const int v = p * r;
  const detail::DivisorRow row(n, divisors(n));
  detail::DivisorRow b = row;
  // zeta is 1 on every divisor
  for (long d : row.divs()) b.at(d) = 1;
  b = b.log();
  const std::vector<Rational> powers = detail::row_values(b, v);
  Poly scaled;
  for (int m = 1; m <= v; ++m) scaled.set_coeff(m, powers[m] / Rational(factorial(m)));
  return (Rational(factorial(v)) * matrix_U(v).apply(scaled.trimmed().div_x())).times_x().trimmed();
}

/// Palindromy [x^m]G = [x^{pr-p-m+2}]G and alpha_n^{(-1)} = (-1)^{pr} x^{p-1} G.
inline bool dir_palindromy_check(int r, int p) {
  const Poly G = carlitz_hoggatt(r, p);
  const int d = p * r - p + 1;
  for (int m = 1; m <= d; ++m)
    if (G.coeff(m) != G.coeff(p * r - p - m + 2)) return false;
  const int v = p * r;
  const Rational sign = v % 2 == 0 ? 1 : -1;
  const Poly expected = (sign * G.times_x(p - 1)).trimmed();
  if ((G.reversed(v).times_x()).trimmed() != G.times_x(p - 1).trimmed()) return false;
  const long n = carlitz_hoggatt_index(r, p);
  if (n > 4096) return true;
  const DirichletSeries z = DirichletSeries::zeta(static_cast<int>(n));
  return dir_row_numerator(z, static_cast<int>(n), DirichletVariant::Inv) == expected;
}

}  // namespace rgep

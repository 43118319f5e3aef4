#pragma once

// Generalized Lagrange series (beta)a, determined by (beta)a(x a^{-beta}(x)) = a(x),
// with [x^n] (beta)a^phi = phi/(phi + beta n) [x^n] a^{phi + beta n},
// and the matrices A_n^beta that carry alpha~_n of a to alpha~_n of (beta)a.

#include <string>
#include <utility>
#include <vector>

#include "riordan_gep/gep.hpp"
#include "riordan_gep/matrix.hpp"
#include "riordan_gep/riordan.hpp"
#include "riordan_gep/series.hpp"

namespace rgep {

class LagrangeFamily {
 public:
  LagrangeFamily(Series a, Rational beta, int order) : a_(std::move(a)), beta_(std::move(beta)), order_(order) {
    if (order_ < 0) fail(ErrorKind::OutOfRange, "Lagrange family order must be >= 0");
    if (a_[0] != 1) fail(ErrorKind::ConstantTermNotOne, "Lagrange family requires a_0 = 1");
    if (a_.order() < order_)
      fail(ErrorKind::InsufficientOrder, "series known to order " + std::to_string(a_.order()) + ", need " +
                                            std::to_string(order_));
    a_ = a_.truncated(order_);
  }

  const Series& a() const { return a_; }
  const Rational& beta() const { return beta_; }
  int order() const { return order_; }

 private:
  Series a_;
  Rational beta_;
  int order_;
};

/// (beta)a^phi to the family order. Where phi + beta n = 0 the coefficient is
/// read from [x^n] (1 - x beta (log a)') a^{phi + beta n}, which has no pole.
inline Series lagrange_coeffs(const LagrangeFamily& fam, const Rational& phi) {
  const int N = fam.order();
  const Series log_a = series_log(fam.a());
  std::vector<Rational> out(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    const Rational s = phi + fam.beta() * n;
    if (s != 0) {
      out[n] = phi / s * series_exp(s * log_a)[n];
    } else {
      // a^0 = 1, so only the -x beta (log a)' term reaches x^n
      out[n] = n == 0 ? Rational(1) : Rational(-fam.beta() * n) * log_a[n];
    }
  }
  return Series(std::move(out), N);
}

/// (beta)a itself.
inline Series lagrange_series(const LagrangeFamily& fam) { return lagrange_coeffs(fam, 1); }

/// (beta)a(x a^{-beta}(x)) = a(x) and a(x (beta)a^beta(x)) = (beta)a(x).
inline bool check_functional_eq(const LagrangeFamily& fam) {
  const Series& a = fam.a();
  const Series L = lagrange_series(fam);
  const Series x = Series::x(fam.order());
  const Series inner1 = x * series_pow(a, -fam.beta());
  const Series inner2 = x * lagrange_coeffs(fam, fam.beta());
  return series_compose(L, inner1) == a && series_compose(a, inner2) == L;
}

struct KRange {
  int lo = 0;
  int hi = 0;
  int size() const { return hi - lo + 1; }
};

namespace detail {

inline void require_table(const Series& a, const KRange& k, int cols) {
  if (a[0] != 1) fail(ErrorKind::ConstantTermNotOne, "diagonal table requires a_0 = 1");
  if (k.hi < k.lo) fail(ErrorKind::InvalidArgument, "empty row range");
  if (cols < 1) fail(ErrorKind::OutOfRange, "diagonal table needs cols >= 1");
  if (a.order() < cols - 1)
    fail(ErrorKind::InsufficientOrder, "diagonal table with " + std::to_string(cols) + " columns needs order " +
                                          std::to_string(cols - 1));
}

}  // namespace detail

/// {a^beta}_v: row k is (1 + x v beta (log L)') L^{beta k} with L = (v beta)a,
/// whose n-th coefficient is [x^n] a^{beta(k + v n)}. Row i of the result is k = k.lo + i.
inline RMatrix diagonal_table(const Series& a, const Rational& beta, int v, KRange k, int cols) {
  detail::require_table(a, k, cols);
  const int N = cols - 1;
  const LagrangeFamily fam(a.truncated(N), beta * v, N);
  const Series L = lagrange_series(fam);
  const Series factor = Series::constant(1, N) + Rational(v) * beta * series_log(L).derivative().times_x();
  RMatrix t(k.size(), cols);
  for (int i = 0; i < k.size(); ++i) {
    const Series row = factor * series_pow(L, beta * (k.lo + i));
    for (int n = 0; n < cols; ++n) t(i, n) = row[n];
  }
  return t;
}

/// The same table read off {a^beta}_0 by |v| diagonal rearrangements: each step
/// takes row k of the new table from entries (k + n, n) of the old one (k - n when v < 0).
inline RMatrix diagonal_table_rearranged(const Series& a, const Rational& beta, int v, KRange k, int cols) {
  detail::require_table(a, k, cols);
  const int N = cols - 1;
  const int steps = v < 0 ? -v : v;
  const int dir = v < 0 ? -1 : 1;
  // rows of the base table needed after `steps` shifts of up to N each
  const KRange base{k.lo - steps * N, k.hi + steps * N};
  const Series at = a.truncated(N);
  std::vector<std::vector<Rational>> cur(static_cast<std::size_t>(base.size()));
  for (int i = 0; i < base.size(); ++i) cur[i] = series_pow(at, beta * (base.lo + i)).coeffs();
  for (int s = 0; s < steps; ++s) {
    std::vector<std::vector<Rational>> next(cur.size(), std::vector<Rational>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < base.size(); ++i)
      for (int n = 0; n < cols; ++n) {
        const int src = i + dir * n;
        if (src >= 0 && src < base.size()) next[i][n] = cur[src][n];
      }
    cur = std::move(next);
  }
  RMatrix t(k.size(), cols);
  for (int i = 0; i < k.size(); ++i)
    for (int n = 0; n < cols; ++n) t(i, n) = cur[k.lo - base.lo + i][n];
  return t;
}

enum class ABetaConstruction { Conjugation, Dtilde, LogSeries };

inline const char* to_string(ABetaConstruction c) {
  switch (c) {
    case ABetaConstruction::Conjugation: return "conj";
    case ABetaConstruction::Dtilde: return "dtilde";
    case ABetaConstruction::LogSeries: return "log";
  }
  return "?";
}

struct ABetaMatrix {
  int n = 0;
  Rational beta;
  RMatrix matrix;
};

/// E^s on degree < n polynomials: c(x) -> c(x + s).
inline RMatrix shift_matrix(const Rational& s, int n) {
  std::vector<Poly> cols;
  for (int p = 0; p < n; ++p) cols.push_back(Poly::linear_power(s, p));
  return RMatrix::from_columns(cols, n);
}

/// d/dx on degree < n polynomials.
inline RMatrix derivative_matrix(int n) {
  RMatrix d(n, n);
  for (int p = 1; p < n; ++p) d(p - 1, p) = p;
  return d;
}

/// D~ = diag(1, 2, ..., n), or its inverse.
inline RMatrix dtilde(int n, bool inverse = false) {
  std::vector<Rational> d;
  for (int i = 1; i <= n; ++i) d.push_back(inverse ? q(1, i) : Rational(i));
  return RMatrix::diagonal(d);
}

/// log A_n = U_n (n D) U_n^{-1}.
inline RMatrix log_A(int n) {
  detail::require_n(n, "log_A");
  return matrix_U(n) * (Rational(n) * derivative_matrix(n)) * matrix_Uinv(n);
}

/// ((1+x)^s, x)^T restricted to degree < n.
inline RMatrix binomial_toeplitz_transpose(const Rational& s, int n) {
  const Series f = series_pow(Series({1, 1}, n), s);
  return riordan_window(RiordanArray::ordinary(f, Series::x(n)), n, n).transpose();
}

inline ABetaMatrix abeta_matrix(int n, const Rational& beta,
                                ABetaConstruction construction = ABetaConstruction::Conjugation) {
  detail::require_n(n, "abeta_matrix");
  const Rational s = beta * n;
  RMatrix m;
  switch (construction) {
    case ABetaConstruction::Conjugation:
      m = matrix_U(n) * shift_matrix(s, n) * matrix_Uinv(n);
      break;
    case ABetaConstruction::Dtilde:
      m = matrix_Vinv(n) * dtilde(n) * binomial_toeplitz_transpose(s, n) * dtilde(n, true) * matrix_V(n);
      break;
    case ABetaConstruction::LogSeries: {
      const RMatrix L = log_A(n);
      RMatrix term = RMatrix::identity(n);
      m = term;
      for (int k = 1; k < n; ++k) {
        term = (beta / k) * (term * L);
        m = m + term;
      }
      break;
    }
  }
  return {n, beta, std::move(m)};
}

/// alpha~_n of (beta)a from alpha~_n of a.
inline Poly abeta_apply(const ABetaMatrix& A, const Poly& alpha_tilde) {
  if (alpha_tilde.degree() >= A.n)
    fail(ErrorKind::DegreeTooHigh, "alpha~ must have degree < " + std::to_string(A.n));
  return A.matrix.apply(alpha_tilde).trimmed();
}

/// I~ A^beta I~ = A^{-beta}, unit column sums, the reductions by (1-x)^m,
/// and every column of (log A_n)^{n-1} equal to n^{n-2}(1-x)^{n-1}.
inline bool abeta_identities(int n, const Rational& beta) {
  detail::require_n(n, "abeta_identities");
  const RMatrix A = abeta_matrix(n, beta).matrix;
  const RMatrix I = reversal(n, Reversal::Itilde);
  if (I * A * I * abeta_matrix(n, beta).matrix != RMatrix::identity(n)) return false;
  if (I * A * I != abeta_matrix(n, -beta).matrix) return false;
  for (const Rational& c : column_sums(A))
    if (c != 1) return false;
  for (int m = 1; m < n; ++m) {
    const RMatrix full = one_minus_x_power(-m, n) * A * one_minus_x_power(m, n) * embedding(n, m);
    if (!full.block(n - m, 0, m, n - m).is_zero()) return false;
    if (full.block(0, 0, n - m, n - m) != abeta_matrix(n - m, beta * n / (n - m)).matrix) return false;
  }
  if (n >= 2) {
    const RMatrix P = log_A(n).pow(n - 1);
    const Poly col = pow(Rational(n), n - 2) * Poly({1, -1}).pow(n - 1);
    for (int p = 0; p < n; ++p)
      if (P.column(p) != col) return false;
  }
  return true;
}

/// u_n of (beta)a from u_n of a: x (x + n beta)^{-1} u_n(x + n beta).
inline Poly lagrange_u_shift(const Poly& u, int n, const Rational& beta) {
  const Rational s = beta * n;
  const auto [quot, rem] = u.shifted(s).divmod(Poly({s, 1}));
  if (!rem.is_zero()) fail(ErrorKind::NotPolynomial, "x + n beta does not divide the shifted u_n");
  return quot.times_x().trimmed();
}

/// (beta)alpha_n for a = 1+x: (1/n) sum_m C(n(1-beta), m-1) C(n beta, n-m) x^m.
inline Poly gbs_alpha_closed_form(int n, const Rational& beta) {
  detail::require_n(n, "gbs_alpha_closed_form");
  const Rational top1 = Rational(n) * (1 - beta);
  const Rational top2 = Rational(n) * beta;
  Poly p;
  for (int m = 1; m <= n; ++m) p.set_coeff(m, binomial(top1, m - 1) * binomial(top2, n - m) / n);
  return p.trimmed();
}

/// v~_n of (beta)a from v~_n of a: D~ ((1+x)^{n beta}, x)^T D~^{-1}.
inline Poly vtilde_transform(int n, const Rational& beta, const Poly& vtilde) {
  detail::require_n(n, "vtilde_transform");
  if (vtilde.degree() >= n) fail(ErrorKind::DegreeTooHigh, "v~ must have degree < " + std::to_string(n));
  const RMatrix T = dtilde(n) * binomial_toeplitz_transpose(beta * n, n) * dtilde(n, true);
  return T.apply(vtilde).trimmed();
}

/// D~^{-1} B D~ where row k of B is row k of ((1+x)^{(k+1) beta}, x); for a = 1+x
/// this is the window of ((beta)a^beta, x (beta)a^beta).
inline RMatrix gbs_riordan_window(const Rational& beta, int size) {
  if (size < 1) fail(ErrorKind::OutOfRange, "window size must be >= 1");
  RMatrix B(size, size);
  for (int k = 0; k < size; ++k)
    for (int j = 0; j <= k; ++j) B(k, j) = binomial(beta * (k + 1), k - j);
  return dtilde(size, true) * B * dtilde(size);
}

/// For a = 1+x: (1-beta)a(x) = 1/(beta)a(-x) to order 2n, and
/// (1-beta)alpha_n = x I^_n (beta)alpha_n.
inline bool duality_check(int n, const Rational& beta) {
  detail::require_n(n, "duality_check");
  const int N = 2 * n;
  const Series a = Series({1, 1}, N);
  const Series left = lagrange_series(LagrangeFamily(a, 1 - beta, N));
  const Series right = series_inv(lagrange_series(LagrangeFamily(a, beta, N)).scaled_argument(-1));
  if (left != right) return false;
  return gbs_alpha_closed_form(n, 1 - beta) == gbs_alpha_closed_form(n, beta).reversed(n).times_x().trimmed();
}

}  // namespace rgep

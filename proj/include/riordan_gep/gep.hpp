#pragma once

// Generalized Euler polynomials. For a series a with a_0 = 1:
//   u_n(x) = row n of (1, log a)_{e^x}, so u_n(m) = n! [x^n] a^m,
//   v_n(x) = row n of (1, a - 1),
//   alpha_n(x)/(1-x)^{n+1} = row n of the square array (1, a).
// A trailing tilde means division by x: alpha~_n = alpha_n / x, etc.
// Matrices act on coefficient columns of polynomials of degree < n.

#include <string>
#include <utility>
#include <vector>

#include "riordan_gep/matrix.hpp"
#include "riordan_gep/poly.hpp"
#include "riordan_gep/riordan.hpp"
#include "riordan_gep/series.hpp"
#include "riordan_gep/stirling.hpp"

namespace rgep {

enum class AlphaRoute { BellSum, VInverse, UMatrix, RowNumerator };

inline const char* to_string(AlphaRoute r) {
  switch (r) {
    case AlphaRoute::BellSum: return "bell-sum";
    case AlphaRoute::VInverse: return "v-inverse";
    case AlphaRoute::UMatrix: return "u-matrix";
    case AlphaRoute::RowNumerator: return "row-numerator";
  }
  return "?";
}

namespace detail {

inline void require_n(int n, const char* what) {
  if (n < 1) fail(ErrorKind::OutOfRange, std::string(what) + " needs n >= 1, got " + std::to_string(n));
}

/// c(x) = sum_m v_m x^m (1-x)^{n-m}, the numerator of row n of (1, a) from v_n.
inline Poly alpha_from_v(const Poly& v, int n) {
  Poly acc;
  const Poly one_minus_x{1, -1};
  for (int m = 1; m <= n; ++m) {
    const Rational vm = v.coeff(m);
    if (vm == 0) continue;
    acc = acc + vm * (Poly::monomial(m) * one_minus_x.pow(n - m));
  }
  return acc.trimmed();
}

/// Row n of (1, a - 1), as coefficients 0..n.
inline Poly v_from_series(const Series& a, int n) {
  Series g = a.truncated(n) - Series::constant(1, n);
  Series power = Series::constant(1, n);
  Poly v;
  for (int m = 0; m <= n; ++m) {
    v.set_coeff(m, power[n]);
    if (m < n) power = power * g;
  }
  return v.trimmed();
}

/// Interpolates u_n(m) = n! [x^n] a^m over m = 0..n.
inline Poly u_from_series(const Series& a, int n) {
  const Series at = a.truncated(n);
  Series power = Series::constant(1, n);
  std::vector<Rational> values(static_cast<std::size_t>(n) + 1);
  const Rational nf = Rational(factorial(n));
  for (int m = 0; m <= n; ++m) {
    values[m] = nf * power[n];
    if (m < n) power = power * at;
  }
  return interpolate_at_naturals(values).trimmed();
}

}  // namespace detail

/// Series a with a_0 = 1 known to order >= 2n+2, together with u_n, v_n and alpha_n.
class GepContext {
 public:
  GepContext(Series a, int n) : a_(std::move(a)), n_(n) {
    detail::require_n(n, "GEP context");
    if (a_[0] != 1) fail(ErrorKind::ConstantTermNotOne, "GEP context requires a_0 = 1");
    if (a_.order() < 2 * n + 2)
      fail(ErrorKind::InsufficientOrder, "GEP context for n=" + std::to_string(n) + " needs order " +
                                            std::to_string(2 * n + 2) + ", have " + std::to_string(a_.order()));
    u_ = detail::u_from_series(a_, n_);
    v_ = detail::v_from_series(a_, n_);
    alpha_ = detail::alpha_from_v(v_, n_);
  }

  /// Minimal order a series must be given to for index n.
  static int required_order(int n) { return 2 * n + 2; }

  const Series& a() const { return a_; }
  int n() const { return n_; }
  const Poly& u() const { return u_; }
  const Poly& v() const { return v_; }
  const Poly& alpha() const { return alpha_; }
  Poly u_tilde() const { return u_.div_x(); }
  Poly v_tilde() const { return v_.div_x(); }
  Poly alpha_tilde() const { return alpha_.div_x(); }

 private:
  Series a_;
  int n_;
  Poly u_, v_, alpha_;
};

inline Poly u_poly(const GepContext& ctx) { return ctx.u(); }
inline Poly v_poly(const GepContext& ctx) { return ctx.v(); }

/// Euler polynomial A_n: sum_m m^n x^m = A_n(x)/(1-x)^{n+1}. A_0 = 1.
inline Poly euler_poly(int n) {
  if (n < 0) fail(ErrorKind::OutOfRange, "euler_poly needs n >= 0");
  if (n == 0) return Poly{1};
  const Series ex = Series::exponential(1, n);
  return Rational(factorial(n)) * detail::alpha_from_v(detail::v_from_series(ex, n), n);
}

/// Column p: (1/n!) (1-x)^{n-1-p} A~_{p+1}(x).
inline RMatrix matrix_U(int n) {
  detail::require_n(n, "matrix_U");
  std::vector<Poly> cols;
  const Rational inv = q(Integer(1), factorial(n));
  const Poly one_minus_x{1, -1};
  for (int p = 0; p < n; ++p) cols.push_back(inv * (one_minus_x.pow(n - 1 - p) * euler_poly(p + 1).div_x()));
  return RMatrix::from_columns(cols, n);
}

/// Column p: (1/x) prod_{m=0}^{n-1} (x - p + m).
inline RMatrix matrix_Uinv(int n) {
  detail::require_n(n, "matrix_Uinv");
  std::vector<Poly> cols;
  for (int p = 0; p < n; ++p) {
    Poly prod{1};
    for (int m = 0; m < n; ++m) prod = prod * Poly({Rational(m - p), 1});
    cols.push_back(prod.div_x());
  }
  return RMatrix::from_columns(cols, n);
}

/// Column p: (1+x)^{n-p-1} x^p.
inline RMatrix matrix_V(int n) {
  detail::require_n(n, "matrix_V");
  std::vector<Poly> cols;
  for (int p = 0; p < n; ++p) cols.push_back(Poly::linear_power(1, n - p - 1).times_x(p));
  return RMatrix::from_columns(cols, n);
}

/// Column p: (1-x)^{n-p-1} x^p.
inline RMatrix matrix_Vinv(int n) {
  detail::require_n(n, "matrix_Vinv");
  std::vector<Poly> cols;
  for (int p = 0; p < n; ++p) cols.push_back(Poly({1, -1}).pow(n - p - 1).times_x(p));
  return RMatrix::from_columns(cols, n);
}

enum class Reversal { Ihat, Itilde };

/// Anti-identity: I^_n has size n+1, I~_n = I^_{n-1} has size n.
inline RMatrix reversal(int n, Reversal variant) {
  const int size = variant == Reversal::Ihat ? n + 1 : n;
  if (size < 1) fail(ErrorKind::OutOfRange, "reversal matrix needs positive size");
  RMatrix m(size, size);
  for (int i = 0; i < size; ++i) m(i, size - 1 - i) = 1;
  return m;
}

/// diag(1, -1, 1, ...), the action of (1, -x) on coefficient vectors.
inline RMatrix sign_diagonal(int n) {
  RMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = i % 2 == 0 ? 1 : -1;
  return m;
}

inline Poly alpha_poly(const GepContext& ctx, AlphaRoute route = AlphaRoute::BellSum) {
  const int n = ctx.n();
  switch (route) {
    case AlphaRoute::BellSum: return ctx.alpha();
    case AlphaRoute::VInverse: return matrix_Vinv(n).apply(ctx.v_tilde()).times_x().trimmed();
    case AlphaRoute::UMatrix: return matrix_U(n).apply(ctx.u_tilde()).times_x().trimmed();
    case AlphaRoute::RowNumerator:
      return square_row_numerator(RiordanArray::square(Series::constant(1, ctx.a().order()), ctx.a()), n);
  }
  fail(ErrorKind::InvalidArgument, "unknown alpha route");
}

/// True when every route produces the same alpha_n.
inline bool alpha_routes_agree(const GepContext& ctx) {
  const Poly base = alpha_poly(ctx, AlphaRoute::BellSum);
  for (AlphaRoute r : {AlphaRoute::VInverse, AlphaRoute::UMatrix, AlphaRoute::RowNumerator})
    if (alpha_poly(ctx, r) != base) return false;
  return true;
}

/// GEP numerator of a series that only needs to be known to order 2n+2.
inline Poly alpha_of(const Series& a, int n) {
  if (n == 0) return Poly{1};
  return GepContext(a.truncated(GepContext::required_order(n)), n).alpha();
}

/// U_n (1, -x) = (-1)^{n+1} I~_n U_n
inline bool check_theorem1(int n) {
  const RMatrix U = matrix_U(n);
  const Rational sign = (n + 1) % 2 == 0 ? 1 : -1;
  return U * sign_diagonal(n) == sign * (reversal(n, Reversal::Itilde) * U);
}

/// alpha_n(1) = a_1^n
inline bool check_theorem2(const GepContext& ctx) { return ctx.alpha().eval(1) == pow(ctx.a()[1], ctx.n()); }

/// alpha_n of 1/a equals (-1)^n x I^_n alpha_n of a.
inline bool check_reciprocal_reversal(const Series& a, int n) {
  const Poly direct = alpha_of(series_inv(a), n);
  const Poly reversed = (n % 2 == 0 ? Rational(1) : Rational(-1)) * alpha_of(a, n).reversed(n).times_x();
  return direct == reversed;
}

struct StirlingProducts {
  RMatrix vu_product, vu_formula;
  RMatrix uv_product, uv_formula;
  bool agree() const { return vu_product == vu_formula && uv_product == uv_formula; }
};

/// V_n U_n and U_n^{-1} V_n^{-1}, by multiplication and by the Stirling formulas
///   [col p](V_n U_n) = (1/n!) sum_m m! S(p+1, m) x^{m-1},
///   [col p](U_n^{-1} V_n^{-1}) = (n!/(p+1)!) sum_m s(p+1, m) x^{m-1}.
inline StirlingProducts stirling_products(int n) {
  detail::require_n(n, "stirling_products");
  StirlingProducts r;
  r.vu_product = matrix_V(n) * matrix_U(n);
  r.uv_product = matrix_Uinv(n) * matrix_Vinv(n);
  const StirlingTable S2(StirlingKind::Second, n), S1(StirlingKind::First, n);
  const Rational nf = Rational(factorial(n));
  r.vu_formula = RMatrix(n, n);
  r.uv_formula = RMatrix(n, n);
  for (int p = 0; p < n; ++p)
    for (int m = 1; m <= p + 1; ++m) {
      r.vu_formula(m - 1, p) = Rational(factorial(m) * S2(p + 1, m)) / nf;
      r.uv_formula(m - 1, p) = nf * Rational(S1(p + 1, m)) / Rational(factorial(p + 1));
    }
  return r;
}

/// Window of ((1-x)^e, x) acting on degree < n polynomials (e may be negative).
inline RMatrix one_minus_x_power(int e, int n) {
  const Series f = series_pow(Series({1, -1}, n), e);
  return riordan_window(RiordanArray::ordinary(f, Series::x(n)), n, n);
}

/// Embedding I_{n-m}: the first n-m columns of the n x n identity.
inline RMatrix embedding(int n, int m) { return RMatrix::identity(n).block(0, 0, n, n - m); }

/// Top (n-m) x (n-m) block of M; the bottom m rows must vanish.
inline RMatrix top_block_checked(const RMatrix& M, int m) {
  const int k = M.rows() - m;
  if (!M.block(k, 0, m, M.cols()).is_zero())
    fail(ErrorKind::Domain, "reduction left nonzero entries in the last " + std::to_string(m) + " rows");
  return M.block(0, 0, k, M.cols());
}

struct ReducedPair {
  RMatrix uinv;  ///< U_n^{-1} ((1-x)^m, x) I_{n-m}, restricted to n-m rows
  RMatrix u;     ///< ((1-x)^{-m}, x) U_n I_{n-m}, restricted to n-m rows
};

/// The reductions that factor (1-x)^m out of alpha~_n.
inline ReducedPair reduce_degenerate(int n, int m) {
  if (m < 1 || m >= n) fail(ErrorKind::OutOfRange, "reduce_degenerate needs 1 <= m < n");
  const RMatrix I = embedding(n, m);
  return {top_block_checked(matrix_Uinv(n) * one_minus_x_power(m, n) * I, m),
          top_block_checked(one_minus_x_power(-m, n) * matrix_U(n) * I, m)};
}

/// The reduced pair equals ((n!/(n-m)!) U_{n-m}^{-1}, ((n-m)!/n!) U_{n-m}).
inline bool check_reduction(int n, int m) {
  const ReducedPair r = reduce_degenerate(n, m);
  const Rational ratio = q(factorial(n), factorial(n - m));
  return r.uinv == ratio * matrix_Uinv(n - m) && r.u == (Rational(1) / ratio) * matrix_U(n - m);
}

enum class NumeratorVariant { N, Nstar };

/// N_n: row n of (1/(1-x-kx^2), -kx^2/(1-x-kx^2)).
/// N*_n: numerator of row n of the square array (1/(1-x-kx^2), 1/(1-x-kx^2)).
inline Poly numerator_polys_example3(const Rational& k, int n, NumeratorVariant variant) {
  if (n < 0) fail(ErrorKind::OutOfRange, "numerator index must be >= 0");
  const int order = 2 * n + 2;
  const Series f = series_inv(Series({1, -1, -k}, order));
  if (variant == NumeratorVariant::N) {
    const Series g = Rational(-k) * (f * Series::x(order).times_x());
    return riordan_row(RiordanArray::ordinary(f, g), n, n + 1).trimmed();
  }
  return square_row_numerator(RiordanArray::square(f, f), n);
}

/// sum_n alpha_n(t) x^n for a = (1 + phi x + beta x^2)^{-1} against
/// (1 + phi(1-t)x + beta(1-t)^2 x^2) / (1 + phi x + beta(1-t) x^2), to `order`.
inline bool gep_generating_function_check(const Rational& phi, const Rational& beta, const Rational& t, int order) {
  if (order < 1) fail(ErrorKind::OutOfRange, "generating function check needs order >= 1");
  const int need = GepContext::required_order(order);
  const Series a = series_inv(Series({1, phi, beta}, need));
  std::vector<Rational> lhs(static_cast<std::size_t>(order) + 1);
  lhs[0] = 1;
  for (int n = 1; n <= order; ++n) lhs[n] = GepContext(a, n).alpha().eval(t);
  const Rational s = 1 - t;
  const Rational s2 = s * s;
  const Series num({1, phi * s, beta * s2}, order);
  const Series den({1, phi, beta * s}, order);
  return Series(lhs, order) == num * series_inv(den);
}

enum class TransformTag { U, Uinv, V, Vinv, VU, UinvVinv, Ihat, Itilde };

inline RMatrix transform_matrix(TransformTag tag, int n) {
  switch (tag) {
    case TransformTag::U: return matrix_U(n);
    case TransformTag::Uinv: return matrix_Uinv(n);
    case TransformTag::V: return matrix_V(n);
    case TransformTag::Vinv: return matrix_Vinv(n);
    case TransformTag::VU: return matrix_V(n) * matrix_U(n);
    case TransformTag::UinvVinv: return matrix_Uinv(n) * matrix_Vinv(n);
    case TransformTag::Ihat: return reversal(n, Reversal::Ihat);
    case TransformTag::Itilde: return reversal(n, Reversal::Itilde);
  }
  fail(ErrorKind::InvalidArgument, "unknown transform matrix");
}

}  // namespace rgep

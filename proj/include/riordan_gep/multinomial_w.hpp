#pragma once

// W_(n,m): the matrix sending alpha~_n of a to alpha~_n of a^m.

#include <string>
#include <vector>

#include "riordan_gep/gep.hpp"
#include "riordan_gep/matrix.hpp"
#include "riordan_gep/riordan.hpp"
#include "riordan_gep/series.hpp"

namespace rgep {

struct WMatrix {
  int n = 0;
  int m = 0;
  RMatrix matrix;
};

namespace detail {

inline void require_wm(int n, int m) {
  if (n < 1 || m < 1)
    fail(ErrorKind::OutOfRange, "W_(n,m) needs n, m >= 1, got n=" + std::to_string(n) + ", m=" + std::to_string(m));
}

}  // namespace detail

/// Decimation of ((1-x^m)/(1-x))^{n+1} with step m.
inline WMatrix w_matrix(int n, int m) {
  detail::require_wm(n, m);
  const int order = m * n;
  std::vector<Rational> base(static_cast<std::size_t>(m), Rational(1));
  const Series b = series_pow(Series(base, order), n + 1);
  return {n, m, decimate(b, m, n, n)};
}

/// U_n diag(m, m^2, ..., m^n) U_n^{-1}.
inline RMatrix w_matrix_conjugation(int n, int m) {
  detail::require_wm(n, m);
  std::vector<Rational> d;
  for (int p = 1; p <= n; ++p) d.push_back(pow(Rational(m), p));
  return matrix_U(n) * RMatrix::diagonal(d) * matrix_Uinv(n);
}

/// V_n^{-1} (((1+x)^m - 1)/x, (1+x)^m - 1)^T V_n.
inline RMatrix w_alt_form(int n, int m) {
  detail::require_wm(n, m);
  const Poly shifted = Poly::linear_power(1, m) - Poly{1};
  const Series g = Series::from_poly(shifted, n);
  const Series f = Series::from_poly(shifted.div_x(), n);
  const RMatrix middle = riordan_window(RiordanArray::ordinary(f, g), n, n).transpose();
  return matrix_Vinv(n) * middle * matrix_V(n);
}

/// alpha~_n of a^m from alpha~_n of a.
inline Poly w_apply(const WMatrix& W, const Poly& alpha_tilde) {
  if (alpha_tilde.degree() >= W.n)
    fail(ErrorKind::DegreeTooHigh, "alpha~ must have degree < " + std::to_string(W.n));
  return W.matrix.apply(alpha_tilde).trimmed();
}

/// W_(n,m) W_(n,p) = W_(n,mp), W commutes with I~_n, and A~_n is an eigenvector for m^n.
inline bool w_identities(int n, int m, int p) {
  detail::require_wm(n, m);
  detail::require_wm(n, p);
  const RMatrix Wm = w_matrix(n, m).matrix;
  const RMatrix Wp = w_matrix(n, p).matrix;
  const RMatrix I = reversal(n, Reversal::Itilde);
  const Poly eig = euler_poly(n).div_x();
  return Wm * Wp == w_matrix(n, m * p).matrix && Wm * I == I * Wm &&
         Wm.apply(eig) == pow(Rational(m), n) * eig;
}

/// ((1-x)^{-p}, x) W_(n,m) ((1-x)^p, x) I_{n-p}, restricted to its top n-p rows.
inline RMatrix w_restricted(int n, int m, int p) {
  detail::require_wm(n, m);
  if (p < 0 || p >= n) fail(ErrorKind::OutOfRange, "w_restriction needs 0 <= p < n");
  const RMatrix full = one_minus_x_power(-p, n) * w_matrix(n, m).matrix * one_minus_x_power(p, n) * embedding(n, p);
  return top_block_checked(full, p);
}

inline bool w_restriction(int n, int m, int p) {
  return w_restricted(n, m, p) == w_matrix(n - p, m).matrix;
}

}  // namespace rgep

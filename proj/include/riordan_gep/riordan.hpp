#pragma once

// Riordan arrays: ordinary lower-triangular (f, g) with g_0 = 0, "square"
// arrays (b, a) with a_0 = 1 whose rows are infinite, and exponential arrays
// |e^x|^{-1} (f, g) |e^x|. Arrays are stored as their two generating series;
// entries, rows and finite windows are computed on demand.

#include <string>
#include <utility>

#include "riordan_gep/matrix.hpp"
#include "riordan_gep/poly.hpp"
#include "riordan_gep/series.hpp"

namespace rgep {

enum class RiordanKind { Ordinary, Square, Exponential };

inline const char* to_string(RiordanKind kind) {
  switch (kind) {
    case RiordanKind::Ordinary: return "ordinary";
    case RiordanKind::Square: return "square";
    case RiordanKind::Exponential: return "exponential";
  }
  return "?";
}

class RiordanArray {
 public:
  /// (f, g): column k has generating function f g^k. Requires g_0 = 0.
  static RiordanArray ordinary(Series f, Series g) {
    return RiordanArray(RiordanKind::Ordinary, std::move(f), std::move(g));
  }
  /// (b, a) with a_0 = 1: column k has generating function b a^k.
  static RiordanArray square(Series b, Series a) {
    return RiordanArray(RiordanKind::Square, std::move(b), std::move(a));
  }
  /// (f, g)_{e^x}. Requires g_0 = 0.
  static RiordanArray exponential(Series f, Series g) {
    return RiordanArray(RiordanKind::Exponential, std::move(f), std::move(g));
  }

  RiordanKind kind() const { return kind_; }
  const Series& f() const { return f_; }
  const Series& g() const { return g_; }
  /// Largest row index the stored truncation determines.
  int max_row() const { return std::min(f_.order(), g_.order()); }

  /// Member of the Riordan group: f_0 != 0 and g_1 != 0.
  bool is_proper() const {
    if (kind_ == RiordanKind::Square) return false;
    return f_[0] != 0 && g_.order() >= 1 && g_[1] != 0;
  }

 private:
  RiordanArray(RiordanKind kind, Series f, Series g) : kind_(kind), f_(std::move(f)), g_(std::move(g)) {
    if (kind_ == RiordanKind::Square) {
      if (g_[0] != 1) fail(ErrorKind::ConstantTermNotOne, "square array (b, a) requires a_0 = 1");
    } else if (g_[0] != 0) {
      fail(ErrorKind::NonzeroConstantTerm, std::string(to_string(kind_)) + " array (f, g) requires g_0 = 0");
    }
  }

  RiordanKind kind_;
  Series f_;
  Series g_;
};

namespace detail {

inline void require_rows(const RiordanArray& A, int n) {
  if (n < 0) fail(ErrorKind::OutOfRange, "negative row index");
  if (n > A.max_row())
    fail(ErrorKind::InsufficientOrder, "row " + std::to_string(n) + " needs series of order " +
                                          std::to_string(n) + ", have " + std::to_string(A.max_row()));
}

/// n!/k! as a rational (k may exceed n).
inline Rational factorial_ratio(int n, int k) { return q(factorial(n), factorial(k)); }

}  // namespace detail

/// Finite window: rows 0..rows-1, columns 0..cols-1.
inline RMatrix riordan_window(const RiordanArray& A, int rows, int cols) {
  if (rows < 0 || cols < 0) fail(ErrorKind::OutOfRange, "negative window size");
  RMatrix m(rows, cols);
  if (rows == 0 || cols == 0) return m;
  detail::require_rows(A, rows - 1);
  const int n = rows - 1;
  const Series g = A.g().truncated(n);
  Series column = A.f().truncated(n);
  for (int k = 0; k < cols; ++k) {
    for (int i = 0; i < rows; ++i) m(i, k) = column[i];
    if (k + 1 < cols) column = column * g;
  }
  if (A.kind() == RiordanKind::Exponential)
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k)
        if (m(i, k) != 0) m(i, k) *= detail::factorial_ratio(i, k);
  return m;
}

inline Rational riordan_entry(const RiordanArray& A, int n, int k) {
  detail::require_rows(A, n);
  if (k < 0) fail(ErrorKind::OutOfRange, "negative column index");
  const Series col = A.f().truncated(n) * series_pow(A.g().truncated(n), k);
  Rational v = col[n];
  if (A.kind() == RiordanKind::Exponential) v *= detail::factorial_ratio(n, k);
  return v;
}

/// Row n as the polynomial sum_k entry(n, k) x^k, k < cols.
inline Poly riordan_row(const RiordanArray& A, int n, int cols) {
  detail::require_rows(A, n);
  RMatrix w = riordan_window(A, n + 1, cols);
  return w.row(n);
}

/// Fundamental theorem: (f, g)(b, a) = (f b(g), a(g)).
inline RiordanArray riordan_mul(const RiordanArray& A, const RiordanArray& B) {
  const auto ka = A.kind(), kb = B.kind();
  auto product = [&](auto make) { return make(A.f() * series_compose(B.f(), A.g()), series_compose(B.g(), A.g())); };
  if (ka == RiordanKind::Ordinary && kb == RiordanKind::Ordinary)
    return product([](Series f, Series g) { return RiordanArray::ordinary(std::move(f), std::move(g)); });
  if (ka == RiordanKind::Ordinary && kb == RiordanKind::Square)
    return product([](Series f, Series g) { return RiordanArray::square(std::move(f), std::move(g)); });
  if (ka == RiordanKind::Exponential && kb == RiordanKind::Exponential)
    return product([](Series f, Series g) { return RiordanArray::exponential(std::move(f), std::move(g)); });
  fail(ErrorKind::KindMismatch, std::string("cannot multiply ") + to_string(ka) + " by " + to_string(kb) +
                                    " array as series; use finite windows");
}

/// Window of P^phi = (1/(1 - phi x), x/(1 - phi x)): entries C(n,k) phi^(n-k).
inline RMatrix pascal_power(const Rational& phi, int size) {
  if (size < 1) fail(ErrorKind::OutOfRange, "pascal_power needs size >= 1");
  RMatrix m(size, size);
  for (int n = 0; n < size; ++n)
    for (int k = 0; k <= n; ++k) m(n, k) = Rational(binomial(n, k)) * pow(phi, n - k);
  return m;
}

/// Decimated Toeplitz window (b(x), x)_m: row n is row m n + m - 1 of (b(x), x),
/// so entry (n, k) = b_{m n + m - 1 - k}, zero for negative indices.
inline RMatrix decimate(const Series& b, int m, int rows, int cols) {
  if (m < 1) fail(ErrorKind::OutOfRange, "decimation step must be >= 1");
  if (rows < 0 || cols < 0) fail(ErrorKind::OutOfRange, "negative window size");
  const int top = m * rows - 1;
  if (rows > 0 && b.order() < top)
    fail(ErrorKind::InsufficientOrder, "decimation needs b to order " + std::to_string(top));
  RMatrix w(rows, cols);
  for (int n = 0; n < rows; ++n)
    for (int k = 0; k < cols; ++k) {
      const int idx = m * n + m - 1 - k;
      if (idx >= 0) w(n, k) = b[idx];
    }
  return w;
}

/// |e^x|^{-1} A |e^x|: entry (n, k) scaled by n!/k!.
inline RMatrix exp_conjugate(const RMatrix& A) {
  RMatrix r = A;
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j)
      if (r(i, j) != 0) r(i, j) *= detail::factorial_ratio(i, j);
  return r;
}

/// |e^x| A |e^x|^{-1}: entry (n, k) scaled by k!/n!.
inline RMatrix exp_conjugate_inverse(const RMatrix& A) {
  RMatrix r = A;
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j)
      if (r(i, j) != 0) r(i, j) *= detail::factorial_ratio(j, i);
  return r;
}

/// Numerator N(x) of row n of a square array written as N(x)/(1-x)^{n+1}.
/// The row is expanded to 2n+2 terms and the product with (1-x)^{n+1} must
/// vanish above degree n; otherwise NotPolynomial.
inline Poly square_row_numerator(const RiordanArray& A, int n, int denominator_power) {
  if (A.kind() != RiordanKind::Square) fail(ErrorKind::KindMismatch, "row numerators are defined for square arrays");
  const int len = 2 * n + 2;
  Poly row = riordan_row(A, n, len);
  Poly prod = row * Poly({1, -1}).pow(denominator_power);
  Poly num;
  for (int i = 0; i < len; ++i) {
    if (i <= n) {
      num.set_coeff(i, prod.coeff(i));
    } else if (prod.coeff(i) != 0) {
      fail(ErrorKind::NotPolynomial, "row " + std::to_string(n) + " times (1-x)^" +
                                         std::to_string(denominator_power) + " has a nonzero x^" +
                                         std::to_string(i) + " term");
    }
  }
  return num.trimmed();
}

inline Poly square_row_numerator(const RiordanArray& A, int n) { return square_row_numerator(A, n, n + 1); }

}  // namespace rgep

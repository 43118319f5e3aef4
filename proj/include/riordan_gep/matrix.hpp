#pragma once

#include <initializer_list>
#include <vector>

#include "riordan_gep/poly.hpp"
#include "riordan_gep/rational.hpp"

namespace rgep {

/// Dense row-major rational matrix. Matrices act on coefficient column
/// vectors of polynomials, lowest degree first.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) fail(ErrorKind::InvalidArgument, "negative matrix dimension");
    a_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  }

  static RMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    RMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != c) fail(ErrorKind::DimensionMismatch, "ragged matrix literal");
      int j = 0;
      for (const auto& v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  static RMatrix identity(int n) {
    RMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RMatrix diagonal(const std::vector<Rational>& d) {
    const int n = static_cast<int>(d.size());
    RMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[i];
    return m;
  }

  /// Column p holds the coefficients of cols[p] (degree < rows).
  static RMatrix from_columns(const std::vector<Poly>& cols, int rows) {
    RMatrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j) {
      std::vector<Rational> v = cols[j].to_vector(rows);
      for (int i = 0; i < rows; ++i) m(i, j) = v[i];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return a_[index(i, j)]; }
  const Rational& operator()(int i, int j) const { return a_[index(i, j)]; }

  Poly column(int j) const {
    std::vector<Rational> c(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return Poly(std::move(c));
  }
  Poly row(int i) const {
    std::vector<Rational> c(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) c[j] = (*this)(i, j);
    return Poly(std::move(c));
  }

  RMatrix transpose() const {
    RMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RMatrix block(int row0, int col0, int rows, int cols) const {
    if (row0 < 0 || col0 < 0 || row0 + rows > rows_ || col0 + cols > cols_)
      fail(ErrorKind::OutOfRange, "block outside matrix");
    RMatrix b(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
    return b;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (v != 0) return false;
    return true;
  }

  /// Matrix times the coefficient vector of p (deg p < cols).
  Poly apply(const Poly& p) const {
    std::vector<Rational> v = p.to_vector(cols_);
    std::vector<Rational> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return Poly(std::move(out));
  }

  RMatrix pow(int e) const {
    if (rows_ != cols_) fail(ErrorKind::DimensionMismatch, "power of a non-square matrix");
    if (e < 0) fail(ErrorKind::InvalidArgument, "negative matrix power");
    RMatrix result = identity(rows_), base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  friend RMatrix operator*(const RMatrix& a, const RMatrix& b) {
    if (a.cols_ != b.rows_)
      fail(ErrorKind::DimensionMismatch, "cannot multiply " + a.shape() + " by " + b.shape());
    RMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend RMatrix operator*(const Rational& s, const RMatrix& m) {
    RMatrix r = m;
    for (auto& v : r.a_) v *= s;
    return r;
  }
  friend RMatrix operator+(const RMatrix& a, const RMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      fail(ErrorKind::DimensionMismatch, "cannot add " + a.shape() + " and " + b.shape());
    RMatrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
  }
  friend RMatrix operator-(const RMatrix& a, const RMatrix& b) { return a + Rational(-1) * b; }
  friend bool operator==(const RMatrix& a, const RMatrix& b) = default;

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || j < 0 || i >= rows_ || j >= cols_)
      fail(ErrorKind::OutOfRange, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") outside " + shape() + " matrix");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

/// Column sums, one per column.
inline std::vector<Rational> column_sums(const RMatrix& m) {
  std::vector<Rational> s(static_cast<std::size_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s[j] += m(i, j);
  return s;
}

}  // namespace rgep

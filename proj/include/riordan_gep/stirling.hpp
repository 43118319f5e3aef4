#pragma once

// Stirling numbers of both kinds, partial Bell sums over additive partitions
// and their multiplicative-decomposition analogue.
//
// The Bell sums use the multinomial normalization
//   B_{n,m}(a_1..a_n) = sum m!/(m_1! ... m_n!) a_1^{m_1} ... a_n^{m_n},
// i.e. B_{n,m}(a) = [x^n] (a_1 x + a_2 x^2 + ...)^m, without the j! factors of
// the classical exponential Bell polynomial.

#include <span>
#include <vector>

#include "riordan_gep/rational.hpp"

namespace rgep {

enum class StirlingKind { First, Second };

/// Triangular table of Stirling numbers for 0 <= k <= n <= max_n.
/// First kind values are signed: sum_k s(n,k) x^k = x(x-1)...(x-n+1).
class StirlingTable {
 public:
  StirlingTable(StirlingKind kind, int max_n) : kind_(kind), max_n_(max_n) {
    if (max_n < 0) fail(ErrorKind::OutOfRange, "negative table size");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    rows_[0] = {1};
    for (int n = 1; n <= max_n; ++n) {
      auto& row = rows_[n];
      const auto& prev = rows_[n - 1];
      row.assign(static_cast<std::size_t>(n) + 1, 0);
      for (int k = 1; k <= n; ++k) {
        Integer below = k <= n - 1 ? prev[k] : Integer(0);
        if (kind_ == StirlingKind::Second)
          row[k] = Integer(k) * below + prev[k - 1];
        else
          row[k] = prev[k - 1] - Integer(n - 1) * below;
      }
    }
  }

  StirlingKind kind() const { return kind_; }
  int max_n() const { return max_n_; }

  /// Zero for k > n; OutOfRange outside the table.
  const Integer& operator()(int n, int k) const {
    static const Integer zero = 0;
    if (n < 0 || k < 0 || n > max_n_) fail(ErrorKind::OutOfRange, "Stirling index outside table");
    if (k > n) return zero;
    return rows_[n][k];
  }

 private:
  StirlingKind kind_;
  int max_n_;
  std::vector<std::vector<Integer>> rows_;
};

namespace detail {
inline void check_stirling_args(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    fail(ErrorKind::OutOfRange, "Stirling numbers need 0 <= k <= n, got n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k));
}
}  // namespace detail

inline Integer stirling2(int n, int k) {
  detail::check_stirling_args(n, k);
  return StirlingTable(StirlingKind::Second, n)(n, k);
}

inline Integer stirling1_signed(int n, int k) {
  detail::check_stirling_args(n, k);
  return StirlingTable(StirlingKind::First, n)(n, k);
}

/// Partition or factorization encoded by multiplicities: multiplicity[p] is
/// how many times the part (or factor) p occurs. Index 0 is unused.
struct PartitionTerm {
  std::vector<int> multiplicity;

  int count() const {
    int c = 0;
    for (int m : multiplicity) c += m;
    return c;
  }
  /// Parts in non-increasing order.
  std::vector<int> parts() const {
    std::vector<int> out;
    for (int p = static_cast<int>(multiplicity.size()) - 1; p >= 1; --p)
      for (int i = 0; i < multiplicity[p]; ++i) out.push_back(p);
    return out;
  }
  /// m!/(m_1! m_2! ...)
  Integer multinomial() const {
    Integer r = factorial(count());
    for (int m : multiplicity) r /= factorial(m);
    return r;
  }
  friend bool operator==(const PartitionTerm&, const PartitionTerm&) = default;
};

namespace detail {

inline PartitionTerm to_term(const std::vector<int>& parts, int n) {
  PartitionTerm t;
  t.multiplicity.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int p : parts) ++t.multiplicity[p];
  return t;
}

inline void additive_rec(int remaining, int parts_left, int max_part, std::vector<int>& cur, int n,
                         std::vector<PartitionTerm>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.push_back(to_term(cur, n));
    return;
  }
  // Each of the remaining parts is at least 1 and at most max_part.
  for (int p = std::min(max_part, remaining - (parts_left - 1)); p >= 1; --p) {
    if (p * parts_left < remaining) break;
    cur.push_back(p);
    additive_rec(remaining - p, parts_left - 1, p, cur, n, out);
    cur.pop_back();
  }
}

inline void mult_rec(long remaining, int factors_left, long max_factor, std::vector<int>& cur, int n,
                     std::vector<PartitionTerm>& out) {
  if (factors_left == 0) {
    if (remaining == 1) out.push_back(to_term(cur, n));
    return;
  }
  for (long f = std::min(max_factor, remaining); f >= 2; --f) {
    if (remaining % f != 0) continue;
    cur.push_back(static_cast<int>(f));
    mult_rec(remaining / f, factors_left - 1, f, cur, n, out);
    cur.pop_back();
  }
}

inline void check_bell_coeffs(std::span<const Rational> a, int n) {
  if (static_cast<int>(a.size()) <= n)
    fail(ErrorKind::OutOfRange, "Bell sum needs coefficients a_1..a_" + std::to_string(n));
}

}  // namespace detail

/// All partitions of n into exactly m positive parts.
inline std::vector<PartitionTerm> additive_partitions(int n, int m) {
  std::vector<PartitionTerm> out;
  if (n < 0 || m < 0) return out;
  std::vector<int> cur;
  detail::additive_rec(n, m, n, cur, n, out);
  return out;
}

/// All multisets of m integers >= 2 whose product is n.
inline std::vector<PartitionTerm> mult_decompositions(int n, int m) {
  std::vector<PartitionTerm> out;
  if (n < 2 || m < 1) return out;
  std::vector<int> cur;
  detail::mult_rec(n, m, n, cur, n, out);
  return out;
}

namespace detail {
inline Rational bell_sum(const std::vector<PartitionTerm>& terms, std::span<const Rational> a) {
  Rational total = 0;
  for (const auto& t : terms) {
    Rational term = Rational(t.multinomial());
    for (std::size_t p = 1; p < t.multiplicity.size(); ++p)
      if (t.multiplicity[p] > 0) term *= pow(a[p], t.multiplicity[p]);
    total += term;
  }
  return total;
}
}  // namespace detail

/// B_{n,m}(a_1..a_n); a[p] holds a_p and a[0] is ignored.
inline Rational bell_partial(int n, int m, std::span<const Rational> a) {
  if (m < 1 || m > n) fail(ErrorKind::OutOfRange, "bell_partial needs 1 <= m <= n");
  detail::check_bell_coeffs(a, n);
  return detail::bell_sum(additive_partitions(n, m), a);
}

/// Multiplicative analogue over factorizations of n into m factors >= 2;
/// a[p] holds a_p, a[0] and a[1] are ignored.
inline Rational bell_partial_mult(int n, int m, std::span<const Rational> a) {
  if (n < 2 || m < 1) fail(ErrorKind::OutOfRange, "bell_partial_mult needs n >= 2 and m >= 1");
  detail::check_bell_coeffs(a, n);
  return detail::bell_sum(mult_decompositions(n, m), a);
}

}  // namespace rgep

#pragma once

// Exact scalars. Backed by GMP; mpq_class keeps values canonical after every
// arithmetic operation, so equality is exact value equality.

#include <gmpxx.h>

#include <cctype>
#include <climits>
#include <optional>
#include <string>
#include <string_view>

#include "riordan_gep/error.hpp"

namespace rgep {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational q(long num, long den = 1) {
  if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational q(const Integer& num, const Integer& den = 1) {
  if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p", "p/q" (decimal digits only).
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { fail(ErrorKind::InvalidArgument, "not a rational number: '" + s + "'"); };
  if (s.empty()) bad();
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') ++i;
  bool seen_digit = false, seen_slash = false, digit_after_slash = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (c == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
    } else {
      bad();
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash)) bad();
  if (s[0] == '+') s.erase(0, 1);
  Rational r(s, 10);
  if (r.get_den() == 0) fail(ErrorKind::InvalidArgument, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

/// "num/den", with "/1" omitted.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    fail(ErrorKind::InvalidArgument, "not a machine integer: " + to_string(r));
  return r.get_num().get_si();
}

inline Integer factorial(long n) {
  if (n < 0) fail(ErrorKind::OutOfRange, "factorial of negative number");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

/// Generalized binomial r(r-1)...(r-k+1)/k! for rational r; zero for k < 0.
inline Rational binomial(const Rational& r, long k) {
  if (k < 0) return 0;
  Rational acc = 1;
  for (long i = 0; i < k; ++i) acc *= r - i;
  acc /= Rational(factorial(k));
  return acc;
}

/// r^e for integer e; r must be nonzero when e < 0.
inline Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (r == 0) fail(ErrorKind::InvalidArgument, "zero to a negative power");
    return pow(Rational(1) / r, -e);
  }
  Rational result = 1, base = r;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

/// Exact r^(p/q) when it is rational (r > 0, or r = 0 with positive exponent).
inline std::optional<Rational> exact_pow(const Rational& r, const Rational& exponent) {
  if (is_integer(exponent)) {
    if (r == 0 && exponent < 0) return std::nullopt;
    return pow(r, to_long(exponent));
  }
  if (r == 0) return exponent > 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
  if (r < 0) return std::nullopt;
  const Integer& den = exponent.get_den();
  if (!den.fits_ulong_p()) return std::nullopt;
  unsigned long root = den.get_ui();
  Integer num_root, den_root;
  if (mpz_root(num_root.get_mpz_t(), r.get_num().get_mpz_t(), root) == 0) return std::nullopt;
  if (mpz_root(den_root.get_mpz_t(), r.get_den().get_mpz_t(), root) == 0) return std::nullopt;
  Integer e = exponent.get_num();
  if (!e.fits_slong_p()) return std::nullopt;
  return pow(q(num_root, den_root), e.get_si());
}

}  // namespace rgep

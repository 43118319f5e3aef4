#pragma once

// Seeded generators of random exact inputs for the property suites.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "riordan_gep/poly.hpp"
#include "riordan_gep/series.hpp"

namespace rgep {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  /// p/q with |p| <= num_bound and 1 <= q <= den_bound.
  Rational rational(long num_bound = 5, long den_bound = 4) {
    return q(integer(-num_bound, num_bound), integer(1, den_bound));
  }

  Rational nonzero_rational(long num_bound = 5, long den_bound = 4) {
    Rational r;
    do r = rational(num_bound, den_bound);
    while (r == 0);
    return r;
  }

  /// Random series of the given order with constant term c0 (random if not given).
  Series series(int order, std::optional<Rational> c0 = std::nullopt) {
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (auto& v : c) v = rational();
    if (c0) c[0] = *c0;
    return Series(std::move(c), order);
  }

  /// a_0 = 1 and a_1 != 0.
  Series unit_series(int order) {
    Series s = series(order, Rational(1));
    if (order >= 1 && s[1] == 0) {
      std::vector<Rational> c = s.coeffs();
      c[1] = nonzero_rational();
      s = Series(std::move(c), order);
    }
    return s;
  }

  /// g_0 = 0 and g_1 != 0.
  Series delta_series(int order) {
    std::vector<Rational> c = series(order, Rational(0)).coeffs();
    if (order >= 1) c[1] = nonzero_rational();
    return Series(std::move(c), order);
  }

  Poly poly(int max_degree) {
    std::vector<Rational> c(static_cast<std::size_t>(max_degree) + 1);
    for (auto& v : c) v = rational();
    return Poly(std::move(c));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace rgep

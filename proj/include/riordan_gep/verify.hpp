#pragma once

// Seeded runner for the identity suites: gep (series, Riordan arrays, Stirling
// and Bell numbers, GEP pipeline), w, abeta (Lagrange family) and dirichlet.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "riordan_gep/dirichlet.hpp"
#include "riordan_gep/gep.hpp"
#include "riordan_gep/lagrange.hpp"
#include "riordan_gep/multinomial_w.hpp"
#include "riordan_gep/output.hpp"
#include "riordan_gep/riordan.hpp"
#include "riordan_gep/sampling.hpp"
#include "riordan_gep/series.hpp"
#include "riordan_gep/stirling.hpp"

namespace rgep {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int max_n = 8;
  int samples = 5;
};

struct VerifyCheck {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) { return !c.passed; }));
  }
  OutputDoc to_doc() const {
    OutputDoc d{DocKind::VerifyReport, std::nullopt, static_cast<int>(checks.size()), 4, {}};
    for (const auto& c : checks) d.entries.push_back({c.suite, c.name, c.passed ? "pass" : "fail", c.detail});
    return d;
  }
};

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"gep", "w", "abeta", "dirichlet"};
  return names;
}

namespace detail {

class Runner {
 public:
  Runner(std::string suite, const VerifyOptions& opt, VerifyReport& report)
      : suite_(std::move(suite)), opt_(opt), report_(report) {}

  int cap(int bound) const { return std::max(1, std::min(bound, opt_.max_n)); }
  int samples() const { return std::max(1, opt_.samples); }

  /// Runs `body` once per sample with its own generator; the check fails on the first false.
  void run(const std::string& name, const std::function<bool(Sampler&, std::string&)>& body, bool seeded = true) {
    VerifyCheck c{suite_, name, true, ""};
    const int count = seeded ? samples() : 1;
    for (int s = 0; s < count && c.passed; ++s) {
      Sampler rng(opt_.seed * 1000003u + hash(name) + static_cast<std::uint64_t>(s));
      std::string detail;
      try {
        c.passed = body(rng, detail);
      } catch (const std::exception& e) {
        c.passed = false;
        detail = e.what();
      }
      if (!c.passed) c.detail = (seeded ? "sample " + std::to_string(s) + ": " : "") + detail;
    }
    report_.checks.push_back(std::move(c));
  }

 private:
  static std::uint64_t hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ull;
    return h;
  }

  std::string suite_;
  const VerifyOptions& opt_;
  VerifyReport& report_;
};

inline Series random_unit(Sampler& rng, int order) { return rng.series(order, Rational(1)); }

inline void verify_gep(const VerifyOptions& opt, VerifyReport& report) {
  Runner r("gep", opt, report);
  const int N = r.cap(16);

  r.run("series.ring-axioms", [&](Sampler& rng, std::string&) {
    const int n = static_cast<int>(rng.integer(0, std::min(12, 2 * N)));
    const Series a = rng.series(n), b = rng.series(n), c = rng.series(n);
    return (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a;
  });
  r.run("series.log-exp-inverse", [&](Sampler& rng, std::string&) {
    const int n = static_cast<int>(rng.integer(1, std::min(12, 2 * N)));
    const Series a = random_unit(rng, n), z = rng.series(n, Rational(0));
    return series_exp(series_log(a)) == a && series_log(series_exp(z)) == z;
  });
  r.run("series.pow-adds-exponents", [&](Sampler& rng, std::string&) {
    const int n = static_cast<int>(rng.integer(1, std::min(10, 2 * N)));
    const Series a = random_unit(rng, n);
    const Rational p = rng.rational(), q = rng.rational();
    return series_pow(a, p + q) == series_pow(a, p) * series_pow(a, q);
  });
  r.run("series.compose-associative", [&](Sampler& rng, std::string&) {
    const int n = static_cast<int>(rng.integer(1, std::min(9, 2 * N)));
    const Series a = rng.series(n), g = rng.series(n, Rational(0)), h = rng.series(n, Rational(0));
    return series_compose(series_compose(a, g), h) == series_compose(a, series_compose(g, h));
  });
  r.run("series.comp-inverse-round-trip", [&](Sampler& rng, std::string&) {
    const int n = static_cast<int>(rng.integer(1, std::min(10, 2 * N)));
    const Series g = rng.delta_series(n), h = series_comp_inverse(g);
    return series_compose(h, g) == Series::x(n) && series_compose(g, h) == Series::x(n);
  });

  r.run("riordan.fundamental-theorem", [&](Sampler& rng, std::string&) {
    const int size = static_cast<int>(rng.integer(1, r.cap(8)));
    const int order = size + 2;
    const auto A = RiordanArray::ordinary(rng.series(order), rng.delta_series(order));
    const auto B = RiordanArray::ordinary(rng.series(order), rng.delta_series(order));
    const auto C = RiordanArray::square(rng.series(order), random_unit(rng, order));
    return riordan_window(riordan_mul(A, B), size, size) == riordan_window(A, size, size) * riordan_window(B, size, size) &&
           riordan_window(riordan_mul(A, C), size, size + 2) ==
               riordan_window(A, size, size) * riordan_window(C, size, size + 2);
  });
  r.run("riordan.pascal-powers", [&](Sampler& rng, std::string&) {
    const int size = r.cap(8);
    const Rational p = rng.rational(), q = rng.rational();
    return pascal_power(p, size) * pascal_power(q, size) == pascal_power(p + q, size);
  });
  r.run("riordan.minus-one-inverse-shift", [&](Sampler& rng, std::string&) {
    const int size = r.cap(8);
    const Series a = random_unit(rng, size + 2);
    const Series one = Series::constant(1, size + 2);
    const auto left = RiordanArray::ordinary(one, a - one);
    const auto shift = RiordanArray::square(one, series_inv(Series({1, 1}, size + 2)));
    const auto target = RiordanArray::square(one, series_inv(a));
    return riordan_window(left, size, size) * riordan_window(shift, size, size) == riordan_window(target, size, size);
  });
  r.run("riordan.shift-is-pascal-transpose", [&](Sampler&, std::string&) {
    const int size = r.cap(8);
    const auto E = RiordanArray::square(Series::constant(1, size + 1), Series({1, 1}, size + 1));
    return riordan_window(E, size, size) == pascal_power(1, size).transpose();
  }, false);
  r.run("riordan.row-numerator-polynomial", [&](Sampler& rng, std::string&) {
    const int n = static_cast<int>(rng.integer(0, r.cap(8)));
    const auto A = RiordanArray::square(Series::constant(1, 2 * n + 2), random_unit(rng, 2 * n + 2));
    return square_row_numerator(A, n).degree() <= n;
  });

  r.run("stirling.orthogonality", [&](Sampler&, std::string& why) {
    const int M = r.cap(12);
    for (int n = 0; n <= M; ++n)
      for (int m = 0; m <= M; ++m) {
        Integer s = 0;
        for (int k = m; k <= n; ++k) s += stirling1_signed(n, k) * stirling2(k, m);
        if (s != (n == m ? 1 : 0)) {
          why = "n=" + std::to_string(n) + " m=" + std::to_string(m);
          return false;
        }
      }
    return true;
  }, false);
  r.run("stirling.bell-rows", [&](Sampler& rng, std::string& why) {
    const int n = r.cap(8);
    const Series a = random_unit(rng, n);
    const auto A = RiordanArray::ordinary(Series::constant(1, n), a - Series::constant(1, n));
    for (int k = 1; k <= n; ++k) {
      const Poly row = riordan_row(A, k, k + 1);
      for (int m = 1; m <= k; ++m)
        if (row.coeff(m) != bell_partial(k, m, a.coeffs())) {
          why = "n=" + std::to_string(k) + " m=" + std::to_string(m);
          return false;
        }
    }
    return true;
  });
  r.run("stirling.log-coefficients", [&](Sampler& rng, std::string&) {
    const int n = r.cap(8);
    const Series a = random_unit(rng, n), l = series_log(a);
    for (int p = 1; p <= n; ++p) {
      Rational b = 0;
      for (int m = 1; m <= p; ++m) b += Rational(m % 2 ? 1 : -1) * bell_partial(p, m, a.coeffs()) / m;
      if (b != l[p]) return false;
    }
    return true;
  });
  r.run("stirling.u-from-log", [&](Sampler& rng, std::string&) {
    const int n = static_cast<int>(rng.integer(1, r.cap(8)));
    const Series a = random_unit(rng, GepContext::required_order(n));
    const Series b = series_log(a);
    Poly u;
    for (int m = 1; m <= n; ++m) u.set_coeff(m, Rational(factorial(n)) * bell_partial(n, m, b.coeffs()) / Rational(factorial(m)));
    return u.trimmed() == u_poly(GepContext(a, n));
  });

  r.run("gep.pipeline-matrices", [&](Sampler& rng, std::string&) {
    const int n = static_cast<int>(rng.integer(1, r.cap(8)));
    const GepContext ctx(random_unit(rng, GepContext::required_order(n)), n);
    return matrix_U(n).apply(ctx.u_tilde()).trimmed() == ctx.alpha_tilde() &&
           matrix_V(n).apply(ctx.alpha_tilde()).trimmed() == ctx.v_tilde() && alpha_routes_agree(ctx);
  });
  r.run("gep.u-inverse", [&](Sampler&, std::string& why) {
    for (int n = 1; n <= N; ++n)
      if (matrix_U(n) * matrix_Uinv(n) != RMatrix::identity(n) || matrix_V(n) * matrix_Vinv(n) != RMatrix::identity(n)) {
        why = "n=" + std::to_string(n);
        return false;
      }
    return true;
  }, false);
  r.run("gep.u-sign-reversal", [&](Sampler&, std::string& why) {
    for (int n = 1; n <= N; ++n)
      if (!check_theorem1(n)) {
        why = "n=" + std::to_string(n);
        return false;
      }
    return true;
  }, false);
  r.run("gep.alpha-at-one", [&](Sampler& rng, std::string&) {
    const int n = static_cast<int>(rng.integer(1, r.cap(8)));
    return check_theorem2(GepContext(random_unit(rng, GepContext::required_order(n)), n));
  });
  r.run("gep.reciprocal-reversal", [&](Sampler& rng, std::string&) {
    const int n = static_cast<int>(rng.integer(1, r.cap(8)));
    return check_reciprocal_reversal(random_unit(rng, GepContext::required_order(n)), n);
  });
  r.run("gep.exponential-gives-euler", [&](Sampler&, std::string& why) {
    for (int n = 1; n <= r.cap(8); ++n) {
      const GepContext ctx(Series::exponential(1, GepContext::required_order(n)), n);
      if (ctx.alpha() != (Rational(1) / Rational(factorial(n))) * euler_poly(n)) {
        why = "n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  }, false);
  r.run("gep.stirling-products", [&](Sampler&, std::string& why) {
    for (int n = 1; n <= r.cap(12); ++n)
      if (!stirling_products(n).agree()) {
        why = "n=" + std::to_string(n);
        return false;
      }
    return true;
  }, false);
  r.run("gep.v-action", [&](Sampler& rng, std::string&) {
    const int n = static_cast<int>(rng.integer(1, r.cap(10)));
    Poly c, expected;
    for (int k = 0; k < n; ++k) c.set_coeff(k, rng.rational());
    for (int k = 0; k < n; ++k) expected = expected + c.coeff(k) * Poly::linear_power(1, n - 1 - k).times_x(k);
    return matrix_V(n).apply(c).trimmed() == expected.trimmed();
  });
  r.run("gep.reductions", [&](Sampler&, std::string& why) {
    for (int n = 2; n <= r.cap(9); ++n)
      for (int m = 1; m < n; ++m)
        if (!check_reduction(n, m)) {
          why = "n=" + std::to_string(n) + " m=" + std::to_string(m);
          return false;
        }
    return true;
  }, false);
  r.run("gep.generating-function", [&](Sampler& rng, std::string&) {
    return gep_generating_function_check(rng.rational(), rng.rational(), rng.rational(), std::min(8, N));
  });
}

inline void verify_w(const VerifyOptions& opt, VerifyReport& report) {
  Runner r("w", opt, report);
  r.run("column-sums", [&](Sampler&, std::string& why) {
    for (int n = 1; n <= r.cap(10); ++n)
      for (int m = 1; m <= 5; ++m)
        for (const Rational& s : column_sums(w_matrix(n, m).matrix))
          if (s != pow(Rational(m), n)) {
            why = "n=" + std::to_string(n) + " m=" + std::to_string(m);
            return false;
          }
    return true;
  }, false);
  r.run("three-constructions", [&](Sampler&, std::string& why) {
    for (int n = 1; n <= r.cap(8); ++n)
      for (int m = 1; m <= 4; ++m) {
        const RMatrix W = w_matrix(n, m).matrix;
        if (w_matrix_conjugation(n, m) != W || w_alt_form(n, m) != W) {
          why = "n=" + std::to_string(n) + " m=" + std::to_string(m);
          return false;
        }
      }
    return true;
  }, false);
  r.run("multiplicative-and-reversal", [&](Sampler& rng, std::string&) {
    const int n = static_cast<int>(rng.integer(1, r.cap(8)));
    return w_identities(n, static_cast<int>(rng.integer(1, 4)), static_cast<int>(rng.integer(1, 4)));
  });
  r.run("power-of-series", [&](Sampler& rng, std::string&) {
    const int n = static_cast<int>(rng.integer(1, r.cap(6)));
    const int m = static_cast<int>(rng.integer(1, 3));
    const Series a = random_unit(rng, GepContext::required_order(n));
    return w_apply(w_matrix(n, m), GepContext(a, n).alpha_tilde()) == GepContext(series_pow(a, m), n).alpha_tilde();
  });
  r.run("restriction", [&](Sampler&, std::string&) {
    for (int n = 1; n <= r.cap(7); ++n)
      for (int m = 1; m <= 3; ++m)
        for (int p = 0; p < n; ++p)
          if (!w_restriction(n, m, p)) return false;
    return true;
  }, false);
}

inline const std::vector<Rational>& theorem_betas() {
  static const std::vector<Rational> b{1, -1, 2, -2, q(1, 2), q(-1, 2), q(1, 3), q(-1, 3)};
  return b;
}

inline void verify_abeta(const VerifyOptions& opt, VerifyReport& report) {
  Runner r("abeta", opt, report);
  r.run("three-constructions", [&](Sampler&, std::string& why) {
    for (int n = 1; n <= r.cap(8); ++n)
      for (const Rational& b : theorem_betas()) {
        const RMatrix c = abeta_matrix(n, b, ABetaConstruction::Conjugation).matrix;
        if (abeta_matrix(n, b, ABetaConstruction::Dtilde).matrix != c || abeta_matrix(n, b, ABetaConstruction::LogSeries).matrix != c) {
          why = "n=" + std::to_string(n) + " beta=" + to_string(b);
          return false;
        }
      }
    return true;
  }, false);
  r.run("group-law", [&](Sampler& rng, std::string&) {
    const int n = static_cast<int>(rng.integer(1, r.cap(8)));
    const Rational b1 = rng.rational(), b2 = rng.rational();
    return abeta_matrix(n, b1).matrix * abeta_matrix(n, b2).matrix == abeta_matrix(n, b1 + b2).matrix;
  });
  r.run("column-sums-and-identities", [&](Sampler&, std::string& why) {
    for (int n = 1; n <= r.cap(10); ++n)
      for (const Rational& b : theorem_betas()) {
        for (const Rational& s : column_sums(abeta_matrix(n, b).matrix))
          if (s != 1) {
            why = "sum n=" + std::to_string(n) + " beta=" + to_string(b);
            return false;
          }
        if (n <= 8 && !abeta_identities(n, b)) {
          why = "identities n=" + std::to_string(n) + " beta=" + to_string(b);
          return false;
        }
      }
    return true;
  }, false);
  r.run("carries-alpha", [&](Sampler& rng, std::string&) {
    const int n = static_cast<int>(rng.integer(1, r.cap(6)));
    const int order = GepContext::required_order(n);
    const Series a = random_unit(rng, order);
    for (const Rational& b : {Rational(1), Rational(2), q(1, 2)}) {
      const Series lifted = lagrange_series(LagrangeFamily(a, b, order));
      if (abeta_apply(abeta_matrix(n, b), GepContext(a, n).alpha_tilde()) != GepContext(lifted, n).alpha_tilde()) return false;
    }
    return true;
  });
  r.run("functional-equations", [&](Sampler& rng, std::string& why) {
    const int order = 12;
    const std::vector<Series> bases{Series({1, 1}, order), Series::exponential(1, order), random_unit(rng, order)};
    for (const Series& a : bases)
      for (const Rational& b : {Rational(1), Rational(-1), Rational(2), q(1, 2)})
        if (!check_functional_eq(LagrangeFamily(a, b, order))) {
          why = "beta=" + to_string(b);
          return false;
        }
    return true;
  });
  r.run("u-shift", [&](Sampler& rng, std::string&) {
    const int n = static_cast<int>(rng.integer(1, r.cap(6)));
    const int order = GepContext::required_order(n);
    const Series a = random_unit(rng, order);
    const Rational b = rng.nonzero_rational();
    const Series lifted = lagrange_series(LagrangeFamily(a, b, order));
    return lagrange_u_shift(GepContext(a, n).u(), n, b) == GepContext(lifted, n).u();
  });
  r.run("closed-form-last-column", [&](Sampler& rng, std::string&) {
    const int n = static_cast<int>(rng.integer(1, r.cap(10)));
    const Rational b = rng.rational();
    const RMatrix A = abeta_matrix(n, b).matrix;
    Poly last;
    for (int i = 0; i < n; ++i) last.set_coeff(i, A(i, n - 1));
    return gbs_alpha_closed_form(n, b) == last.times_x().trimmed() && duality_check(n, b);
  });
}

inline void verify_dirichlet(const VerifyOptions& opt, VerifyReport& report) {
  Runner r("dirichlet", opt, report);
  const int rows = std::max(13, std::min(64, opt.max_n * opt.max_n));
  r.run("window-identities", [&](Sampler& rng, std::string&) {
    DirichletSeries a(rows);
    a[1] = 1;
    for (int n = 2; n <= rows; ++n) a[n] = rng.rational(3, 3);
    return dirichlet_window_identities(a, rows + 1) && dirichlet_window_identities(DirichletSeries::zeta(rows), rows + 1);
  });
  r.run("zeta-u-rising-factorials", [&](Sampler&, std::string& why) {
    const DirichletSeries z = DirichletSeries::zeta(rows);
    for (int n = 2; n <= rows; ++n) {
      Poly expected{1};
      for (const auto& [p, e] : factorize(n))
        expected = (Rational(1) / Rational(factorial(e))) * (expected * rising_factorial(e));
      if (dir_u_poly_scaled(z, n) != expected.trimmed()) {
        why = "n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  }, false);
  r.run("alpha-routes", [&](Sampler& rng, std::string& why) {
    DirichletSeries a(rows);
    a[1] = 1;
    for (int n = 2; n <= rows; ++n) a[n] = rng.rational(3, 3);
    for (int n = 2; n <= rows; ++n)
      if (dir_alpha_poly(a, n, DirAlphaRoute::V) != dir_alpha_poly(a, n, DirAlphaRoute::U) ||
          dir_alpha_poly(a, n) != dir_row_numerator(a, n)) {
        why = "n=" + std::to_string(n);
        return false;
      }
    return true;
  });
  r.run("carlitz-hoggatt", [&](Sampler&, std::string& why) {
    for (int p = 1; p <= 3; ++p)
      for (int rr = 1; rr <= 3; ++rr) {
        const Poly G = carlitz_hoggatt(rr, p);
        Rational target = Rational(factorial(p * rr)) / pow(Rational(factorial(p)), rr);
        if (G.eval(1) != target || !dir_palindromy_check(rr, p)) {
          why = "r=" + std::to_string(rr) + " p=" + std::to_string(p);
          return false;
        }
      }
    for (int n = 1; n <= 5; ++n)
      if (carlitz_hoggatt(n, 1) != euler_poly(n)) return false;
    return true;
  }, false);
}

}  // namespace detail

/// Runs one suite, or every suite for "all".
inline VerifyReport run_verify(const std::string& suite, const VerifyOptions& opt = {}) {
  if (opt.max_n < 1) fail(ErrorKind::OutOfRange, "max-n must be >= 1");
  VerifyReport report;
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "gep") known = true, detail::verify_gep(opt, report);
  if (all || suite == "w") known = true, detail::verify_w(opt, report);
  if (all || suite == "abeta") known = true, detail::verify_abeta(opt, report);
  if (all || suite == "dirichlet") known = true, detail::verify_dirichlet(opt, report);
  if (!known) fail(ErrorKind::InvalidArgument, "unknown verify suite '" + suite + "'");
  return report;
}

}  // namespace rgep

#include "riordan_gep/lagrange.hpp"
#include "riordan_gep/sampling.hpp"
#include "support/goldens.hpp"
#include "support/helpers.hpp"

using namespace rgep;
using namespace testing_support;

namespace {

const int kOrder = 10;

Series one_plus_x(int order) { return S({1, 1}, order); }

Series moebius_like() { return S({1, 1}, 12) * series_inv(S({1, -1}, 12)); }

Series lag(const Series& a, const Rational& beta, int order) {
  return lagrange_series(LagrangeFamily(a.truncated(order), beta, order));
}

/// Fixed point of L = 1 + x L^beta by iteration, for a = 1+x.
Series fixed_point_one_plus_x(const Rational& beta, int order) {
  Series L = Series::constant(1, order);
  for (int i = 0; i <= order; ++i) L = Series::constant(1, order) + Series::x(order) * series_pow(L, beta);
  return L;
}

/// C(r, k) with rational r by the falling product.
Rational gchoose(const Rational& r, int k) {
  if (k < 0) return 0;
  Rational c = 1;
  for (int i = 0; i < k; ++i) c = c * (r - i) / (i + 1);
  return c;
}

const std::vector<Rational>& betas() {
  static const std::vector<Rational> b{1, -1, 2, -2, q(1, 2), q(-1, 3)};
  return b;
}

}  // namespace

TEST(LagrangeCoeffs, ReferenceClosedForms) {
  const int N = kOrder;
  EXPECT_EQ(lag(one_plus_x(N), 1, N), Series::geometric(1, N));
  EXPECT_EQ(lag(one_plus_x(N), 2, N).truncated(5), S({1, 1, 2, 5, 14, 42}, 5));

  // (1 - sqrt(1-4x)) / (2x)
  const Series root = series_pow(S({1, -4}, N + 1), R("1/2"));
  const Series catalan = R("1/2") * (Series::constant(1, N + 1) - root).div_x();
  EXPECT_EQ(lag(one_plus_x(N), 2, N), catalan.truncated(N));

  // (1 + sqrt(1+4x)) / 2
  const Series minus_one = R("1/2") * (Series::constant(1, N) + series_pow(S({1, 4}, N), R("1/2")));
  EXPECT_EQ(lag(one_plus_x(N), -1, N), minus_one);

  // (x/2 + sqrt(1 + x^2/4))^2
  const Series half = series_pow(R("1/2") * Series::x(N) + series_pow(Series::constant(1, N) + R("1/4") * S({0, 0, 1}, N), R("1/2")), 2);
  EXPECT_EQ(lag(one_plus_x(N), R("1/2"), N), half);
}

TEST(LagrangeCoeffs, FixedPointOracle) {
  for (const Rational& b : betas()) EXPECT_EQ(lag(one_plus_x(8), b, 8), fixed_point_one_plus_x(b, 8)) << to_string(b);
}

TEST(LagrangeCoeffs, BetaZeroIsPower) {
  Sampler rng(31);
  const Series a = rng.series(8, Rational(1));
  const LagrangeFamily fam(a, 0, 8);
  EXPECT_EQ(lagrange_series(fam), a);
  EXPECT_EQ(lagrange_coeffs(fam, R("3/2")), series_pow(a, R("3/2")));
}

TEST(LagrangeCoeffs, PoleUsesRegularForm) {
  // phi = -2, beta = 1 meets phi + beta n = 0 at n = 2
  Sampler rng(32);
  const Series a = rng.series(6, Rational(1));
  const LagrangeFamily fam(a, 1, 6);
  const Series L = lagrange_series(fam);
  EXPECT_EQ(lagrange_coeffs(fam, -2), series_pow(L, -2));
  EXPECT_EQ(lagrange_coeffs(fam, 0), Series::constant(1, 6));
}

TEST(LagrangeCoeffs, PowersAreConsistent) {
  Sampler rng(33);
  const Series a = rng.series(7, Rational(1));
  const LagrangeFamily fam(a, R("2/3"), 7);
  const Series L = lagrange_series(fam);
  for (const Rational& phi : {Rational(2), R("-1/2"), R("5/3")}) EXPECT_EQ(lagrange_coeffs(fam, phi), series_pow(L, phi));
}

TEST(LagrangeFamily, Preconditions) {
  try {
    LagrangeFamily(S({2, 1}, 4), 1, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConstantTermNotOne);
  }
  try {
    LagrangeFamily(S({1, 1}, 3), 1, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientOrder);
  }
}

TEST(LagrangeFunctionalEq, Examples) {
  EXPECT_TRUE(check_functional_eq(LagrangeFamily(one_plus_x(12), 1, 12)));
  EXPECT_TRUE(check_functional_eq(LagrangeFamily(one_plus_x(12), -1, 12)));
  EXPECT_TRUE(check_functional_eq(LagrangeFamily(Series::exponential(1, 12), 0, 12)));
  // 1/(1-y) at y = x/(1+x) is 1+x
  const Series y = Series::x(8) * series_inv(one_plus_x(8));
  EXPECT_EQ(series_compose(Series::geometric(1, 8), y), one_plus_x(8));
}

TEST(LagrangeFunctionalEq, Fixtures) {
  for (const Rational& b : {Rational(1), Rational(-1), Rational(2), R("1/2")}) {
    EXPECT_TRUE(check_functional_eq(LagrangeFamily(Series::exponential(1, 12), b, 12))) << to_string(b);
    EXPECT_TRUE(check_functional_eq(LagrangeFamily(moebius_like(), b, 12))) << to_string(b);
  }
}

TEST(DiagonalTable, AscendingReference) {
  const RMatrix t = diagonal_table(one_plus_x(3), 1, 1, {-3, 3}, 4);
  EXPECT_EQ(t, M({{1, -2, 1, 0}, {1, -1, 0, 0}, {1, 0, 0, 0}, {1, 1, 1, 1}, {1, 2, 3, 4}, {1, 3, 6, 10}, {1, 4, 10, 20}}));
}

TEST(DiagonalTable, DoubleAscendingReference) {
  const RMatrix t = diagonal_table(one_plus_x(3), 1, 2, {-3, 3}, 4);
  EXPECT_EQ(t, M({{1, -1, 0, 1}, {1, 0, 1, 4}, {1, 1, 3, 10}, {1, 2, 6, 20}, {1, 3, 10, 35}, {1, 4, 15, 56}, {1, 5, 21, 84}}));
}

TEST(DiagonalTable, DescendingReference) {
  EXPECT_EQ(diagonal_table(one_plus_x(3), 1, -1, {0, 3}, 4),
            M({{1, -1, 3, -10}, {1, 0, 1, -4}, {1, 1, 0, -1}, {1, 2, 0, 0}}));
  EXPECT_EQ(diagonal_table(one_plus_x(3), 1, -2, {0, 3}, 4),
            M({{1, -2, 10, -56}, {1, -1, 6, -35}, {1, 0, 3, -20}, {1, 1, 1, -10}}));
}

TEST(DiagonalTable, ZeroIsPowerTable) {
  Sampler rng(34);
  const Series a = rng.series(5, Rational(1));
  const RMatrix t = diagonal_table(a, R("1/2"), 0, {-2, 2}, 6);
  for (int k = -2; k <= 2; ++k) EXPECT_EQ(t.row(k + 2), series_pow(a, R("1/2") * k).to_poly());
}

TEST(DiagonalTable, CoefficientOracle) {
  // [x^n] a^{beta(k + v n)}
  Sampler rng(35);
  const Series a = rng.series(5, Rational(1));
  for (int v = -2; v <= 2; ++v)
    for (const Rational& b : {Rational(1), R("2/3")}) {
      const RMatrix t = diagonal_table(a, b, v, {-2, 2}, 6);
      for (int k = -2; k <= 2; ++k)
        for (int n = 0; n < 6; ++n) EXPECT_EQ(t(k + 2, n), series_pow(a, b * (k + v * n))[n]) << v << "," << k << "," << n;
    }
}

TEST(DiagonalTable, InsufficientOrder) {
  try {
    diagonal_table(one_plus_x(2), 1, 1, {0, 1}, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientOrder);
  }
}

TEST(DiagonalTable, RearrangementAgrees) {
  Sampler rng(36);
  for (int trial = 0; trial < 4; ++trial) {
    const Series a = rng.series(5, Rational(1));
    const Rational b = Rational(rng.integer(-2, 2));
    for (int v = -3; v <= 3; ++v)
      EXPECT_EQ(diagonal_table(a, b, v, {-2, 3}, 5), diagonal_table_rearranged(a, b, v, {-2, 3}, 5)) << v;
  }
}

TEST(ABeta, ReferenceMatrices) {
  for (int n = 2; n <= 4; ++n) {
    EXPECT_EQ(abeta_matrix(n, 1).matrix, goldens::A(n)) << n;
    EXPECT_EQ(abeta_matrix(n, -1).matrix, goldens::Ainv(n)) << n;
    EXPECT_EQ(abeta_matrix(n, R("1/2")).matrix, goldens::Ahalf(n)) << n;
    EXPECT_EQ(log_A(n), goldens::logA(n)) << n;
  }
  EXPECT_EQ(goldens::A(4) * goldens::Ainv(4), RMatrix::identity(4));
  EXPECT_EQ(goldens::Ahalf(3) * goldens::Ahalf(3), goldens::A(3));
}

TEST(ABeta, LogPowers) {
  EXPECT_EQ(log_A(3).pow(2), goldens::logA3_squared());
  EXPECT_EQ(log_A(4).pow(2), goldens::logA4_squared());
  EXPECT_EQ(log_A(4).pow(3), goldens::logA4_cubed());
  EXPECT_TRUE(log_A(5).pow(5).is_zero());
}

TEST(ABeta, DtildeFactorsForA3) {
  const RMatrix pascal_t = M({{1, 3, 3}, {0, 1, 3}, {0, 0, 1}});
  EXPECT_EQ(goldens::Vinv(3) * dtilde(3) * pascal_t * dtilde(3, true) * goldens::V(3), goldens::A(3));
  EXPECT_EQ(binomial_toeplitz_transpose(3, 3), pascal_t);
}

TEST(ABeta, ConstructionsAgree) {
  for (int n = 1; n <= 8; ++n)
    for (const Rational& b : betas()) {
      const RMatrix A = abeta_matrix(n, b, ABetaConstruction::Conjugation).matrix;
      EXPECT_EQ(abeta_matrix(n, b, ABetaConstruction::Dtilde).matrix, A) << n << "," << to_string(b);
      EXPECT_EQ(abeta_matrix(n, b, ABetaConstruction::LogSeries).matrix, A) << n << "," << to_string(b);
    }
}

TEST(ABeta, GroupLaw) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(abeta_matrix(n, 0).matrix, RMatrix::identity(n));
    EXPECT_EQ(abeta_matrix(n, R("1/2")).matrix * abeta_matrix(n, R("-1/3")).matrix, abeta_matrix(n, R("1/6")).matrix);
    EXPECT_EQ(abeta_matrix(n, 2).matrix * abeta_matrix(n, -1).matrix, abeta_matrix(n, 1).matrix);
  }
}

TEST(ABeta, UnitColumnSums) {
  for (int n = 1; n <= 10; ++n)
    for (const Rational& b : {Rational(1), Rational(-1), Rational(2), Rational(-2), R("1/2"), R("-1/2"), R("1/3")})
      for (const Rational& c : column_sums(abeta_matrix(n, b).matrix)) EXPECT_EQ(c, 1) << n << "," << to_string(b);
}

TEST(ABeta, Identities) {
  EXPECT_EQ(reversal(2, Reversal::Itilde) * goldens::A(2) * reversal(2, Reversal::Itilde), goldens::Ainv(2));
  for (int n = 1; n <= 7; ++n)
    for (const Rational& b : betas()) EXPECT_TRUE(abeta_identities(n, b)) << n << "," << to_string(b);
}

TEST(ABeta, ApplyToOnePlusX) {
  // alpha~_n of 1+x is x^{n-1}, so the image is the last column
  for (int n = 1; n <= 8; ++n)
    for (const Rational& b : betas()) {
      const ABetaMatrix A = abeta_matrix(n, b);
      const Poly image = abeta_apply(A, Poly::monomial(n - 1));
      EXPECT_EQ(image, A.matrix.column(n - 1).trimmed());
      const Series L = lag(one_plus_x(GepContext::required_order(n)), b, GepContext::required_order(n));
      EXPECT_EQ(image, GepContext(L, n).alpha_tilde()) << n << "," << to_string(b);
    }
  for (int k = 1; k <= 4; ++k)
    EXPECT_EQ(abeta_apply(abeta_matrix(2 * k, R("1/2")), Poly::monomial(2 * k - 1)),
              R("1/2") * Poly({1, 1}) * Poly::monomial(k - 1));
  EXPECT_EQ(abeta_apply(abeta_matrix(3, 0), P({1, 2, 3})), P({1, 2, 3}));
  EXPECT_THROW(abeta_apply(abeta_matrix(2, 1), P({0, 0, 1})), Error);
}

TEST(GbsClosedForm, Values) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(gbs_alpha_closed_form(n, 1), P({0, 1}));
    EXPECT_EQ(gbs_alpha_closed_form(n, 0), Poly::monomial(n));
  }
  for (int k = 1; k <= 5; ++k)
    EXPECT_EQ(gbs_alpha_closed_form(2 * k, R("1/2")), R("1/2") * Poly({1, 1}) * Poly::monomial(k));
}

TEST(GbsClosedForm, MatchesLastColumn) {
  for (int n = 1; n <= 10; ++n)
    for (const Rational& b : {Rational(2), Rational(-1), R("1/2"), R("-1/3"), R("3/4")})
      EXPECT_EQ(gbs_alpha_closed_form(n, b), abeta_matrix(n, b).matrix.column(n - 1).times_x().trimmed())
          << n << "," << to_string(b);
}

TEST(GbsClosedForm, BinomialOracle) {
  for (int n = 1; n <= 6; ++n) {
    const Rational b = R("2/5");
    Poly p;
    for (int m = 1; m <= n; ++m) p.set_coeff(m, gchoose(n * (1 - b), m - 1) * gchoose(n * b, n - m) / n);
    EXPECT_EQ(gbs_alpha_closed_form(n, b), p.trimmed());
  }
}

TEST(VtildeTransform, OnePlusX) {
  EXPECT_EQ(vtilde_transform(3, 1, P({0, 0, 1})), P({1, 2, 1}));
  for (int n = 1; n <= 7; ++n)
    for (const Rational& b : {Rational(1), Rational(2), R("1/2")}) {
      Poly expect;
      for (int m = 0; m < n; ++m) expect.set_coeff(m, Rational(m + 1) / n * gchoose(b * n, n - m - 1));
      EXPECT_EQ(vtilde_transform(n, b, Poly::monomial(n - 1)), expect.trimmed()) << n;
    }
  EXPECT_EQ(vtilde_transform(4, 0, P({1, 2, 3})), P({1, 2, 3}));
  EXPECT_THROW(vtilde_transform(2, 1, P({0, 0, 1})), Error);
}

TEST(VtildeTransform, MatchesLagrangeV) {
  Sampler rng(37);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = static_cast<int>(rng.integer(1, 6));
    const int order = GepContext::required_order(n);
    const Series a = rng.series(order, Rational(1));
    const Rational b = trial % 2 ? R("1/2") : Rational(2);
    const GepContext base(a, n), lifted(lag(a, b, order), n);
    EXPECT_EQ(vtilde_transform(n, b, base.v_tilde()), lifted.v_tilde());
  }
}

TEST(GbsWindow, CatalanForBetaTwo) {
  const RMatrix w = gbs_riordan_window(2, 5);
  EXPECT_EQ(w, M({{1, 0, 0, 0, 0}, {2, 1, 0, 0, 0}, {5, 4, 1, 0, 0}, {14, 14, 6, 1, 0}, {42, 48, 27, 8, 1}}));
  const int N = 5;
  const Series L2 = series_pow(lag(one_plus_x(N), 2, N), 2);
  EXPECT_EQ(w, riordan_window(RiordanArray::ordinary(L2, Series::x(N) * L2), 5, 5));
}

TEST(GbsWindow, MatchesLagrangeArray) {
  for (const Rational& b : {Rational(1), R("1/2"), R("-1/3")}) {
    const int N = 6;
    const Series Lb = series_pow(lag(one_plus_x(N), b, N), b);
    EXPECT_EQ(gbs_riordan_window(b, 6), riordan_window(RiordanArray::ordinary(Lb, Series::x(N) * Lb), 6, 6))
        << to_string(b);
  }
}

TEST(LagrangeU, ShiftFormula) {
  Sampler rng(38);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = static_cast<int>(rng.integer(1, 6));
    const int order = GepContext::required_order(n);
    const Series a = rng.series(order, Rational(1));
    const Rational b = betas()[trial % betas().size()];
    const Poly u = GepContext(a, n).u();
    EXPECT_EQ(lagrange_u_shift(u, n, b), GepContext(lag(a, b, order), n).u()) << n << "," << to_string(b);
  }
  EXPECT_THROW(lagrange_u_shift(P({1}), 1, 1), Error);
}

TEST(Duality, Cases) {
  for (int k = 1; k <= 4; ++k) {
    const Poly p = gbs_alpha_closed_form(2 * k, R("1/2"));
    EXPECT_EQ(p.reversed(2 * k).times_x().trimmed(), p);
  }
  EXPECT_EQ(Poly::monomial(5).reversed(5).times_x(), gbs_alpha_closed_form(5, 1));
  const Series cat = lag(one_plus_x(8), 2, 8);
  const Series other = lag(one_plus_x(8), -1, 8);
  EXPECT_EQ(other, series_inv(cat.scaled_argument(-1)));
  for (int n = 1; n <= 8; ++n)
    for (const Rational& b : betas()) EXPECT_TRUE(duality_check(n, b)) << n << "," << to_string(b);
}

class LagrangeProperties : public ::testing::TestWithParam<int> {};

TEST_P(LagrangeProperties, FunctionalEquations) {
  Sampler rng(2300 + GetParam());
  const Series a = rng.series(12, Rational(1));
  for (const Rational& b : {Rational(1), Rational(-1), Rational(2), R("1/2")})
    EXPECT_TRUE(check_functional_eq(LagrangeFamily(a, b, 12))) << to_string(b);
}

TEST_P(LagrangeProperties, ABetaCarriesAlpha) {
  Sampler rng(2400 + GetParam());
  const int n = static_cast<int>(rng.integer(1, 6));
  const int order = GepContext::required_order(n);
  const Series a = rng.series(order, Rational(1));
  for (const Rational& b : {Rational(1), Rational(2), R("1/2")}) {
    const Poly lifted = GepContext(lag(a, b, order), n).alpha_tilde();
    EXPECT_EQ(abeta_apply(abeta_matrix(n, b), GepContext(a, n).alpha_tilde()), lifted) << n << "," << to_string(b);
  }
}

TEST_P(LagrangeProperties, RandomBetaGroupAndSums) {
  Sampler rng(2500 + GetParam());
  const int n = static_cast<int>(rng.integer(1, 8));
  const Rational b1 = rng.rational(), b2 = rng.rational();
  EXPECT_EQ(abeta_matrix(n, b1).matrix * abeta_matrix(n, b2).matrix, abeta_matrix(n, b1 + b2).matrix);
  EXPECT_TRUE(abeta_identities(n, b1));
}

INSTANTIATE_TEST_SUITE_P(Seeded, LagrangeProperties, ::testing::Range(0, 20));

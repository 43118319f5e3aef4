#include "riordan_gep/sampling.hpp"
#include "riordan_gep/series.hpp"
#include "support/helpers.hpp"

using namespace rgep;
using namespace testing_support;

TEST(SeriesMul, BinomialSquare) { EXPECT_EQ(series_mul(S({1, 1}, 2), S({1, 1}, 2)), S({1, 2, 1}, 2)); }

TEST(SeriesMul, GeometricTimesOneMinusX) {
  EXPECT_EQ(series_mul(Series::geometric(1, 4), S({1, -1}, 4)), S({1}, 4));
}

TEST(SeriesMul, TrinomialCube) {
  const Series t = S({1, 1, 1}, 6);
  EXPECT_EQ(t * t * t, S({1, 3, 6, 7, 6, 3, 1}, 6));
}

TEST(SeriesMul, ResultOrderIsMinimum) {
  EXPECT_EQ((S({1, 2, 3}, 5) * S({1, 1}, 2)).order(), 2);
  EXPECT_EQ((S({1, 2, 3}, 5) + S({1, 1}, 3)).order(), 3);
}

TEST(SeriesMul, MatchesSchoolbookOracle) {
  Sampler rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Series a = rng.series(9), b = rng.series(9);
    EXPECT_EQ((a * b).coeffs(), naive_mul(a.coeffs(), b.coeffs(), 9));
  }
}

TEST(SeriesCompose, TelescopingGeometric) {
  const Series g = Series::geometric(1, 4) - Series::constant(1, 4);
  EXPECT_EQ(series_compose(S({1, 1}, 4), g), Series::geometric(1, 4));
}

TEST(SeriesCompose, ConstantComposition) {
  EXPECT_EQ(series_compose(Series::exponential(1, 4), Series::zero(4)), Series::constant(1, 4));
}

TEST(SeriesCompose, MoebiusPairOracle) {
  // x/(1-x) = x + x^2 + ... and x/(1+x) = x - x^2 + x^3 - ... written out by hand
  const Series f = S({0, 1, 1, 1, 1, 1}, 5);
  const Series g = S({0, 1, -1, 1, -1, 1}, 5);
  // a(g) for a = sum c_k x^k, expanding g^k by schoolbook powers
  std::vector<Rational> expect(6);
  for (int k = 0; k <= 5; ++k) {
    const auto gk = naive_pow(g.coeffs(), k, 5);
    for (int i = 0; i <= 5; ++i) expect[i] += f[k] * gk[i];
  }
  EXPECT_EQ(series_compose(f, g).coeffs(), expect);
  EXPECT_EQ(series_compose(f, g), Series::x(5));
}

TEST(SeriesCompose, RejectsNonzeroConstantTerm) {
  try {
    series_compose(S({1, 1}, 3), S({1, 1}, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonzeroConstantTerm);
  }
}

TEST(SeriesInv, Geometric) {
  EXPECT_EQ(series_inv(S({1, -1}, 5)), S({1, 1, 1, 1, 1, 1}, 5));
  EXPECT_EQ(series_inv(S({1, 1}, 5)), S({1, -1, 1, -1, 1, -1}, 5));
}

TEST(SeriesInv, TrinomialTriangularSolveOracle) {
  // b_0 = 1, b_k = -(b_{k-1} + b_{k-2})
  std::vector<Rational> b{1};
  for (int k = 1; k <= 4; ++k) b.push_back(-(b[k - 1] + (k >= 2 ? b[k - 2] : Rational(0))));
  EXPECT_EQ(series_inv(S({1, 1, 1}, 4)).coeffs(), b);
  EXPECT_EQ(series_inv(S({1, 1, 1}, 4)), S({1, -1, 0, 1, -1}, 4));
}

TEST(SeriesInv, ZeroConstantTermRejected) {
  EXPECT_THROW(series_inv(S({0, 1}, 3)), Error);
}

TEST(SeriesLog, OfOneIsZero) { EXPECT_EQ(series_log(Series::constant(1, 5)), Series::zero(5)); }

TEST(SeriesLog, RatioOfLinearOracle) {
  // log(1+x) - log(1-x): coefficients (-1)^{k+1}/k + 1/k
  std::vector<Rational> expect(4);
  for (int k = 1; k <= 3; ++k) expect[k] = Rational(k % 2 == 1 ? 1 : -1) / k + Rational(1) / k;
  const Series a = S({1, 1}, 3) * series_inv(S({1, -1}, 3));
  EXPECT_EQ(series_log(a).coeffs(), expect);
  EXPECT_EQ(series_log(a)[3], R("2/3"));
}

TEST(SeriesLog, TwiceArcsinhOracle) {
  // log a = 2 arcsinh(x/2); arcsinh(y) = y - y^3/6 + ..., y = x/2
  const Rational y1 = R("1/2"), y3 = R("1/8");
  const Series root = series_pow(Series::constant(1, 3) + R("1/4") * S({0, 0, 1}, 3), R("1/2"));
  const Series a = series_pow(R("1/2") * Series::x(3) + root, 2);
  EXPECT_EQ(a, Series({1, 1, R("1/2"), R("1/8")}, 3));
  const Series l = series_log(a);
  EXPECT_EQ(l, Series({0, 2 * y1, 0, 2 * (-y3 / 6)}, 3));
  EXPECT_EQ(l[3], R("-1/24"));
}

TEST(SeriesLog, RequiresUnitConstant) {
  try {
    series_log(S({2, 1}, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ConstantTermNotOne);
  }
}

TEST(SeriesExp, Basics) {
  EXPECT_EQ(series_exp(Series::zero(4)), Series::constant(1, 4));
  EXPECT_EQ(series_exp(Series::x(4)), Series::exponential(1, 4));
  EXPECT_EQ(series_exp(Series::x(4)), Series({1, 1, R("1/2"), R("1/6"), R("1/24")}, 4));
  const Series a = S({1, 3, 1}, 6);
  EXPECT_EQ(series_exp(series_log(a)), a);
  EXPECT_THROW(series_exp(S({1, 1}, 3)), Error);
}

TEST(SeriesPow, SquareRootOfOnePlusX) {
  EXPECT_EQ(series_pow(S({1, 1}, 2), R("1/2")), Series({1, R("1/2"), R("-1/8")}, 2));
}

TEST(SeriesPow, ZeroAndRoundTrip) {
  Sampler rng(3);
  const Series a = rng.series(6, Rational(1));
  EXPECT_EQ(series_pow(a, 0), Series::constant(1, 6));
  EXPECT_EQ(series_pow(series_pow(S({1, 1}, 6), R("1/3")), 3), S({1, 1}, 6));
}

TEST(SeriesPow, IntegerPowersWithArbitraryConstant) {
  const Series a = S({2, 1}, 5);
  EXPECT_EQ(series_pow(a, 3).coeffs(), naive_pow(a.coeffs(), 3, 5));
  EXPECT_EQ(series_pow(a, -2) * series_pow(a, 2), Series::constant(1, 5));
  EXPECT_THROW(series_pow(a, R("1/2")), Error);
}

TEST(SeriesCompInverse, MoebiusPair) {
  const Series g = Series::geometric(1, 6) - Series::constant(1, 6);
  EXPECT_EQ(series_comp_inverse(g), S({0, 1, -1, 1, -1, 1, -1}, 6));
}

TEST(SeriesCompInverse, LagrangeInversionOracle) {
  // h_n = (1/n) [x^{n-1}] (1+x)^{-n}, expanded with binomials C(-n, n-1)
  const int N = 4;
  std::vector<Rational> h(N + 1);
  for (int n = 1; n <= N; ++n) {
    const int k = n - 1;
    Rational c = 1;  // C(-n, k) = (-1)^k C(n+k-1, k)
    c = (k % 2 ? -1 : 1) * choose(n + k - 1, k);
    h[n] = c / n;
  }
  EXPECT_EQ(series_comp_inverse(S({0, 1, 1}, N)).coeffs(), h);
  EXPECT_EQ(series_comp_inverse(S({0, 1, 1}, N)), S({0, 1, -1, 2, -5}, N));
}

TEST(SeriesCompInverse, ExampleTwoShape) {
  // b = (1+x)^{1/2}, g = x/2 + sqrt(1 + x^2/4): the inverse of x g(x) is x b^{-1}(x)
  const int N = 6;
  const Series b = series_pow(S({1, 1}, N), R("1/2"));
  const Series g = R("1/2") * Series::x(N) + series_pow(S({1, 0, 0}, N) + R("1/4") * S({0, 0, 1}, N), R("1/2"));
  const Series xg = g.times_x().truncated(N);
  const Series xbinv = series_inv(b).times_x().truncated(N);
  EXPECT_EQ(series_compose(xg, xbinv), Series::x(N));
  EXPECT_EQ(series_comp_inverse(xg), xbinv);
}

TEST(SeriesCompInverse, Rejects) {
  EXPECT_THROW(series_comp_inverse(S({0, 0, 1}, 4)), Error);
  EXPECT_THROW(series_comp_inverse(S({1, 1}, 4)), Error);
}

class SeriesProperties : public ::testing::TestWithParam<int> {};

TEST_P(SeriesProperties, RingAxioms) {
  Sampler rng(1000 + GetParam());
  const int n = static_cast<int>(rng.integer(0, 12));
  const Series a = rng.series(n), b = rng.series(n), c = rng.series(n);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ(a * b, b * a);
}

TEST_P(SeriesProperties, LogExpInverse) {
  Sampler rng(2000 + GetParam());
  const int n = static_cast<int>(rng.integer(1, 12));
  const Series a = rng.series(n, Rational(1));
  const Series z = rng.series(n, Rational(0));
  EXPECT_EQ(series_exp(series_log(a)), a);
  EXPECT_EQ(series_log(series_exp(z)), z);
}

TEST_P(SeriesProperties, PowerAddsExponents) {
  Sampler rng(3000 + GetParam());
  const int n = static_cast<int>(rng.integer(1, 10));
  const Series a = rng.series(n, Rational(1));
  const Rational p = rng.rational(), r = rng.rational();
  EXPECT_EQ(series_pow(a, p + r), series_pow(a, p) * series_pow(a, r));
  EXPECT_EQ(series_pow(a, p), series_exp(p * series_log(a)));
}

TEST_P(SeriesProperties, CompositionAssociative) {
  Sampler rng(4000 + GetParam());
  const int n = static_cast<int>(rng.integer(1, 9));
  const Series a = rng.series(n), g = rng.series(n, Rational(0)), h = rng.series(n, Rational(0));
  EXPECT_EQ(series_compose(series_compose(a, g), h), series_compose(a, series_compose(g, h)));
}

TEST_P(SeriesProperties, CompositionalInverseRoundTrip) {
  Sampler rng(5000 + GetParam());
  const int n = static_cast<int>(rng.integer(1, 10));
  const Series g = rng.delta_series(n);
  const Series h = series_comp_inverse(g);
  EXPECT_EQ(series_compose(h, g), Series::x(n));
  EXPECT_EQ(series_compose(g, h), Series::x(n));
}

INSTANTIATE_TEST_SUITE_P(Seeded, SeriesProperties, ::testing::Range(0, 20));

#include "supercat/series.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "supercat/bivariate.hpp"
#include "supercat/counting.hpp"

using namespace supercat;

namespace {

IntSeries random_series(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<BigInt> cs;
  for (int i = 0; i <= order; ++i) cs.emplace_back(coeff(rng));
  return IntSeries(cs);
}

TruncSeries x_poly(std::vector<long long> cs, int t_order) {
  std::vector<BigRat> xs(cs.begin(), cs.end());
  return TruncSeries::from_x_coefficients(xs, t_order);
}

}  // namespace

TEST(SeriesTest, OrderBookkeeping) {
  EXPECT_EQ(t_order_for_x(0), 1);
  EXPECT_EQ(t_order_for_x(30), 61);
  const IntSeries a(10), b(7);
  EXPECT_EQ((a * b).order(), 7);
  EXPECT_EQ((a + b).order(), 7);
  EXPECT_EQ(a.shifted_up(3).order(), 13);
  EXPECT_EQ(IntSeries::monomial(3, 10).shifted_down(2).order(), 8);
  EXPECT_THROW(IntSeries::monomial(1, 10).shifted_down(2), DomainError);
  EXPECT_THROW(a[11], DomainError);
  EXPECT_THROW(b.truncated(8), DomainError);
}

TEST(SeriesTest, SmallProducts) {
  const IntSeries t = IntSeries::monomial(1, 10);
  EXPECT_EQ(t * t, IntSeries::monomial(2, 10));
  const IntSeries one = IntSeries::constant(1, 10);
  EXPECT_EQ((one + t) * (one - t), one - IntSeries::monomial(2, 10));
}

TEST(SeriesTest, Inversion) {
  const IntSeries one = IntSeries::constant(1, 12);
  const IntSeries geometric = invert(one - IntSeries::monomial(1, 12));
  for (int k = 0; k <= 12; ++k) EXPECT_EQ(geometric[k], 1);
  EXPECT_THROW(invert(IntSeries::monomial(1, 5)), NotInvertibleError);
  EXPECT_THROW(invert(IntSeries::constant(2, 5)), NotInvertibleError);
  EXPECT_EQ(invert(TruncSeries::constant(2, 5))[0], BigRat(1, 2));
}

TEST(SeriesTest, RingAxiomsOnRandomSeries) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int order = 4 + trial % 13;
    const IntSeries a = random_series(rng, order), b = random_series(rng, order), c = random_series(rng, order);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b - b, a);
    const IntSeries one = IntSeries::constant(1, order);
    const IntSeries u = one + a.shifted_up(1).truncated(order);
    ASSERT_EQ(u * invert(u), one);
  }
}

TEST(SeriesTest, CatalanFunctionalEquation) {
  const int N = 25;
  const TruncSeries c = catalan_series(N);
  const int T = c.order();
  EXPECT_EQ(c.x_coefficient(4), BigRat(14));
  const TruncSeries x = TruncSeries::monomial(2, T);
  EXPECT_EQ(c, TruncSeries::constant(1, T) + x * c * c);
}

TEST(SeriesTest, CatalanFromSquareRoot) {
  // c = (1 - sqrt(1 - 4x)) / (2x)
  const int N = 20;
  const TruncSeries root = binomial_pow(BigRat(1, 2), -4, N + 1);
  const TruncSeries c = BigRat(1, 2) * (TruncSeries::constant(1, root.order()) - root).shifted_down(2);
  EXPECT_EQ(c.truncated(t_order_for_x(N)), catalan_series(N));
}

TEST(SeriesTest, BinomialPowMatchesIntegerPower) {
  const int N = 20;
  const TruncSeries r = binomial_pow(BigRat(5, 2), -4, N);
  // (1 - 4x)^5 by repeated polynomial multiplication.
  TruncSeries five = TruncSeries::constant(1, r.order());
  for (int i = 0; i < 5; ++i) five = five * x_poly({1, -4}, r.order());
  EXPECT_EQ(r * r, five);
  EXPECT_EQ(five.x_coefficient(5), BigRat(-1024));
  EXPECT_EQ(binomial_pow(BigRat(1), 1, 3), x_poly({1, 1}, 7));
}

TEST(SeriesTest, CatalanGeneralizedBinomialForm) {
  for (int n = 0; n <= 15; ++n) {
    const BigRat value = BigRat(1, 2) * (n % 2 == 0 ? 1 : -1) * BigRat(pow_int(4, static_cast<unsigned>(n + 1))) *
                         binomial(BigRat(1, 2), n + 1);
    EXPECT_EQ(value, BigRat(catalan(n))) << "n=" << n;
  }
}

TEST(SeriesTest, SubstitutionIdentities) {
  const int N = 20;
  const IntSeries C = C_series<BigInt>(N);
  const int T = C.order();
  const IntSeries one = IntSeries::constant(1, T);
  EXPECT_EQ(C[0], 0);
  // x = C / (1 + C)^2
  const IntSeries d = invert(one + C);
  EXPECT_EQ(C * d * d, IntSeries::monomial(2, T));
  // sqrt(x) = sqrt(C) / (1 + C)
  const IntSeries sc = sqrt_C_series<BigInt>(T);
  EXPECT_EQ(sc * sc, C);
  EXPECT_EQ(sc * d, IntSeries::monomial(1, T));
}

TEST(SeriesTest, InverseOfOneMinusC) {
  // Brute-force oracle: sum over compositions of Catalan products.
  const std::vector<long long> expected{1, 1, 3, 10, 35, 126, 462, 1716, 6435, 24310, 92378};
  const IntSeries C = C_series<BigInt>(10);
  const IntSeries s = invert(IntSeries::constant(1, C.order()) - C);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(s.x_coefficient(n), expected[static_cast<std::size_t>(n)]) << "n=" << n;
}

TEST(SeriesTest, ParityAndMismatch) {
  const IntSeries c = catalan_series<BigInt>(8);
  EXPECT_TRUE(has_parity(c, 0));
  EXPECT_FALSE(has_parity(c, 1));
  EXPECT_TRUE(has_parity(sqrt_C_series<BigInt>(17), 1));
  IntSeries other = c;
  EXPECT_FALSE(first_mismatch(c, other));
  other += IntSeries::monomial(6, c.order());
  EXPECT_EQ(first_mismatch(c, other), 6);
}

TEST(SeriesTest, Determinism) {
  EXPECT_EQ(binomial_pow(BigRat(5, 2), -4, 30), binomial_pow(BigRat(5, 2), -4, 30));
  EXPECT_EQ(invert(catalan_series(30)), invert(catalan_series(30)));
}

TEST(BiSeriesTest, GeometricInverse) {
  BiTrunc a(8);
  a.at(0, 0) = 1;
  a.at(1, 1) = -1;
  const BiTrunc inv = bi_invert(a);
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; i + j <= 8; ++j) EXPECT_EQ(inv.at(i, j), BigRat(i == j ? 1 : 0)) << i << "," << j;
  }
  BiTrunc zero(3);
  EXPECT_THROW(bi_invert(zero), NotInvertibleError);
  BiSeries<BigInt> two(3);
  two.at(0, 0) = 2;
  EXPECT_THROW(bi_invert(two), NotInvertibleError);
}

TEST(BiSeriesTest, ProductPropertiesOnRandomInputs) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 3 + trial % 6;
    BiSeries<BigInt> a(d), b(d);
    for (int i = 0; i <= d; ++i) {
      for (int j = 0; i + j <= d; ++j) {
        a.at(i, j) = coeff(rng);
        b.at(i, j) = coeff(rng);
      }
    }
    a.at(0, 0) = 1;
    ASSERT_EQ(a * b, b * a);
    BiSeries<BigInt> one(d);
    one.at(0, 0) = 1;
    ASSERT_EQ(a * bi_invert(a), one);
    ASSERT_FALSE(first_mismatch(a * b, b * a));
  }
}

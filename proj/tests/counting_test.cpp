#include "supercat/counting.hpp"

#include <vector>

#include "gtest/gtest.h"
#include "supercat/lattice_paths.hpp"

using namespace supercat;

TEST(CatalanTest, Values) {
  EXPECT_EQ(catalan(0), 1);
  EXPECT_EQ(catalan(4), 14);
  EXPECT_EQ(catalan(10), 16796);
  EXPECT_THROW(catalan(-1), DomainError);
}

TEST(CatalanTest, LargeIndexIsExact) {
  // C_100 = 896519947090131496687170070074100632420837521538745909320
  EXPECT_EQ(catalan(100).str(), "896519947090131496687170070074100632420837521538745909320");
}

TEST(SuperCatalanTest, TableValues) {
  const std::vector<int> row2{3, 2, 3, 6, 14, 36, 99, 286, 858, 2652, 8398};
  const std::vector<int> row3{10, 5, 6, 10, 20, 45, 110, 286, 780, 2210, 6460};
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(super_catalan(2, n), row2[static_cast<std::size_t>(n)]) << "n=" << n;
    EXPECT_EQ(super_catalan(3, n), row3[static_cast<std::size_t>(n)]) << "n=" << n;
  }
  EXPECT_EQ(super_catalan(2, 5), 36);
  EXPECT_EQ(super_catalan(3, 0), 10);
  EXPECT_EQ(super_catalan(7, 3), 286);
}

TEST(SuperCatalanTest, Errors) {
  EXPECT_THROW(super_catalan(0, 0), NonIntegralError);
  EXPECT_THROW(super_catalan(-1, 2), DomainError);
  EXPECT_THROW(super_catalan(2, -1), DomainError);
}

TEST(SuperCatalanTest, SymmetryAndSpecialRows) {
  for (int m = 0; m <= 12; ++m) {
    for (int n = 0; n <= 12; ++n) {
      if (m == 0 && n == 0) continue;
      EXPECT_EQ(super_catalan(m, n), super_catalan(n, m)) << m << "," << n;
    }
  }
  for (int n = 0; n <= 15; ++n) {
    EXPECT_EQ(super_catalan(1, n), catalan(n));
    if (n > 0) {
      EXPECT_EQ(2 * super_catalan(0, n), central_binomial(n));
    }
  }
}

TEST(CountTableTest, RecurrenceAndBoundary) {
  const CountTable t(3, 10);
  EXPECT_EQ(t.at(0, 0), 1);
  for (int j = 1; j <= 3; ++j) EXPECT_EQ(t.at(0, j), 0);
  for (int s = 1; s <= 10; ++s) {
    for (int j = 0; j <= 3; ++j) EXPECT_EQ(t.at(s, j), t.at(s - 1, j - 1) + t.at(s - 1, j + 1));
  }
  EXPECT_EQ(t.at(10, 4), 0);
  EXPECT_EQ(t.at(11, 0), 0);
}

TEST(CountBallotDpTest, Examples) {
  EXPECT_EQ(count_ballot_dp(PathClass::at_most(2, 0), 8), 8);
  EXPECT_EQ(count_ballot_dp(PathClass::at_most(0, 0), 0), 1);
  EXPECT_EQ(count_ballot_dp(PathClass::exactly(2, 2), 4), 2);
  EXPECT_EQ(count_ballot_dp(PathClass::unbounded(0), 16), catalan(8));
  EXPECT_EQ(count_ballot_dp(PathClass::at_most(-1, 0), 0), 0);
  EXPECT_EQ(count_ballot_dp(PathClass::at_most(-2, 0), 4), 0);
}

TEST(CountBallotDpTest, AgreesWithEnumeration) {
  for (int h = -2; h <= 6; ++h) {
    for (int end = 0; end <= 5; ++end) {
      for (int steps = 0; steps <= 14; ++steps) {
        for (const auto& cls : {PathClass::at_most(h, end), PathClass::exactly(h, end)}) {
          ASSERT_EQ(count_ballot_dp(cls, steps), BigInt(enumerate_ballot(cls, steps).size()))
              << "h=" << h << " end=" << end << " steps=" << steps;
        }
      }
    }
  }
}

TEST(CountPathsDpTest, NonzeroStartLevel) {
  // Paths from level 1 to level 2 with height <= 3, by brute force.
  const std::vector<int> expected{0, 1, 0, 3, 0, 8, 0, 21, 0, 55, 0, 144, 0, 377};
  for (int s = 0; s < static_cast<int>(expected.size()); ++s) {
    EXPECT_EQ(count_paths_dp(1, 2, 3, s), expected[static_cast<std::size_t>(s)]) << "s=" << s;
  }
  EXPECT_EQ(count_paths_dp(4, 0, 3, 4), 0);
}

TEST(PairCountTest, HeightDifferenceAtMostOne) {
  EXPECT_EQ(count_pairs_height_diff(1, 1), 2);
  EXPECT_EQ(count_pairs_height_diff(2, 1), 3);
  EXPECT_EQ(count_pairs_height_diff(4, 1), 14);
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(count_pairs_height_diff(n, 1), 4 * catalan(n) - catalan(n + 1)) << "n=" << n;
  }
}

TEST(PairCountTest, OtherDifferenceBounds) {
  // Brute-force values for d = 0 and d = 2, n = 0..8.
  const std::vector<int> d0{1, 0, 1, 2, 4, 10, 29, 88, 270};
  const std::vector<int> d2{1, 2, 5, 12, 30, 78, 211, 594, 1736};
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(count_pairs_height_diff(n, 0), d0[static_cast<std::size_t>(n)]);
    EXPECT_EQ(count_pairs_height_diff(n, 2), d2[static_cast<std::size_t>(n)]);
  }
  EXPECT_THROW(count_pairs_height_diff(-1, 1), DomainError);
}

TEST(PairCountTest, ESet) {
  EXPECT_EQ(count_E_set(0), 0);
  EXPECT_EQ(count_E_set(1), 1);
  EXPECT_EQ(count_E_set(2), 2);
  EXPECT_EQ(count_E_set(6), 132);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(count_E_set(n), catalan(n)) << "n=" << n;
}

TEST(PairCountTest, FSet) {
  EXPECT_EQ(count_F_set(0), 1);
  EXPECT_EQ(count_F_set(1), 2);
  EXPECT_EQ(count_F_set(3), 10);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(count_F_set(n), 2 * catalan(n)) << "n=" << n;
}

TEST(PairCountTest, InclusionExclusionReplay) {
  for (int n = 1; n <= 8; ++n) {
    const BigInt f = count_F_set(n);
    const BigInt g = detail::count_dyck_pairs(n, true, [](int hp, int hq) { return hq <= hp + 1; });
    const BigInt both = count_all_pairs(n);
    EXPECT_EQ(g, f) << "swap symmetry, n=" << n;
    EXPECT_EQ(both, catalan(n + 1)) << "UPDQ bijection, n=" << n;
    EXPECT_EQ(f + g - both, count_pairs_height_diff(n, 1)) << "n=" << n;
  }
}

#include "jkprove/twist_tables.hpp"

#include <gtest/gtest.h>

#include <map>

#include "jkprove/jk_sequence.hpp"
#include "oracles.hpp"

namespace jkprove {
namespace {

TEST(TwistTables, SelectTwistRows) {
  const TwistChoice two = select_twist(2);
  EXPECT_EQ(two.a, -1);
  EXPECT_EQ(two.x0, 1);
  EXPECT_EQ(two.y0, 8);
  EXPECT_EQ(two.row, TwistRow::kMod3Is0Or2);

  const TwistChoice fortynine = select_twist(49);
  EXPECT_EQ(fortynine.a, -17);
  EXPECT_EQ(fortynine.x0, 81);
  EXPECT_EQ(fortynine.y0, 440);

  EXPECT_EQ(select_twist(10).a, -6);
  EXPECT_EQ(select_twist(4).a, -5);
  EXPECT_EQ(select_twist(25).a, -111);
  EXPECT_EQ(select_twist(25).x0, -633);

  EXPECT_THROW(select_twist(8), std::invalid_argument);
  EXPECT_THROW(select_twist(30), std::invalid_argument);
  EXPECT_THROW(select_twist(1), std::invalid_argument);
  EXPECT_THROW(select_twist(0), std::invalid_argument);
}

TEST(TwistTables, PublishedTwistsOfPrimes) {
  // (k, a) pairs from the table of prime J_k
  const std::map<Index, int> published{{2, -1},    {3, -1},   {4, -5},    {5, -1},   {7, -5},
                                       {10, -6},   {28, -5},  {49, -17},  {100, -5}, {109, -5},
                                       {235, -17}, {643, -17}, {1129, -17}, {2734, -5}, {7729, -111}};
  for (const auto& [k, a] : published) EXPECT_EQ(select_twist(k).a, a) << "k=" << k;
}

TEST(TwistTables, RowsPartitionAdmissibleIndices) {
  for (Index k = 2; k <= 10000; ++k) {
    if (forced_composite(k)) continue;
    int matches = 0;
    const auto r3 = k % 3, r24 = k % 24, r72 = k % 72;
    matches += (r3 == 0 || r3 == 2);
    matches += (r24 == 4 || r24 == 7 || r24 == 13 || r24 == 22);
    matches += (r24 == 10);
    matches += (r72 == 1 || r72 == 19 || r72 == 49 || r72 == 67);
    matches += (r72 == 25 || r72 == 43);
    ASSERT_EQ(matches, 1) << "k=" << k;
    ASSERT_NO_THROW(select_twist(k));
  }
}

TEST(TwistTables, PointsLieOnTheirCurves) {
  for (int a : kTwists) {
    const TwistChoice choice = twist_for(a);
    const BigInt x(choice.x0), y(choice.y0), aa(a);
    EXPECT_EQ(y * y, x * x * x - 35 * aa * aa * x - 98 * aa * aa * aa) << "a=" << a;
  }
  EXPECT_THROW(twist_for(-2), std::invalid_argument);
}

TEST(TwistTables, JacobiAgainstBruteForce) {
  EXPECT_EQ(jacobi_symbol(BigInt(5), BigInt(11)), 1);
  EXPECT_EQ(jacobi_symbol(BigInt(0), BigInt(1)), 1);
  EXPECT_EQ(jacobi_symbol(BigInt(3), BigInt(9)), 0);
  for (long n = 1; n <= 301; n += 2)
    for (long m = -60; m <= 60; ++m)
      ASSERT_EQ(jacobi_symbol(BigInt(m), BigInt(n)), testing::brute_jacobi(m, n))
          << "m=" << m << " n=" << n;
  EXPECT_THROW(jacobi_symbol(BigInt(3), BigInt(8)), std::invalid_argument);
  EXPECT_THROW(jacobi_symbol(BigInt(3), BigInt(-7)), std::invalid_argument);
  EXPECT_THROW(jacobi_symbol(BigInt(3), BigInt(0)), std::invalid_argument);
}

TEST(TwistTables, JacobiAgainstGmpOnLargeInputs) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(7);
  for (int i = 0; i < 500; ++i) {
    BigInt n = rng.get_z_bits(512) | 1;
    BigInt m = rng.get_z_bits(600) - rng.get_z_bits(600);
    ASSERT_EQ(jacobi_symbol(m, n), mpz_jacobi(m.get_mpz_t(), n.get_mpz_t()));
  }
}

TEST(TwistTables, JacobiOfSmallUnitsModJk) {
  for (Index k = 2; k <= 50; ++k) {
    const BigInt j = jk_closed(k).value;
    EXPECT_EQ(jacobi_symbol(BigInt(-1), j), -1) << k;
    if (k >= 3) EXPECT_EQ(jacobi_symbol(BigInt(2), j), k % 2 == 1 ? 1 : -1) << k;
  }
}

TEST(TwistTables, ChiSqrtMinusSeven) {
  EXPECT_EQ(chi_sqrt_minus7(4), 1);
  EXPECT_EQ(chi_sqrt_minus7(3), -1);
  EXPECT_EQ(chi_sqrt_minus7(7), 1);
  EXPECT_EQ(chi_sqrt_minus7(2), -1);
}

TEST(TwistTables, SMembershipExamples) {
  EXPECT_TRUE(s_membership(-1, 2));
  EXPECT_FALSE(s_membership(-1, 4));
  EXPECT_TRUE(s_membership(-5, 5));
  EXPECT_THROW(s_membership(-2, 5), std::invalid_argument);
  EXPECT_THROW(s_membership(-1, 1), std::invalid_argument);
}

TEST(TwistTables, SRecomputationMatchesTable) {
  for (int a : kTwists)
    for (Index k = 2; k <= 2 * 144; ++k) {
      // (a / J_k) is 0 only if J_k shares a factor with a; the table excludes those k
      if (jacobi_symbol(BigInt(a), jk_closed(k).value) == 0) continue;
      ASSERT_EQ(s_membership(a, k), s_table_membership(a, k)) << "a=" << a << " k=" << k;
    }
}

TEST(TwistTables, TMembershipExamples) {
  EXPECT_TRUE(t_membership(-1, 1000));
  EXPECT_FALSE(t_membership(-111, 4));
  EXPECT_TRUE(t_membership(-5, 3));
  EXPECT_TRUE(t_membership(-17, 77));
  EXPECT_FALSE(t_membership_from_characters(-6, 10).has_value());
}

TEST(TwistTables, TRecomputationMatchesTable) {
  for (int a : {-1, -5, -17, -111})
    for (Index k = 2; k <= 200; ++k) {
      if (jacobi_symbol(BigInt(a == -111 ? -3 : a), jk_closed(k).value) == 0) continue;
      const auto computed = t_membership_from_characters(a, k);
      ASSERT_TRUE(computed.has_value());
      ASSERT_EQ(*computed, t_membership(a, k)) << "a=" << a << " k=" << k;
    }
}

TEST(TwistTables, ChosenRowLiesInSAndT) {
  for (Index k = 2; k <= 2000; ++k) {
    if (forced_composite(k)) continue;
    const int a = select_twist(k).a;
    ASSERT_TRUE(s_table_membership(a, k)) << "k=" << k;
    ASSERT_TRUE(t_membership(a, k)) << "k=" << k;
    if (k <= 400) ASSERT_TRUE(s_membership(a, k)) << "k=" << k;
  }
}

TEST(TwistTables, TableModuli) {
  EXPECT_EQ(s_table(-1).modulus, 3u);
  EXPECT_EQ(s_table(-5).modulus, 24u);
  EXPECT_EQ(s_table(-6).modulus, 24u);
  EXPECT_EQ(s_table(-17).modulus, 144u);
  EXPECT_EQ(s_table(-111).modulus, 72u);
  EXPECT_EQ(t_table(-111).modulus, 8u);
  for (int a : kTwists) {
    const auto s = s_table(a);
    EXPECT_TRUE(std::is_sorted(s.residues.begin(), s.residues.end()));
    for (auto r : s.residues) EXPECT_LT(r, s.modulus);
  }
}

}  // namespace
}  // namespace jkprove

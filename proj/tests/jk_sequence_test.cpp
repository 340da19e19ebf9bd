#include "jkprove/jk_sequence.hpp"

#include <gtest/gtest.h>

#include "jkprove/quad_ring.hpp"
#include "oracles.hpp"

namespace jkprove {
namespace {

TEST(JkSequence, ClosedForm) {
  EXPECT_EQ(jk_closed(1).value, 11);
  EXPECT_EQ(jk_closed(5).value, 151);
  EXPECT_EQ(jk_closed(6).value, 275);
  EXPECT_EQ(jk_closed(17).value, 524087);
  EXPECT_EQ(jk_closed(18).value, 1046579);
  EXPECT_EQ(jk_closed(17).k, 17);
  EXPECT_THROW(jk_closed(0), std::invalid_argument);
}

TEST(JkSequence, StreamMatchesRecurrenceSeeds) {
  const auto values = jk_stream(11);
  ASSERT_EQ(values.size(), 11u);
  for (std::size_t i = 0; i < values.size(); ++i) {
    EXPECT_EQ(values[i].k, static_cast<Index>(i + 1));
    EXPECT_EQ(values[i].value, testing::kFirstJ[i]);
  }
  EXPECT_EQ(values[4].value, 4 * 67 - 7 * 23 + 8 * 11 - 4 * 11);
  EXPECT_EQ(values[10].value, 11 * 757);
}

TEST(JkSequence, ThreeRoutesAgree) {
  const auto streamed = jk_stream(64);
  for (Index k = 1; k <= 64; ++k) {
    const BigInt closed = jk_closed(k).value;
    ASSERT_EQ(streamed[static_cast<std::size_t>(k - 1)].value, closed) << "k=" << k;
    ASSERT_EQ(norm(jk_element(k)), closed) << "k=" << k;
  }
}

TEST(JkSequence, ValuesAreOddAndPrimeToSeven) {
  for (const auto& jk : jk_stream(300)) {
    ASSERT_TRUE(mpz_odd_p(jk.value.get_mpz_t()));
    ASSERT_NE(mpz_fdiv_ui(jk.value.get_mpz_t(), 7), 0u);
  }
}

TEST(JkSequence, ResidueModEight) {
  for (const auto& jk : jk_stream(200)) {
    if (jk.k == 1) continue;
    const unsigned long r = mpz_fdiv_ui(jk.value.get_mpz_t(), 8);
    EXPECT_EQ(r, jk.k % 2 == 0 ? 3u : 7u) << "k=" << jk.k;
  }
}

TEST(JkSequence, WindowDeterminant) {
  const auto j = jk_stream(7);
  std::vector<std::vector<mpz_class>> a(4, std::vector<mpz_class>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t c = 0; c < 4; ++c) a[i][c] = j[i + c].value;  // A_{i,j} = J_{i+j-1}
  EXPECT_EQ(testing::determinant(a), -4096 * 7);
}

TEST(JkSequence, ModStreamSpecialPrimes) {
  const auto mod7 = jk_mod_stream(7, 60);
  for (Index k = 1; k <= 60; ++k) EXPECT_EQ(mod7[k - 1], k % 3 == 0 ? 2u : 4u) << k;
  const auto mod3 = jk_mod_stream(3, 100);
  for (Index k = 1; k <= 100; ++k) EXPECT_EQ(mod3[k - 1] == 0, k % 8 == 0) << k;
  const auto mod5 = jk_mod_stream(5, 100);
  for (Index k = 1; k <= 100; ++k) EXPECT_EQ(mod5[k - 1] == 0, k % 24 == 6) << k;
  const auto mod17 = jk_mod_stream(17, 300);
  for (Index k = 1; k <= 300; ++k) EXPECT_EQ(mod17[k - 1] == 0, k % 144 == 54) << k;
  for (auto r : jk_mod_stream(37, 200)) EXPECT_NE(r, 0u);
}

TEST(JkSequence, ModStreamZerosOfEleven) {
  const auto mod11 = jk_mod_stream(11, 20);
  std::vector<Index> zeros;
  for (Index k = 1; k <= 20; ++k)
    if (mod11[k - 1] == 0) zeros.push_back(k);
  EXPECT_EQ(zeros, (std::vector<Index>{1, 2, 6, 11, 12, 16}));
  for (Index k = 1; k <= 20; ++k)
    EXPECT_EQ(mpz_divisible_ui_p(jk_closed(k).value.get_mpz_t(), 11) != 0, mod11[k - 1] == 0);
}

TEST(JkSequence, ModStreamMatchesExactValues) {
  const auto exact = jk_stream(1000);
  for (std::uint64_t ell = 3; ell <= 100; ell += 2) {
    if (!testing::is_small_prime(ell)) continue;
    const auto residues = jk_mod_stream(ell, 1000);
    for (std::size_t i = 0; i < exact.size(); ++i)
      ASSERT_EQ(residues[i], mpz_fdiv_ui(exact[i].value.get_mpz_t(), ell)) << "ell=" << ell;
  }
}

TEST(JkSequence, ModStreamRejectsEvenModulus) {
  EXPECT_THROW(jk_mod_stream(2, 10), std::invalid_argument);
  EXPECT_THROW(jk_mod_stream(10, 10), std::invalid_argument);
  EXPECT_THROW(JkModStream(1), std::invalid_argument);
}

TEST(JkSequence, StreamIndexAdvances) {
  JkModStream stream(13);
  EXPECT_EQ(stream.index(), 0);
  EXPECT_EQ(stream.next(), 11u);
  EXPECT_EQ(stream.index(), 1);
}

TEST(JkSequence, KnownPeriods) {
  EXPECT_EQ(period_mod(3), 8u);
  EXPECT_EQ(period_mod(5), 24u);
  EXPECT_EQ(period_mod(7), 3u);
  EXPECT_EQ(find_period(7, 100), 3u);  // the generic search agrees
  EXPECT_EQ(period_mod(17), 144u);
  EXPECT_EQ(period_mod(37), 36u);
  EXPECT_THROW(period_mod(2), std::invalid_argument);
  EXPECT_THROW(period_mod(1), std::invalid_argument);
}

TEST(JkSequence, PeriodDividesGroupOrders) {
  for (std::uint64_t p = 3; p <= 200; p += 2) {
    if (!testing::is_small_prime(p) || p == 7) continue;
    const std::uint64_t m = period_mod(p);
    EXPECT_EQ((p * p - 1) % m, 0u) << "p=" << p;
    if (testing::brute_legendre(-7, static_cast<long>(p)) == 1) EXPECT_EQ((p - 1) % m, 0u) << p;
    // it really is a period of the residues
    const auto residues = jk_mod_stream(p, static_cast<Index>(2 * m + 4));
    for (std::size_t i = 0; i + m < residues.size(); ++i) ASSERT_EQ(residues[i], residues[i + m]);
  }
}

TEST(JkSequence, ForcedComposite) {
  EXPECT_TRUE(forced_composite(8));
  EXPECT_TRUE(forced_composite(30));
  EXPECT_TRUE(forced_composite(6));
  EXPECT_FALSE(forced_composite(7));
  EXPECT_FALSE(forced_composite(18));
  for (Index k = 1; k <= 500; ++k) {
    const BigInt j = jk_closed(k).value;
    const bool by3 = mpz_divisible_ui_p(j.get_mpz_t(), 3) != 0;
    const bool by5 = mpz_divisible_ui_p(j.get_mpz_t(), 5) != 0;
    ASSERT_EQ(forced_composite(k), by3 || by5) << "k=" << k;
  }
}

}  // namespace
}  // namespace jkprove

#include <gtest/gtest.h>

#include "qdepth/beta.hpp"
#include "qdepth/bigint.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace qdepth {
namespace {

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(16, 3), 560);
  EXPECT_EQ(oracle::pascal()(16, 3), 560);
  EXPECT_EQ(binomial(7, -1), 0);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(-2, 1), 0);
}

TEST(Binomial, MatchesPascalTriangle) {
  for (int m = 0; m <= 120; ++m) {
    for (int t = -1; t <= m + 1; ++t) EXPECT_EQ(binomial(m, t), oracle::pascal()(m, t)) << m << " " << t;
  }
}

TEST(Binomial, ExceedsSixtyFourBits) {
  EXPECT_EQ(binomial(100, 50).str(), "100891344545564193334812497256");
}

TEST(Beta, SmallWindowShifted) {
  const Sequence g = shift(fixture::small_window(), -3);
  EXPECT_EQ(beta(g, 1, 3), 2);
  EXPECT_EQ(beta(g, 2, 3), 0);
  EXPECT_EQ(beta(g, 3, 3), 5);
}

TEST(Beta, CubicCounterexample) {
  EXPECT_EQ(beta(Sequence::polynomial({1, 0, 0, 15}), 3, 16), -168);
}

TEST(Beta, BaseEntryIsH0) {
  gen::Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    const Sequence h = gen::any(rng);
    const std::int64_t k0 = h.offset();
    for (std::int64_t d = k0; d <= k0 + 8; ++d) EXPECT_EQ(beta(h, k0, d), h(k0));
  }
}

TEST(Beta, KAboveDIsRejected) { EXPECT_THROW(beta(fixture::small_window(), 3, 2), DomainError); }

TEST(Beta, BelowSupportIsZero) {
  const Sequence h = Sequence::finite(3, {4, 1});
  EXPECT_EQ(beta(h, 2, 5), 0);
}

TEST(BetaTable, SmallWindowShifted) {
  const BetaTable t = beta_table(shift(fixture::small_window(), -3), 3);
  EXPECT_EQ(t.k0, 1);
  EXPECT_EQ(t.entries, (std::vector<BigInt>{2, 0, 5}));
  EXPECT_FALSE(t.first_negative.has_value());
}

TEST(BetaTable, SinglePointAtDepthTwo) {
  for (int b = 1; b <= 9; ++b) {
    const BetaTable t = beta_table(Sequence::finite(0, {b}), 2);
    EXPECT_EQ(t.entries, (std::vector<BigInt>{b, -2 * b, b}));
    ASSERT_TRUE(t.first_negative.has_value());
    EXPECT_EQ(*t.first_negative, 1);
  }
}

TEST(BetaTable, AtK0IsSingleEntry) {
  const Sequence h = Sequence::geometric(4, 3, 2);
  const BetaTable t = beta_table(h, 2);
  EXPECT_EQ(t.entries, (std::vector<BigInt>{4}));
}

TEST(BetaTable, DepthBelowK0IsDomainError) {
  EXPECT_THROW(beta_table(fixture::small_window(), -3), DomainError);
  EXPECT_THROW(beta_table_by_recurrence(fixture::small_window(), -3), DomainError);
}

TEST(BetaTable, FirstNegativeIsSmallestNegativeK) {
  const BetaTable t = beta_table(Sequence::polynomial({1, 0, 0, 15}), 16);
  ASSERT_TRUE(t.first_negative.has_value());
  for (std::int64_t k = t.k0; k < *t.first_negative; ++k) EXPECT_GE(t.at(k), 0);
  EXPECT_LT(t.at(*t.first_negative), 0);
  EXPECT_THROW(t.at(17), DomainError);
}

// beta_k^(d+1) = beta_k^d - beta_(k-1)^d for k0 < k <= d.
TEST(BetaProperty, Recurrence) {
  gen::Rng rng(22);
  for (int i = 0; i < 500; ++i) {
    const Sequence h = gen::any(rng);
    const std::int64_t k0 = h.offset();
    const std::int64_t d = k0 + gen::uniform(rng, 1, 12);
    for (std::int64_t k = k0 + 1; k <= d; ++k) EXPECT_EQ(beta(h, k, d + 1), beta(h, k, d) - beta(h, k - 1, d));
  }
}

// h(k) = sum_{j <= k} C(d - j, k - j) beta_j^d.
TEST(BetaProperty, Reconstruction) {
  gen::Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    const Sequence h = gen::any(rng);
    const std::int64_t k0 = h.offset();
    const std::int64_t d = k0 + gen::uniform(rng, 0, 12);
    const BetaTable t = beta_table(h, d);
    for (std::int64_t k = k0; k <= d; ++k) {
      BigInt sum = 0;
      for (std::int64_t j = k0; j <= k; ++j) sum += oracle::pascal()(d - j, k - j) * t.at(j);
      EXPECT_EQ(sum, h(k));
    }
  }
}

TEST(BetaProperty, DirectAndRecurrencePathsAgree) {
  gen::Rng rng(24);
  for (int i = 0; i < 500; ++i) {
    const Sequence h = gen::any(rng);
    const std::int64_t d = h.offset() + gen::uniform(rng, 0, 15);
    EXPECT_EQ(beta_table(h, d), beta_table_by_recurrence(h, d));
  }
}

TEST(BetaProperty, MatchesDefinitionalSum) {
  gen::Rng rng(25);
  for (int i = 0; i < 300; ++i) {
    const Sequence h = gen::any(rng);
    const std::int64_t k0 = h.offset();
    const std::int64_t d = k0 + gen::uniform(rng, 0, 10);
    auto fn = [&h](std::int64_t j) { return h(j); };
    for (std::int64_t k = k0; k <= d; ++k) EXPECT_EQ(beta(h, k, d), oracle::beta(fn, k0 - 4, k, d));
  }
}

TEST(BetaProperty, AdditiveInH) {
  gen::Rng rng(26);
  for (int i = 0; i < 300; ++i) {
    const Sequence g = gen::finite(rng);
    const Sequence h = gen::finite(rng);
    const Sequence sum = add(g, h);
    const std::int64_t lo = std::min(g.offset(), h.offset());
    for (std::int64_t d = lo; d <= lo + 8; ++d) {
      for (std::int64_t k = lo; k <= d; ++k) EXPECT_EQ(beta(sum, k, d), beta(g, k, d) + beta(h, k, d));
    }
  }
}

TEST(BetaProperty, ShiftCovariance) {
  gen::Rng rng(27);
  for (int i = 0; i < 300; ++i) {
    const Sequence h = gen::any(rng);
    const std::int64_t m = gen::uniform(rng, -5, 5);
    const Sequence g = shift(h, m);
    for (std::int64_t d = g.offset(); d <= g.offset() + 6; ++d) {
      for (std::int64_t k = g.offset(); k <= d; ++k) EXPECT_EQ(beta(g, k, d), beta(h, k + m, d + m));
    }
  }
}

}  // namespace
}  // namespace qdepth

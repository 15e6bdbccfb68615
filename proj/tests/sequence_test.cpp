#include <gtest/gtest.h>

#include "qdepth/beta.hpp"
#include "qdepth/sequence.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace qdepth {
namespace {

TEST(Evaluate, FiniteReadsStoredWindow) {
  const Sequence h = fixture::small_window();
  EXPECT_EQ(h(0), 7);
  EXPECT_EQ(h(-2), 2);
  EXPECT_EQ(h(2), 1);
  EXPECT_EQ(h(-3), 0);
  EXPECT_EQ(h(3), 0);
}

TEST(Evaluate, GeometricIsZeroLeftOfStart) {
  const Sequence h = Sequence::geometric(3, 5);
  EXPECT_EQ(h(-1), 0);
  EXPECT_EQ(h(0), 3);
  EXPECT_EQ(h(3), 375);
}

TEST(Evaluate, PolynomialTail) {
  const Sequence h = Sequence::polynomial({1, 0, 0, 15});
  EXPECT_EQ(h(2), 121);
  EXPECT_EQ(h(3), 406);
  EXPECT_EQ(h(-1), 0);
  EXPECT_EQ(evaluate(h, 0), 1);
}

TEST(Construction, TrimsZerosAndShiftsOffset) {
  const Sequence h = Sequence::finite(-1, {0, 0, 3, 0, 5, 0});
  EXPECT_EQ(h.offset(), 1);
  EXPECT_EQ(h.values(), (std::vector<BigInt>{3, 0, 5}));
  EXPECT_EQ(h, Sequence::finite(1, {3, 0, 5}));
}

TEST(Construction, RejectsInvalidData) {
  EXPECT_THROW(Sequence::finite(0, {0, 0}), SchemaError);
  EXPECT_THROW(Sequence::finite(0, {}), SchemaError);
  EXPECT_THROW(Sequence::finite(0, {1, -1}), SchemaError);
  EXPECT_THROW(Sequence::polynomial({0, 1}), SchemaError);
  EXPECT_THROW(Sequence::polynomial({1, 0}), SchemaError);
  EXPECT_THROW(Sequence::polynomial({}), SchemaError);
  EXPECT_THROW(Sequence::geometric(0, 2), SchemaError);
  EXPECT_THROW(Sequence::geometric(2, 0), SchemaError);
}

TEST(Stats, SmallWindow) {
  const SequenceStats s = stats(fixture::small_window());
  EXPECT_EQ(s.k0, -2);
  EXPECT_EQ(s.k1, -1);
  ASSERT_TRUE(s.kf.has_value());
  EXPECT_EQ(*s.kf, 2);
  EXPECT_EQ(s.h0, 2);
  EXPECT_EQ(s.h1, 4);
  EXPECT_EQ(s.c, 2);
}

TEST(Stats, GeometricRatioIsC) {
  for (int a = 1; a <= 5; ++a) {
    for (int r = 1; r <= 12; ++r) {
      const SequenceStats s = stats(Sequence::geometric(a, r));
      EXPECT_EQ(s.k0, 0);
      EXPECT_FALSE(s.kf.has_value());
      EXPECT_EQ(s.c, r);
    }
  }
}

TEST(Stats, SinglePoint) {
  const SequenceStats s = stats(Sequence::finite(5, {9}));
  EXPECT_EQ(s.k0, 5);
  EXPECT_EQ(*s.kf, 5);
  EXPECT_EQ(s.h0, 9);
  EXPECT_EQ(s.h1, 0);
  EXPECT_EQ(s.c, 0);
}

TEST(Stats, KfStopsBeforeInteriorZero) {
  const SequenceStats s = stats(Sequence::finite(0, {2, 3, 0, 4}));
  EXPECT_EQ(*s.kf, 1);
}

TEST(Shift, MovesK0AndKeepsC) {
  gen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Sequence h = gen::any(rng);
    const std::int64_t m = gen::uniform(rng, -6, 6);
    const Sequence g = shift(h, m);
    const SequenceStats before = stats(h);
    const SequenceStats after = stats(g);
    EXPECT_EQ(after.k0, before.k0 - m);
    EXPECT_EQ(after.c, before.c);
    if (before.kf) {
      EXPECT_EQ(*after.kf, *before.kf - m);
    }
    for (std::int64_t j = -10; j <= 10; ++j) EXPECT_EQ(g(j), h(m + j));
  }
}

TEST(Shift, IdentityAndSmallWindowExample) {
  const Sequence h = fixture::small_window();
  EXPECT_EQ(shift(h, 0), h);
  const Sequence g = shift(h, -3);
  EXPECT_EQ(g(1), 2);
  EXPECT_EQ(g(2), 4);
  EXPECT_EQ(g(3), 7);
  EXPECT_EQ(g(0), 0);
}

TEST(Shift, TailsKeepTheirCoefficients) {
  const Sequence h = shift(Sequence::polynomial({1, 2, 3}), 4);
  EXPECT_EQ(h.coeffs(), (std::vector<BigInt>{1, 2, 3}));
  EXPECT_EQ(h.offset(), -4);
  EXPECT_EQ(h(-4), 1);
  EXPECT_EQ(h(-3), 6);
}

TEST(Add, PointwiseSum) {
  const Sequence h = fixture::small_window();
  const Sequence doubled = add(h, h);
  for (std::int64_t j = -5; j <= 5; ++j) EXPECT_EQ(doubled(j), 2 * h(j));
  const Sequence other = Sequence::finite(1, {5, 0, 1});
  const Sequence sum = add(h, other);
  for (std::int64_t j = -5; j <= 5; ++j) EXPECT_EQ(sum(j), h(j) + other(j));
}

TEST(Add, RequiresFiniteOperands) {
  EXPECT_THROW(add(Sequence::geometric(1, 2), fixture::small_window()), DomainError);
  const Sequence windowed = window(Sequence::geometric(1, 2), 6);
  EXPECT_EQ(windowed.last_index(), 6);
  EXPECT_EQ(add(windowed, fixture::small_window())(6), 64);
}

TEST(Scale, AllKindsAndLinearity) {
  gen::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Sequence h = gen::any(rng);
    const BigInt c = gen::uniform(rng, 1, 9);
    const Sequence ch = scale_seq(h, c);
    const std::int64_t k0 = h.offset();
    for (std::int64_t j = k0 - 2; j <= k0 + 6; ++j) EXPECT_EQ(ch(j), c * h(j));
    for (std::int64_t d = k0; d <= k0 + 5; ++d) {
      for (std::int64_t k = k0; k <= d; ++k) EXPECT_EQ(beta(ch, k, d), c * beta(h, k, d));
    }
  }
  EXPECT_THROW(scale_seq(fixture::small_window(), 0), DomainError);
}

TEST(Window, RejectsEndBeforeStart) {
  EXPECT_THROW(window(Sequence::polynomial({1, 1}), -1), DomainError);
}

}  // namespace
}  // namespace qdepth

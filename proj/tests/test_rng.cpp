#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "mc.hpp"
#include "padeloc/rng.hpp"

using namespace padeloc;

TEST(Mix64, SplitMixReferenceValue) {
  // first splitmix64 output from state 0
  EXPECT_EQ(mix64(0), 0xe220a8397b1dcdafULL);
  static_assert(mix64(1) != mix64(2));
}

TEST(Rng, EngineIsStandardMt19937_64) {
  Rng rng(5489);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = rng.next_u64();
  EXPECT_EQ(v, 9981545732273789042ULL);
}

TEST(Rng, Deterministic) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.uniform(), b.uniform());
    EXPECT_EQ(a.normal(), b.normal());
    EXPECT_EQ(a.exponential(), b.exponential());
  }
}

TEST(Rng, SubstreamsDiffer) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 20; ++s) {
    for (std::uint64_t r = 0; r < 50; ++r) seen.insert(substream_seed(1, {s, r}));
  }
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(substream_seed(1, {0, 1}), substream_seed(1, {1, 0}));
  EXPECT_NE(substream_seed(1, {0}), substream_seed(1, {0, 0}));
  EXPECT_NE(substream_seed(1, {3}), substream_seed(2, {3}));
  EXPECT_EQ(substream_seed(9, {4, 5, 6}), substream_seed(9, {4, 5, 6}));
}

TEST(Rng, UniformOpenInterval) {
  Rng rng(1);
  mc::Accumulator acc;
  for (int i = 0; i < 1000000; ++i) {
    const double u = rng.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    acc.add(u);
  }
  EXPECT_TRUE(mc::within(acc.estimate(), 0.5));
  const double x = rng.uniform(-2.0, 3.0);
  EXPECT_TRUE(x > -2.0 && x < 3.0);
}

TEST(Rng, NormalAndExponentialMoments) {
  Rng rng(2);
  mc::Accumulator m1, m2, e1;
  for (int i = 0; i < 1000000; ++i) {
    const double z = rng.normal();
    m1.add(z);
    m2.add(z * z);
    e1.add(rng.exponential());
  }
  EXPECT_TRUE(mc::within(m1.estimate(), 0.0));
  EXPECT_TRUE(mc::within(m2.estimate(), 1.0));
  EXPECT_TRUE(mc::within(e1.estimate(), 1.0));
}

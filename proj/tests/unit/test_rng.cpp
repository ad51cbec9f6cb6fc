#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "sentinet/rng.hpp"

using namespace sentinet;

TEST(CounterRng, PureFunctionOfCoordinates) {
  const CounterRng a(42, Stream::Node, 7);
  const CounterRng b(42, Stream::Node, 7);
  for (std::uint64_t c = 0; c < 100; ++c) EXPECT_EQ(a.bits(c), b.bits(c));
}

TEST(CounterRng, DistinctKeysAndStreamsDiffer) {
  std::set<std::uint64_t> seen;
  for (auto stream : {Stream::Deploy, Stream::Node, Stream::Shadowing, Stream::Link}) {
    for (std::uint64_t key = 0; key < 50; ++key) seen.insert(CounterRng(42, stream, key).bits(0));
  }
  EXPECT_EQ(seen.size(), 200U);
}

TEST(CounterRng, UniformStaysInOpenInterval) {
  const CounterRng r(1, Stream::Aux, 0);
  double sum = 0.0;
  constexpr int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform(i);
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / n, 0.5, 0.005);
}

TEST(CounterRng, NormalMoments) {
  const CounterRng r(9, Stream::Shadowing, 3);
  double s = 0.0, s2 = 0.0;
  constexpr int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = r.normal(i);
    ASSERT_TRUE(std::isfinite(z));
    s += z;
    s2 += z * z;
  }
  EXPECT_NEAR(s / n, 0.0, 0.01);
  EXPECT_NEAR(s2 / n, 1.0, 0.02);
}

TEST(Substream, AdvancesCounter) {
  Substream s(5, Stream::Node, 1);
  const CounterRng ref(5, Stream::Node, 1);
  EXPECT_EQ(s.uniform(), ref.uniform(0));
  EXPECT_EQ(s.uniform(), ref.uniform(1));
  EXPECT_EQ(s.draws(), 2U);
  const double v = s.uniform(3.0, 4.0);
  EXPECT_GE(v, 3.0);
  EXPECT_LE(v, 4.0);
}

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "../oracles.hpp"
#include "sentinet/channel.hpp"

using namespace sentinet;

namespace {

RadioConfig quiet() {
  RadioConfig r;
  r.shadowing_sigma = 0.0;
  return r;
}

auto all_listening = [](NodeId) { return true; };

Message broadcast(NodeId from, double dbm) { return Message{MessageKind::Probe, from, kBroadcast, dbm, 0.0, 0}; }

}  // namespace

TEST(PathLoss, LogDistance) {
  const RadioConfig r;
  EXPECT_DOUBLE_EQ(path_loss_db(r, 1.0), 55.0);
  EXPECT_NEAR(path_loss_db(r, 10.0), 79.0, 1e-12);
  EXPECT_EQ(path_loss_db(r, 0.0), path_loss_db(r, kMinDistance));
  EXPECT_THROW(path_loss_db(r, -1.0), std::invalid_argument);
}

TEST(Lqi, MapsSnrOntoZeroToTen) {
  const RadioConfig r;
  EXPECT_EQ(compute_lqi(r, -100.0), 0);
  EXPECT_EQ(compute_lqi(r, -80.0), 10);
  EXPECT_EQ(compute_lqi(r, -60.0), 10);
  EXPECT_EQ(compute_lqi(r, -86.0), 7);
  EXPECT_EQ(compute_lqi(r, -110.0), 0);
}

TEST(Lqi, DeterministicMatchesOracle) {
  const RadioConfig r;
  for (double d = 0.0; d < 40.0; d += 0.37) {
    for (double p : {-10.0, -5.0}) EXPECT_EQ(deterministic_lqi(r, p, d), oracle::lqi(p, d)) << d;
  }
}

TEST(Lqi, StrongerPowerNeverWorse) {
  const RadioConfig r;
  for (double d = 0.5; d < 40.0; d += 0.5) EXPECT_GE(deterministic_lqi(r, -5.0, d), deterministic_lqi(r, -10.0, d));
}

TEST(Channel, ThreeNodeLineLossFree) {
  // 0 -- 10 m -- 1 -- 10 m -- 2; -10 dBm reaches ~17.8 m without shadowing.
  const std::vector<Position> pos{{0, 0}, {10, 0}, {20, 0}};
  Channel ch(quiet(), pos, 1);
  Message m = broadcast(1, -10.0);
  const auto f = ch.begin(m, 0.0, all_listening);
  EXPECT_EQ(m.frame, f);
  const auto rx = ch.deliver(f, 0.004, all_listening);
  ASSERT_EQ(rx.size(), 2U);
  for (const auto& r : rx) {
    EXPECT_TRUE(r.addressed);
    EXPECT_EQ(r.lqi, oracle::lqi(-10.0, 10.0));
  }
  // The end node reaches only its neighbour.
  Message e = broadcast(0, -10.0);
  const auto rx0 = ch.deliver(ch.begin(e, 1.0, all_listening), 1.004, all_listening);
  ASSERT_EQ(rx0.size(), 1U);
  EXPECT_EQ(rx0[0].receiver, 1U);
  EXPECT_EQ(ch.frames_in_flight(), 0U);
}

TEST(Channel, OverlapDestroysBothAtCommonReceiver) {
  const std::vector<Position> pos{{0, 0}, {10, 0}, {20, 0}};
  Channel ch(quiet(), pos, 1);
  Message a = broadcast(0, -10.0);
  Message b = broadcast(2, -10.0);
  const auto fa = ch.begin(a, 0.0, all_listening);
  const auto fb = ch.begin(b, 0.002, all_listening);
  EXPECT_TRUE(ch.deliver(fa, 0.004, all_listening).empty());
  EXPECT_TRUE(ch.deliver(fb, 0.006, all_listening).empty());
}

TEST(Channel, BackToBackFramesDoNotCollide) {
  const std::vector<Position> pos{{0, 0}, {10, 0}, {20, 0}};
  Channel ch(quiet(), pos, 1);
  Message a = broadcast(0, -10.0);
  Message b = broadcast(2, -10.0);
  const auto fa = ch.begin(a, 0.0, all_listening);
  const auto fb = ch.begin(b, 0.004, all_listening);
  EXPECT_EQ(ch.deliver(fa, 0.004, all_listening).size(), 1U);
  EXPECT_EQ(ch.deliver(fb, 0.008, all_listening).size(), 1U);
}

TEST(Channel, HalfDuplexSenderMissesOverlap) {
  const std::vector<Position> pos{{0, 0}, {10, 0}};
  Channel ch(quiet(), pos, 1);
  Message a = broadcast(0, -10.0);
  Message b = broadcast(1, -10.0);
  const auto fa = ch.begin(a, 0.0, all_listening);
  const auto fb = ch.begin(b, 0.001, all_listening);
  EXPECT_TRUE(ch.deliver(fa, 0.004, all_listening).empty());
  EXPECT_TRUE(ch.deliver(fb, 0.005, all_listening).empty());
}

TEST(Channel, SleepingNodesHearNothing) {
  const std::vector<Position> pos{{0, 0}, {5, 0}, {6, 0}};
  Channel ch(quiet(), pos, 1);
  Message a = broadcast(0, -10.0);
  auto awake = [](NodeId id) { return id != 1; };
  const auto rx = ch.deliver(ch.begin(a, 0.0, awake), 0.004, awake);
  ASSERT_EQ(rx.size(), 1U);
  EXPECT_EQ(rx[0].receiver, 2U);
  // A node that falls asleep mid-frame loses it too.
  Message b = broadcast(0, -10.0);
  const auto f = ch.begin(b, 1.0, all_listening);
  EXPECT_EQ(ch.deliver(f, 1.004, awake).size(), 1U);
}

TEST(Channel, UnicastMarksOverhearers) {
  const std::vector<Position> pos{{0, 0}, {5, 0}, {0, 5}};
  Channel ch(quiet(), pos, 1);
  Message m{MessageKind::ProbeReply, 0, 1, -10.0, 0.0, 0};
  const auto rx = ch.deliver(ch.begin(m, 0.0, all_listening), 0.004, all_listening);
  ASSERT_EQ(rx.size(), 2U);
  for (const auto& r : rx) EXPECT_EQ(r.addressed, r.receiver == 1U);
}

TEST(Channel, OutOfRangeNotHeard) {
  const std::vector<Position> pos{{0, 0}, {18, 0}, {28, 0}};
  Channel ch(quiet(), pos, 1);
  Message lo = broadcast(0, -10.0);
  EXPECT_TRUE(ch.deliver(ch.begin(lo, 0.0, all_listening), 0.004, all_listening).empty());
  Message hi = broadcast(0, -5.0);
  EXPECT_EQ(ch.deliver(ch.begin(hi, 1.0, all_listening), 1.004, all_listening).size(), 2U);
}

TEST(Channel, ShadowingIsReproducible) {
  std::vector<Position> pos;
  for (int i = 0; i < 30; ++i) pos.push_back({static_cast<double>(i % 6) * 4.0, static_cast<double>(i / 6) * 4.0});
  auto run = [&] {
    Channel ch(RadioConfig{}, pos, 99);
    std::vector<Reception> all;
    for (NodeId s = 0; s < pos.size(); ++s) {
      Message m = broadcast(s, -10.0);
      const auto f = ch.begin(m, s * 0.01, all_listening);
      for (const auto& r : ch.deliver(f, s * 0.01 + 0.004, all_listening)) all.push_back(r);
    }
    return all;
  };
  EXPECT_EQ(run(), run());
}

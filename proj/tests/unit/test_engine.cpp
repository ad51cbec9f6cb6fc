#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "sentinet/engine.hpp"
#include "sentinet/rng.hpp"

using namespace sentinet;

TEST(EventQueue, PopsInTimeOrderWithFifoTies) {
  EventQueue q;
  q.schedule(2.0, 1, EventKind::SleepExpired);
  q.schedule(1.0, 2, EventKind::SleepExpired);
  q.schedule(1.0, 3, EventKind::WaitExpired);
  q.schedule(1.0, 4, EventKind::MetricSample);
  std::vector<NodeId> order;
  while (auto ev = q.pop_until(10.0)) order.push_back(ev->target);
  EXPECT_EQ(order, (std::vector<NodeId>{2, 3, 4, 1}));
  EXPECT_EQ(q.now(), 2.0);
}

TEST(EventQueue, RejectsPastAndNonFinite) {
  EventQueue q;
  q.schedule(5.0, 0, EventKind::SleepExpired);
  ASSERT_TRUE(q.pop_until(10.0));
  EXPECT_THROW(q.schedule(4.0, 0, EventKind::SleepExpired), ClockViolation);
  EXPECT_THROW(q.schedule(std::numeric_limits<double>::infinity(), 0, EventKind::SleepExpired), ClockViolation);
  EXPECT_THROW(q.schedule(std::nan(""), 0, EventKind::SleepExpired), ClockViolation);
  EXPECT_NO_THROW(q.schedule(5.0, 0, EventKind::SleepExpired));
  EXPECT_THROW(q.advance_to(1.0), ClockViolation);
}

TEST(EventQueue, CancelIsIdempotentAndSkipped) {
  EventQueue q;
  const auto a = q.schedule(1.0, 1, EventKind::SleepExpired);
  const auto b = q.schedule(2.0, 2, EventKind::SleepExpired);
  EXPECT_TRUE(q.is_pending(a));
  EXPECT_TRUE(q.cancel(a));
  EXPECT_FALSE(q.cancel(a));
  EXPECT_FALSE(q.cancel(EventHandle{}));
  EXPECT_EQ(q.pending_count(), 1U);
  auto ev = q.pop_until(10.0);
  ASSERT_TRUE(ev);
  EXPECT_EQ(ev->seq, b.seq());
  EXPECT_FALSE(q.cancel(b));  // already dispatched
  EXPECT_FALSE(q.pop_until(10.0));
}

TEST(EventQueue, PopUntilHonoursHorizon) {
  EventQueue q;
  q.schedule(1.0, 0, EventKind::SleepExpired);
  q.schedule(3.0, 0, EventKind::SleepExpired);
  EXPECT_TRUE(q.pop_until(2.0));
  EXPECT_FALSE(q.pop_until(2.0));
  q.advance_to(2.0);
  EXPECT_EQ(q.now(), 2.0);
  EXPECT_EQ(q.pending_count(), 1U);
}

TEST(EventQueue, RandomScheduleIsMonotone) {
  EventQueue q;
  Substream rng(3, Stream::Aux, 0);
  std::vector<EventHandle> handles;
  for (int i = 0; i < 5000; ++i) handles.push_back(q.schedule(rng.uniform(0.0, 100.0), 0, EventKind::SleepExpired));
  std::vector<bool> cancelled(handles.size());
  for (std::size_t i = 0; i < handles.size(); i += 3) {
    q.cancel(handles[i]);
    cancelled[i] = true;
  }
  double last = 0.0;
  std::uint64_t last_seq = 0;
  std::size_t n = 0;
  while (auto ev = q.pop_until(1000.0)) {
    ASSERT_GE(ev->time, last);
    if (ev->time == last && n > 0) {
      ASSERT_GT(ev->seq, last_seq);
    }
    if (ev->seq < cancelled.size()) {
      ASSERT_FALSE(cancelled[ev->seq]);
    }
    last = ev->time;
    last_seq = ev->seq;
    // Re-scheduling from inside the loop never goes back in time.
    if (n % 7 == 0) q.schedule(q.now() + rng.uniform(), 0, EventKind::WaitExpired);
    ++n;
  }
  EXPECT_GT(n, 3300U);
}

TEST(TraceDigest, SensitiveToOrder) {
  Event a{1.0, 0, 1, EventKind::SleepExpired, {}, 0};
  Event b{2.0, 1, 2, EventKind::WaitExpired, {}, 0};
  TraceDigest x, y;
  x.add(a);
  x.add(b);
  y.add(b);
  y.add(a);
  EXPECT_NE(x.value(), y.value());
}

TEST(RunSummary, Totals) {
  RunSummary s;
  s.dispatched[0] = 3;
  s.dispatched[6] = 4;
  EXPECT_EQ(s.total(), 7U);
  EXPECT_EQ(s.count(EventKind::Transmit), 4U);
}

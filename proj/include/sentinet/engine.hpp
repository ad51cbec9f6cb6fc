#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "sentinet/message.hpp"

namespace sentinet {

enum class EventKind : std::uint8_t {
  SleepExpired,
  WaitExpired,
  ConnTimerExpired,
  MsgDelivery,
  NodeFailure,
  MetricSample,
  Transmit,  // deferred transmission (jittered replies)
};
inline constexpr std::size_t kEventKindCount = 7;

std::string_view to_string(EventKind kind) noexcept;

inline constexpr NodeId kSystemTarget = std::numeric_limits<NodeId>::max();

struct Event {
  double time = 0.0;
  std::uint64_t seq = 0;
  NodeId target = kSystemTarget;
  EventKind kind = EventKind::MetricSample;
  Message msg{};             // MsgDelivery / Transmit
  std::uint64_t payload = 0;  // frame id for MsgDelivery; kill count for system NodeFailure
};

class EventHandle {
 public:
  EventHandle() = default;
  explicit EventHandle(std::uint64_t seq) : seq_(seq) {}
  bool valid() const noexcept { return seq_ != kInvalid; }
  std::uint64_t seq() const noexcept { return seq_; }
  friend bool operator==(const EventHandle&, const EventHandle&) = default;

 private:
  static constexpr std::uint64_t kInvalid = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t seq_ = kInvalid;
};

class ClockViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Time-ordered queue with FIFO tie-break and O(1) cancellation.
class EventQueue {
 public:
  double now() const noexcept { return clock_; }

  EventHandle schedule(double time, NodeId target, EventKind kind, Message msg = {}, std::uint64_t payload = 0);

  /// True when the event was pending and is now dead.
  bool cancel(EventHandle handle);
  bool is_pending(EventHandle handle) const;

  /// Pops the next live event with time <= t_end and advances the clock to it.
  std::optional<Event> pop_until(double t_end);

  /// Moves the clock forward without dispatching; t must not precede now().
  void advance_to(double t);

  std::size_t pending_count() const noexcept { return live_; }

 private:
  enum class SlotState : std::uint8_t { Pending, Dispatched, Cancelled };

  struct Later {
    bool operator()(const Event& a, const Event& b) const noexcept {
      if (a.time != b.time) return a.time > b.time;
      return a.seq > b.seq;
    }
  };

  std::priority_queue<Event, std::vector<Event>, Later> heap_;
  std::vector<SlotState> state_;
  double clock_ = 0.0;
  std::size_t live_ = 0;
};

struct RunSummary {
  double clock = 0.0;
  std::array<std::uint64_t, kEventKindCount> dispatched{};

  std::uint64_t total() const noexcept;
  std::uint64_t count(EventKind kind) const noexcept { return dispatched[static_cast<std::size_t>(kind)]; }
};

/// Incremental FNV-1a digest over dispatched events.
class TraceDigest {
 public:
  void add(const Event& ev) noexcept;
  std::uint64_t value() const noexcept { return hash_; }

 private:
  void mix(std::uint64_t word) noexcept;
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace sentinet

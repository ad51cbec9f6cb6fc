#include "sentinet/engine.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace sentinet {

std::string_view to_string(EventKind kind) noexcept {
  switch (kind) {
    case EventKind::SleepExpired: return "SleepExpired";
    case EventKind::WaitExpired: return "WaitExpired";
    case EventKind::ConnTimerExpired: return "ConnTimerExpired";
    case EventKind::MsgDelivery: return "MsgDelivery";
    case EventKind::NodeFailure: return "NodeFailure";
    case EventKind::MetricSample: return "MetricSample";
    case EventKind::Transmit: return "Transmit";
  }
  return "?";
}

std::string_view to_string(MessageKind kind) noexcept {
  switch (kind) {
    case MessageKind::Probe: return "probe";
    case MessageKind::ProbeReply: return "probe_reply";
    case MessageKind::Conn: return "conn";
    case MessageKind::ConnReply: return "conn_reply";
  }
  return "?";
}

EventHandle EventQueue::schedule(double time, NodeId target, EventKind kind, Message msg, std::uint64_t payload) {
  if (!(time >= clock_) || !std::isfinite(time)) {
    throw ClockViolation("cannot schedule " + std::string(to_string(kind)) + " at t=" + std::to_string(time) +
                         " before clock " + std::to_string(clock_));
  }
  const std::uint64_t seq = state_.size();
  state_.push_back(SlotState::Pending);
  heap_.push(Event{time, seq, target, kind, msg, payload});
  ++live_;
  return EventHandle(seq);
}

bool EventQueue::cancel(EventHandle handle) {
  if (!is_pending(handle)) return false;
  state_[handle.seq()] = SlotState::Cancelled;
  --live_;
  return true;
}

bool EventQueue::is_pending(EventHandle handle) const {
  return handle.valid() && handle.seq() < state_.size() && state_[handle.seq()] == SlotState::Pending;
}

std::optional<Event> EventQueue::pop_until(double t_end) {
  while (!heap_.empty()) {
    const Event& top = heap_.top();
    if (state_[top.seq] == SlotState::Cancelled) {
      heap_.pop();
      continue;
    }
    if (top.time > t_end) return std::nullopt;
    Event ev = top;
    heap_.pop();
    state_[ev.seq] = SlotState::Dispatched;
    --live_;
    clock_ = ev.time;
    return ev;
  }
  return std::nullopt;
}

void EventQueue::advance_to(double t) {
  if (t < clock_) {
    throw ClockViolation("clock cannot move backwards to " + std::to_string(t));
  }
  clock_ = t;
}

std::uint64_t RunSummary::total() const noexcept {
  return std::accumulate(dispatched.begin(), dispatched.end(), std::uint64_t{0});
}

void TraceDigest::mix(std::uint64_t word) noexcept {
  for (int i = 0; i < 8; ++i) {
    hash_ ^= (word >> (8 * i)) & 0xffU;
    hash_ *= 0x100000001b3ULL;
  }
}

void TraceDigest::add(const Event& ev) noexcept {
  mix(std::bit_cast<std::uint64_t>(ev.time));
  mix(ev.seq);
  mix(ev.target);
  mix(static_cast<std::uint64_t>(ev.kind));
  mix(ev.payload);
}

}  // namespace sentinet

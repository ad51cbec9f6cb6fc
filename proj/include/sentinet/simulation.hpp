#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sentinet/channel.hpp"
#include "sentinet/config.hpp"
#include "sentinet/engine.hpp"
#include "sentinet/metrics.hpp"
#include "sentinet/node.hpp"

namespace sentinet {

/// Uniform deployment; node i's position depends only on (seed, i).
std::vector<Position> deploy_uniform(Field field, std::size_t count, std::uint64_t seed);

struct FailureRecord {
  FailureSpec spec;
  double time = 0.0;
  std::vector<NodeId> killed;
  bool clamped = false;  // asked for more sentinels than were alive
  bool skipped = false;  // scheduled past the run horizon
};

/// One simulation run. Single-threaded; every callback goes through the event loop.
class Simulation {
 public:
  explicit Simulation(RunConfig config);

  const RunConfig& config() const noexcept { return config_; }
  double now() const noexcept { return queue_.now(); }

  EventHandle schedule(double time, NodeId target, EventKind kind);
  bool cancel(EventHandle handle) { return queue_.cancel(handle); }

  /// Fail-stop at `time`. Throws std::out_of_range for an unknown node.
  EventHandle inject_failure(NodeId node, double time);
  /// Kills the `count` lowest-id ACTIVE nodes (all when empty) at `time`.
  EventHandle inject_sentinel_failures(double time, std::optional<std::size_t> count);

  /// Dispatches every event with time <= t_end, then sets the clock to t_end.
  RunSummary run_until(double t_end);

  /// Runs to the configured duration and settles energy ledgers.
  RunSummary run();

  Snapshot snapshot() const;
  const std::vector<NodeState>& nodes() const noexcept { return nodes_; }
  const std::vector<MetricsRow>& rows() const noexcept { return rows_; }
  const std::vector<FailureRecord>& failures() const noexcept { return failures_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }
  const std::array<std::uint64_t, kMessageKindCount>& frames_sent() const noexcept { return frames_; }
  std::uint64_t frames_total() const noexcept;
  std::uint64_t trace_digest() const noexcept { return digest_.value(); }
  const RunSummary& summary() const noexcept { return summary_; }
  const Channel& channel() const noexcept { return channel_; }

  EnergySummary energy_summary() const;
  MetricsRow sample() const;

  /// Called after every dispatched event (tests, tracing).
  void set_observer(std::function<void(const Event&, const Simulation&)> observer) { observer_ = std::move(observer); }

 private:
  ProtocolContext context() const { return ProtocolContext{protocol_, config_.energy, queue_.now()}; }
  void dispatch(const Event& ev);
  void apply(NodeState& node, const Actions& actions);
  void transmit(NodeState& node, Message msg);
  void deliver(const Event& ev);
  void kill_sentinels(const Event& ev);
  void record_sample(std::uint64_t index);
  void note_status_change(NodeStatus before, const NodeState& node);
  bool listening(NodeId id) const { return is_awake(nodes_[id].status); }

  RunConfig config_;
  ProtocolConfig protocol_;
  EventQueue queue_;
  std::vector<NodeState> nodes_;
  Channel channel_;
  CoverageGrid grid_;
  std::array<std::uint64_t, kMessageKindCount> frames_{};
  std::vector<MetricsRow> rows_;
  std::vector<FailureRecord> failures_;
  std::vector<std::string> warnings_;
  RunSummary summary_;
  TraceDigest digest_;
  std::function<void(const Event&, const Simulation&)> observer_;

  // Coverage and components only change when the ACTIVE set or a tx level does.
  std::uint64_t topology_version_ = 0;
  mutable std::uint64_t cached_version_ = ~0ULL;
  mutable double cached_coverage_ = 0.0;
  mutable ComponentStats cached_components_{};
};

}  // namespace sentinet

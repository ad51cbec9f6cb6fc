#include "sentinet/simulation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sentinet/link_control.hpp"
#include "sentinet/sentinel_protocol.hpp"

namespace sentinet {

std::vector<Position> deploy_uniform(Field field, std::size_t count, std::uint64_t seed) {
  std::vector<Position> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const CounterRng rng(seed, Stream::Deploy, i);
    out.push_back(Position{rng.uniform(0) * field.width, rng.uniform(1) * field.height});
  }
  return out;
}

namespace {

std::vector<NodeState> make_nodes(const RunConfig& config, const std::vector<Position>& positions) {
  std::vector<NodeState> nodes;
  nodes.reserve(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    nodes.emplace_back(static_cast<NodeId>(i), positions[i], config.weibull(), config.seed);
  }
  return nodes;
}

RunConfig validated(RunConfig config) {
  config.validate();
  return config;
}

}  // namespace

Simulation::Simulation(RunConfig config)
    : config_(validated(std::move(config))),
      protocol_(config_.protocol()),
      nodes_(make_nodes(config_, deploy_uniform(config_.field, config_.node_count, config_.seed))),
      channel_(config_.radio,
               [this] {
                 std::vector<Position> p;
                 for (const NodeState& n : nodes_) p.push_back(n.position);
                 return p;
               }(),
               config_.seed),
      grid_(config_.field, config_.grid_step) {
  for (NodeState& node : nodes_) apply(node, on_deploy(node, context()));
  schedule(0.0, kSystemTarget, EventKind::MetricSample);
  for (const FailureSpec& f : config_.failures) {
    if (f.time > config_.duration) {
      failures_.push_back(FailureRecord{f, f.time, {}, false, true});
      warnings_.push_back("kill '" + f.to_string() + "' is past the run duration; ignored");
      continue;
    }
    if (f.kind == FailureSpec::Kind::Node) {
      inject_failure(f.node, f.time);
      failures_.back().spec = f;
    } else {
      inject_sentinel_failures(f.time, f.count);
    }
  }
}

EventHandle Simulation::schedule(double time, NodeId target, EventKind kind) {
  return queue_.schedule(time, target, kind);
}

EventHandle Simulation::inject_failure(NodeId node, double time) {
  if (node >= nodes_.size()) throw std::out_of_range("inject_failure: unknown node id " + std::to_string(node));
  FailureSpec spec{FailureSpec::Kind::Node, node, time, std::nullopt};
  const EventHandle h = queue_.schedule(time, node, EventKind::NodeFailure, {}, failures_.size());
  failures_.push_back(FailureRecord{spec, time, {}, false, false});
  return h;
}

EventHandle Simulation::inject_sentinel_failures(double time, std::optional<std::size_t> count) {
  FailureSpec spec{FailureSpec::Kind::SentinelsAt, 0, time, count};
  const EventHandle h = queue_.schedule(time, kSystemTarget, EventKind::NodeFailure, {}, failures_.size());
  failures_.push_back(FailureRecord{spec, time, {}, false, false});
  return h;
}

RunSummary Simulation::run_until(double t_end) {
  while (auto ev = queue_.pop_until(t_end)) {
    ++summary_.dispatched[static_cast<std::size_t>(ev->kind)];
    digest_.add(*ev);
    dispatch(*ev);
    if (observer_) observer_(*ev, *this);
  }
  queue_.advance_to(t_end);
  summary_.clock = queue_.now();
  return summary_;
}

RunSummary Simulation::run() {
  run_until(config_.duration);
  const ProtocolContext ctx = context();
  for (NodeState& node : nodes_) settle_energy(node, ctx);
  return summary_;
}

std::uint64_t Simulation::frames_total() const noexcept {
  std::uint64_t total = 0;
  for (auto f : frames_) total += f;
  return total;
}

void Simulation::dispatch(const Event& ev) {
  switch (ev.kind) {
    case EventKind::MetricSample:
      record_sample(ev.payload);
      return;
    case EventKind::MsgDelivery:
      deliver(ev);
      return;
    case EventKind::NodeFailure:
      if (ev.target == kSystemTarget) {
        kill_sentinels(ev);
        return;
      }
      break;
    default: break;
  }

  NodeState& node = nodes_.at(ev.target);
  const NodeStatus before = node.status;
  const std::size_t level_before = node.tx_level;
  const ProtocolContext ctx = context();
  switch (ev.kind) {
    case EventKind::SleepExpired: apply(node, on_sleep_expired(node, ctx)); break;
    case EventKind::WaitExpired: apply(node, on_wait_expired(node, ctx)); break;
    case EventKind::ConnTimerExpired: apply(node, on_conn_timer_expired(node, ctx)); break;
    case EventKind::Transmit:
      if (is_awake(node.status)) transmit(node, ev.msg);
      break;
    case EventKind::NodeFailure:
      apply(node, on_failure(node, ctx));
      if (before != NodeStatus::Dead && ev.payload < failures_.size()) failures_[ev.payload].killed.push_back(node.id);
      break;
    default: break;
  }
  if (node.tx_level != level_before) ++topology_version_;
  note_status_change(before, node);
}

void Simulation::note_status_change(NodeStatus before, const NodeState& node) {
  if ((before == NodeStatus::Active) != (node.status == NodeStatus::Active)) ++topology_version_;
}

void Simulation::apply(NodeState& node, const Actions& actions) {
  for (const Action& action : actions) {
    if (const auto* send = std::get_if<Send>(&action)) {
      if (send->delay > 0.0) {
        queue_.schedule(queue_.now() + send->delay, node.id, EventKind::Transmit, send->msg);
      } else {
        transmit(node, send->msg);
      }
    } else if (const auto* arm = std::get_if<Arm>(&action)) {
      EventHandle& slot = arm->slot == TimerSlot::Cycle ? node.cycle_timer : node.conn_timer;
      queue_.cancel(slot);
      slot = queue_.schedule(queue_.now() + arm->delay, node.id, arm->kind);
    } else if (const auto* disarm = std::get_if<Disarm>(&action)) {
      EventHandle& slot = disarm->slot == TimerSlot::Cycle ? node.cycle_timer : node.conn_timer;
      queue_.cancel(slot);
      slot = EventHandle{};
    }
  }
}

void Simulation::transmit(NodeState& node, Message msg) {
  msg.sender = node.id;
  msg.tx_power_dbm = current_tx_power(node, protocol_);
  const std::uint64_t frame = channel_.begin(msg, queue_.now(), [this](NodeId id) { return listening(id); });
  node.energy.tx += tx_cost(config_.energy, msg.tx_power_dbm, config_.radio.tx_duration);
  ++frames_[static_cast<std::size_t>(msg.kind)];
  queue_.schedule(queue_.now() + config_.radio.tx_duration, kSystemTarget, EventKind::MsgDelivery, msg, frame);
}

void Simulation::deliver(const Event& ev) {
  const auto receptions = channel_.deliver(ev.payload, queue_.now(), [this](NodeId id) { return listening(id); });
  const ProtocolContext ctx = context();
  for (const Reception& rx : receptions) {
    NodeState& node = nodes_[rx.receiver];
    const NodeStatus before = node.status;
    const std::size_t level_before = node.tx_level;
    switch (ev.msg.kind) {
      case MessageKind::Probe: apply(node, on_probe_received(node, ev.msg, ctx)); break;
      case MessageKind::ProbeReply:
        apply(node, on_probe_reply_received(node, ev.msg, rx.lqi, rx.addressed, ctx));
        break;
      case MessageKind::Conn: apply(node, on_conn_received(node, ev.msg, ctx)); break;
      case MessageKind::ConnReply:
        apply(node, on_conn_reply_received(node, ev.msg, rx.lqi, rx.addressed, ctx));
        break;
    }
    if (node.tx_level != level_before) ++topology_version_;
    note_status_change(before, node);
  }
}

void Simulation::kill_sentinels(const Event& ev) {
  FailureRecord& record = failures_.at(ev.payload);
  std::size_t live = 0;
  for (const NodeState& n : nodes_) live += n.status == NodeStatus::Active ? 1 : 0;
  const std::size_t want = record.spec.count.value_or(live);
  if (want > live) {
    record.clamped = true;
    warnings_.push_back("kill '" + record.spec.to_string() + "' asked for " + std::to_string(want) + " sentinels, only " +
                        std::to_string(live) + " alive; killed all");
  }
  const ProtocolContext ctx = context();
  for (NodeState& node : nodes_) {
    if (record.killed.size() >= want) break;
    if (node.status != NodeStatus::Active) continue;
    apply(node, on_failure(node, ctx));
    record.killed.push_back(node.id);
    ++topology_version_;
  }
}

Snapshot Simulation::snapshot() const {
  Snapshot s;
  s.time = queue_.now();
  s.messages = frames_;
  s.nodes.reserve(nodes_.size());
  for (const NodeState& n : nodes_) {
    const double pending = config_.energy.draw(n.status) * (s.time - n.last_accrual);
    s.nodes.push_back(NodeView{n.id, n.position, n.status, current_tx_power(n, protocol_), n.energy.total() + pending});
  }
  return s;
}

EnergySummary Simulation::energy_summary() const {
  std::vector<EnergyLedger> ledgers;
  ledgers.reserve(nodes_.size());
  for (const NodeState& n : nodes_) {
    EnergyLedger l = n.energy;
    if (queue_.now() > n.last_accrual) accrue(l, config_.energy, n.status, queue_.now() - n.last_accrual);
    ledgers.push_back(l);
  }
  return summarize(ledgers);
}

MetricsRow Simulation::sample() const {
  const Snapshot snap = snapshot();
  if (cached_version_ != topology_version_) {
    std::vector<Position> active;
    for (const NodeView& n : snap.nodes) {
      if (n.status == NodeStatus::Active) active.push_back(n.position);
    }
    cached_coverage_ = grid_.fraction(active, config_.sensing_range);
    cached_components_ = sentinel_components(snap, config_.radio);
    cached_version_ = topology_version_;
  }
  MetricsRow row;
  row.time_s = snap.time;
  const auto c = census(snap);
  row.n_sleep = c[0];
  row.n_probe = c[1];
  row.n_active = c[2];
  row.n_dead = c[3];
  row.coverage = cached_coverage_;
  row.components = cached_components_.component_count;
  row.isolated = cached_components_.isolated_count;
  row.messages = frames_;
  const EnergySummary e = energy_summary();
  row.energy_total_j = e.total;
  row.energy_mean_j = e.mean_per_node;
  return row;
}

void Simulation::record_sample(std::uint64_t index) {
  rows_.push_back(sample());
  const double next = static_cast<double>(index + 1) * config_.metric_interval;
  if (next <= config_.duration) queue_.schedule(next, kSystemTarget, EventKind::MetricSample, {}, index + 1);
}

}  // namespace sentinet

#include "sentinet/sentinel_protocol.hpp"

#include <string>

#include "sentinet/link_control.hpp"

namespace sentinet {
namespace {

[[noreturn]] void violation(const NodeState& node, std::string_view what) {
  throw ProtocolViolation("node " + std::to_string(node.id) + " in " + std::string(to_string(node.status)) +
                          ": " + std::string(what));
}

double next_sleep(NodeState& node) {
  return sample_sleep_time(node.weibull, node.rng.uniform());
}

double hazard_time(const NodeState& node, const ProtocolContext& ctx) {
  switch (ctx.config.hazard_clock) {
    case HazardClock::Network: return ctx.now - node.deployed_at;
    case HazardClock::Cycle: return ctx.now - node.slept_at;
    case HazardClock::Off: break;
  }
  return 0.0;
}

}  // namespace

bool is_legal_transition(NodeStatus from, NodeStatus to) noexcept {
  if (from == to) return true;
  if (to == NodeStatus::Dead) return true;
  switch (from) {
    case NodeStatus::Sleep: return to == NodeStatus::Probe;
    case NodeStatus::Probe: return to == NodeStatus::Sleep || to == NodeStatus::Active;
    case NodeStatus::Active:
    case NodeStatus::Dead: return false;
  }
  return false;
}

Actions on_deploy(NodeState& node, const ProtocolContext& ctx) {
  node.status = NodeStatus::Sleep;
  node.slept_at = ctx.now;
  node.last_accrual = ctx.now;
  return {Arm{TimerSlot::Cycle, EventKind::SleepExpired, next_sleep(node)}};
}

Actions on_sleep_expired(NodeState& node, const ProtocolContext& ctx) {
  if (node.status == NodeStatus::Dead) return {};
  if (node.status != NodeStatus::Sleep) violation(node, "sleep timer expired outside SLEEP");
  set_status(node, NodeStatus::Probe, ctx);
  node.rcv_msg = false;
  Message probe{MessageKind::Probe, node.id, kBroadcast, current_tx_power(node, ctx.config), ctx.now, 0};
  return {Send{probe, 0.0}, Arm{TimerSlot::Cycle, EventKind::WaitExpired, ctx.config.t_w}};
}

Actions on_probe_received(NodeState& node, const Message& probe, const ProtocolContext& ctx) {
  if (node.status != NodeStatus::Active) return {};
  const double delay = ctx.config.reply_jitter > 0.0 ? node.rng.uniform(0.0, ctx.config.reply_jitter) : 0.0;
  Message reply{MessageKind::ProbeReply, node.id, probe.sender, current_tx_power(node, ctx.config), 0.0, 0};
  return {Send{reply, delay}};
}

Actions on_probe_reply_received(NodeState& node, const Message& /*reply*/, int lqi, bool addressed,
                                const ProtocolContext& ctx) {
  switch (node.status) {
    case NodeStatus::Probe:
      if (addressed) node.rcv_msg = true;
      return {};
    case NodeStatus::Active:
      // Probe answers come only from sentinels, so one reaching a sentinel is
      // evidence about a sentinel-to-sentinel link.
      if (uses_probe_evidence(ctx.config.link_control)) return on_link_evidence(node, lqi, ctx);
      return {};
    case NodeStatus::Sleep:
    case NodeStatus::Dead: return {};
  }
  return {};
}

Actions on_wait_expired(NodeState& node, const ProtocolContext& ctx) {
  if (node.status == NodeStatus::Dead) return {};
  if (node.status == NodeStatus::Active && node.conn_round_open) return on_conn_window_closed(node, ctx);
  if (node.status != NodeStatus::Probe) violation(node, "wait timer expired outside PROBE");

  if (node.rcv_msg) {
    if (ctx.config.hazard_clock != HazardClock::Off) {
      node.weibull = update_probe_rate(node.deployed_weibull, hazard_time(node, ctx));
    }
    const double t_s = next_sleep(node);
    set_status(node, NodeStatus::Sleep, ctx);
    return {Arm{TimerSlot::Cycle, EventKind::SleepExpired, t_s}};
  }

  set_status(node, NodeStatus::Active, ctx);
  if (uses_conn_timer(ctx.config.link_control)) {
    return {Arm{TimerSlot::Conn, EventKind::ConnTimerExpired, draw_conn_timer(node, ctx.config)}};
  }
  return {};
}

Actions on_failure(NodeState& node, const ProtocolContext& ctx) {
  if (node.status == NodeStatus::Dead) return {};
  set_status(node, NodeStatus::Dead, ctx);
  node.conn_round_open = false;
  return {Disarm{TimerSlot::Cycle}, Disarm{TimerSlot::Conn}};
}

}  // namespace sentinet

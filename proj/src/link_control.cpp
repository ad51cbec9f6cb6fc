#include "sentinet/link_control.hpp"

#include <string>

namespace sentinet {

double draw_conn_timer(NodeState& node, const ProtocolConfig& config) {
  return node.link_rng.uniform(config.t_c_min, config.t_c_max);
}

Actions on_conn_timer_expired(NodeState& sentinel, const ProtocolContext& ctx) {
  if (sentinel.status == NodeStatus::Dead) return {};
  if (sentinel.status != NodeStatus::Active) {
    throw ProtocolViolation("node " + std::to_string(sentinel.id) + ": connectivity timer outside ACTIVE");
  }
  if (!uses_conn_timer(ctx.config.link_control)) return {};
  sentinel.conn_round_open = true;
  sentinel.conn_evidence = false;
  Message conn{MessageKind::Conn, sentinel.id, kBroadcast, current_tx_power(sentinel, ctx.config), ctx.now, 0};
  return {Send{conn, 0.0}, Arm{TimerSlot::Cycle, EventKind::WaitExpired, ctx.config.t_w}};
}

Actions on_conn_received(NodeState& node, const Message& conn, const ProtocolContext& ctx) {
  if (node.status != NodeStatus::Active) return {};
  const double delay = ctx.config.reply_jitter > 0.0 ? node.link_rng.uniform(0.0, ctx.config.reply_jitter) : 0.0;
  Message reply{MessageKind::ConnReply, node.id, conn.sender, current_tx_power(node, ctx.config), 0.0, 0};
  return {Send{reply, delay}};
}

Actions on_conn_reply_received(NodeState& node, const Message& /*reply*/, int lqi, bool addressed,
                               const ProtocolContext& ctx) {
  if (node.status != NodeStatus::Active || !addressed) return {};
  node.conn_evidence = true;
  return on_link_evidence(node, lqi, ctx);
}

Actions on_conn_window_closed(NodeState& sentinel, const ProtocolContext& ctx) {
  sentinel.conn_round_open = false;
  if (sentinel.conn_evidence || !uses_conn_timer(ctx.config.link_control)) return {};
  return {Arm{TimerSlot::Conn, EventKind::ConnTimerExpired, draw_conn_timer(sentinel, ctx.config)}};
}

Actions on_link_evidence(NodeState& sentinel, int lqi, const ProtocolContext& ctx) {
  if (sentinel.status != NodeStatus::Active) {
    throw ProtocolViolation("node " + std::to_string(sentinel.id) + ": link evidence outside ACTIVE");
  }
  if (lqi < ctx.config.lqi_threshold && sentinel.tx_level + 1 < ctx.config.power_levels.size()) {
    ++sentinel.tx_level;
    ++sentinel.escalations;
  }
  if (!uses_conn_timer(ctx.config.link_control)) return {};
  return {Arm{TimerSlot::Conn, EventKind::ConnTimerExpired, draw_conn_timer(sentinel, ctx.config)}};
}

}  // namespace sentinet

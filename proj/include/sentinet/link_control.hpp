#pragma once

#include "sentinet/node.hpp"

namespace sentinet {

/// Standalone check: broadcast a Conn frame and open a t_w reply window.
Actions on_conn_timer_expired(NodeState& sentinel, const ProtocolContext& ctx);

/// Sentinels answer Conn frames with a unicast ConnReply.
Actions on_conn_received(NodeState& node, const Message& conn, const ProtocolContext& ctx);

Actions on_conn_reply_received(NodeState& node, const Message& reply, int lqi, bool addressed,
                               const ProtocolContext& ctx);

/// End of the Conn reply window; a silent round still re-arms t_c.
Actions on_conn_window_closed(NodeState& sentinel, const ProtocolContext& ctx);

/// Weak link (lqi below threshold): step tx power up one level, saturating at
/// the top. Either way the connectivity timer is redrawn when the mode runs one.
Actions on_link_evidence(NodeState& sentinel, int lqi, const ProtocolContext& ctx);

double draw_conn_timer(NodeState& node, const ProtocolConfig& config);

}  // namespace sentinet

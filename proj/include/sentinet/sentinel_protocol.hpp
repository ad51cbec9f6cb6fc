#pragma once

#include "sentinet/node.hpp"

// Reserve/sentinel state machine. Nodes start asleep for a Weibull time, wake
// to probe for a standing sentinel, and either go back to sleep (a guard
// answered within t_w) or stand guard themselves.
//
//   SLEEP --t_s--> PROBE --t_w, reply seen--> SLEEP
//                        --t_w, no reply---> ACTIVE
//   any --failure--> DEAD
//
// ACTIVE never returns to SLEEP.

namespace sentinet {

Actions on_deploy(NodeState& node, const ProtocolContext& ctx);
Actions on_sleep_expired(NodeState& node, const ProtocolContext& ctx);
Actions on_probe_received(NodeState& node, const Message& probe, const ProtocolContext& ctx);

/// `addressed` is false when the reply was overheard on its way to another node.
Actions on_probe_reply_received(NodeState& node, const Message& reply, int lqi, bool addressed,
                                const ProtocolContext& ctx);
Actions on_wait_expired(NodeState& node, const ProtocolContext& ctx);
Actions on_failure(NodeState& node, const ProtocolContext& ctx);

/// Whether `from -> to` is an edge of the transition table.
bool is_legal_transition(NodeStatus from, NodeStatus to) noexcept;

}  // namespace sentinet

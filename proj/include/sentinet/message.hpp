#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace sentinet {

using NodeId = std::uint32_t;
inline constexpr NodeId kBroadcast = std::numeric_limits<NodeId>::max() - 1;

enum class MessageKind : std::uint8_t { Probe, ProbeReply, Conn, ConnReply };
inline constexpr std::size_t kMessageKindCount = 4;

std::string_view to_string(MessageKind kind) noexcept;

constexpr bool is_reply(MessageKind kind) noexcept {
  return kind == MessageKind::ProbeReply || kind == MessageKind::ConnReply;
}

/// A frame on the channel. Replies are unicast; Probe and Conn are broadcast.
struct Message {
  MessageKind kind = MessageKind::Probe;
  NodeId sender = 0;
  NodeId addressee = kBroadcast;
  double tx_power_dbm = 0.0;
  double tx_time = 0.0;
  std::uint64_t frame = 0;

  bool is_broadcast() const noexcept { return addressee == kBroadcast; }
};

}  // namespace sentinet

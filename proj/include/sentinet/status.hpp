#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace sentinet {

enum class NodeStatus : std::uint8_t { Sleep, Probe, Active, Dead };
inline constexpr std::size_t kNodeStatusCount = 4;

constexpr std::string_view to_string(NodeStatus s) noexcept {
  switch (s) {
    case NodeStatus::Sleep: return "SLEEP";
    case NodeStatus::Probe: return "PROBE";
    case NodeStatus::Active: return "ACTIVE";
    case NodeStatus::Dead: return "DEAD";
  }
  return "?";
}

constexpr bool is_awake(NodeStatus s) noexcept {
  return s == NodeStatus::Probe || s == NodeStatus::Active;
}

}  // namespace sentinet

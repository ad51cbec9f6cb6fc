#include "sentinet/node.hpp"

#include <string>

namespace sentinet {

std::string_view to_string(LinkControlMode mode) noexcept {
  switch (mode) {
    case LinkControlMode::Off: return "off";
    case LinkControlMode::Standalone: return "standalone";
    case LinkControlMode::Piggybacked: return "piggybacked";
    case LinkControlMode::Both: return "both";
  }
  return "?";
}

LinkControlMode parse_link_control(std::string_view text) {
  if (text == "off") return LinkControlMode::Off;
  if (text == "standalone") return LinkControlMode::Standalone;
  if (text == "piggybacked") return LinkControlMode::Piggybacked;
  if (text == "both") return LinkControlMode::Both;
  throw std::invalid_argument("unknown link-control mode '" + std::string(text) +
                              "' (expected off|standalone|piggybacked|both)");
}

std::string_view to_string(HazardClock clock) noexcept {
  switch (clock) {
    case HazardClock::Network: return "network";
    case HazardClock::Cycle: return "cycle";
    case HazardClock::Off: return "off";
  }
  return "?";
}

HazardClock parse_hazard_clock(std::string_view text) {
  if (text == "network") return HazardClock::Network;
  if (text == "cycle") return HazardClock::Cycle;
  if (text == "off") return HazardClock::Off;
  throw std::invalid_argument("unknown hazard clock '" + std::string(text) + "' (expected network|cycle|off)");
}

void ProtocolConfig::validate() const {
  if (!(t_w > 0.0)) throw std::invalid_argument("protocol: t_w must be positive");
  if (!(t_c_min > 0.0)) throw std::invalid_argument("protocol: t_c minimum must be positive");
  if (t_c_min > t_c_max) throw std::invalid_argument("protocol: t_c range minimum exceeds maximum");
  if (reply_jitter < 0.0) throw std::invalid_argument("protocol: reply jitter must be non-negative");
  if (power_levels.empty()) throw std::invalid_argument("protocol: no power levels");
}

NodeState::NodeState(NodeId id_, Position position_, WeibullParams w, std::uint64_t seed, double deployed_at_)
    : id(id_),
      position(position_),
      deployed_weibull(w),
      weibull(w),
      last_accrual(deployed_at_),
      deployed_at(deployed_at_),
      slept_at(deployed_at_),
      rng(seed, Stream::Node, id_),
      link_rng(seed, Stream::Link, id_) {}

void settle_energy(NodeState& node, const ProtocolContext& ctx) {
  if (ctx.now > node.last_accrual) {
    accrue(node.energy, ctx.energy, node.status, ctx.now - node.last_accrual);
    node.last_accrual = ctx.now;
  }
}

void set_status(NodeState& node, NodeStatus to, const ProtocolContext& ctx) {
  settle_energy(node, ctx);
  node.status = to;
  if (to == NodeStatus::Sleep) node.slept_at = ctx.now;
}

double current_tx_power(const NodeState& node, const ProtocolConfig& config) {
  return config.power_levels.at(node.tx_level);
}

}  // namespace sentinet

#pragma once

#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "sentinet/energy.hpp"
#include "sentinet/engine.hpp"
#include "sentinet/geometry.hpp"
#include "sentinet/message.hpp"
#include "sentinet/rng.hpp"
#include "sentinet/status.hpp"
#include "sentinet/weibull.hpp"

namespace sentinet {

enum class LinkControlMode : std::uint8_t { Off, Standalone, Piggybacked, Both };

std::string_view to_string(LinkControlMode mode) noexcept;
LinkControlMode parse_link_control(std::string_view text);

constexpr bool uses_conn_timer(LinkControlMode m) noexcept {
  return m == LinkControlMode::Standalone || m == LinkControlMode::Both;
}
constexpr bool uses_probe_evidence(LinkControlMode m) noexcept {
  return m == LinkControlMode::Piggybacked || m == LinkControlMode::Both;
}

/// Which clock feeds the hazard when a reserve node updates its probe rate.
enum class HazardClock : std::uint8_t {
  Network,  // time since deployment
  Cycle,    // length of the sleep/probe cycle that just ended
  Off,      // never update; every sleep is drawn from the deployment parameters
};

std::string_view to_string(HazardClock clock) noexcept;
HazardClock parse_hazard_clock(std::string_view text);

struct ProtocolConfig {
  double t_w = 0.1;
  double t_c_min = 5.0;
  double t_c_max = 15.0;
  double reply_jitter = 0.09;
  LinkControlMode link_control = LinkControlMode::Piggybacked;
  int lqi_threshold = 7;
  std::vector<double> power_levels{-10.0, -5.0};
  HazardClock hazard_clock = HazardClock::Network;

  void validate() const;
};

class ProtocolViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct NodeState {
  NodeState(NodeId id, Position position, WeibullParams weibull, std::uint64_t seed, double deployed_at = 0.0);

  NodeId id;
  Position position;
  NodeStatus status = NodeStatus::Sleep;
  WeibullParams deployed_weibull;
  WeibullParams weibull;  // current, after probe-rate updates
  bool rcv_msg = false;
  EventHandle cycle_timer;  // t_s or t_w (at most one pending)
  EventHandle conn_timer;   // t_c
  std::size_t tx_level = 0;
  EnergyLedger energy;
  double last_accrual = 0.0;
  double deployed_at = 0.0;
  double slept_at = 0.0;
  bool conn_round_open = false;
  bool conn_evidence = false;
  std::uint64_t escalations = 0;
  Substream rng;
  // Kept apart from `rng` so that switching link-control mode leaves the
  // sleep schedule of a seed untouched.
  Substream link_rng;
};

enum class TimerSlot : std::uint8_t { Cycle, Conn };

struct Send {
  Message msg;
  double delay = 0.0;
};
struct Arm {
  TimerSlot slot;
  EventKind kind;
  double delay;
};
struct Disarm {
  TimerSlot slot;
};
using Action = std::variant<Send, Arm, Disarm>;
using Actions = std::vector<Action>;

struct ProtocolContext {
  const ProtocolConfig& config;
  const EnergyConfig& energy;
  double now;
};

/// Closes the energy interval of the current status and switches to `to`.
void set_status(NodeState& node, NodeStatus to, const ProtocolContext& ctx);

/// Brings the energy ledger up to ctx.now without changing status.
void settle_energy(NodeState& node, const ProtocolContext& ctx);

double current_tx_power(const NodeState& node, const ProtocolConfig& config);

}  // namespace sentinet

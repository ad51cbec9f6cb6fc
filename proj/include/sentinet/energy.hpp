#pragma once

#include <span>
#include <vector>

#include "sentinet/status.hpp"

namespace sentinet {

struct EnergyConfig {
  double sleep_draw = 3e-6;        // W
  double probe_awake_draw = 0.062;  // W, radio listening during t_w
  double active_draw = 0.062;       // W
  std::vector<double> tx_levels{-10.0, -5.0};  // dBm, parallel to tx_draw
  std::vector<double> tx_draw{0.040, 0.046};   // W while transmitting at that level

  void validate() const;
  double draw(NodeStatus status) const noexcept;
};

/// Per-node joules, split by where they were spent.
struct EnergyLedger {
  double sleep = 0.0;
  double probe = 0.0;
  double active = 0.0;
  double tx = 0.0;

  double total() const noexcept { return sleep + probe + active + tx; }
};

/// Adds draw(status) * dt to the ledger and returns the joules added.
/// DEAD accrues nothing; negative dt throws.
double accrue(EnergyLedger& ledger, const EnergyConfig& config, NodeStatus status, double dt);

/// Joules for one frame at `level_dbm`; throws for a level with no configured draw.
double tx_cost(const EnergyConfig& config, double level_dbm, double frame_duration);

struct EnergySummary {
  double total = 0.0;
  double mean_per_node = 0.0;
  EnergyLedger by_state{};
};

EnergySummary summarize(std::span<const EnergyLedger> ledgers);

}  // namespace sentinet

#include "sentinet/energy.hpp"

#include <stdexcept>
#include <string>

namespace sentinet {

void EnergyConfig::validate() const {
  if (sleep_draw < 0.0 || probe_awake_draw < 0.0 || active_draw < 0.0) {
    throw std::invalid_argument("energy: draws must be non-negative");
  }
  if (tx_levels.size() != tx_draw.size()) {
    throw std::invalid_argument("energy: tx draw must be given for every power level");
  }
  for (double w : tx_draw) {
    if (w < 0.0) throw std::invalid_argument("energy: tx draw must be non-negative");
  }
}

double EnergyConfig::draw(NodeStatus status) const noexcept {
  switch (status) {
    case NodeStatus::Sleep: return sleep_draw;
    case NodeStatus::Probe: return probe_awake_draw;
    case NodeStatus::Active: return active_draw;
    case NodeStatus::Dead: return 0.0;
  }
  return 0.0;
}

double accrue(EnergyLedger& ledger, const EnergyConfig& config, NodeStatus status, double dt) {
  if (dt < 0.0) throw std::invalid_argument("energy: negative interval " + std::to_string(dt));
  const double joules = config.draw(status) * dt;
  switch (status) {
    case NodeStatus::Sleep: ledger.sleep += joules; break;
    case NodeStatus::Probe: ledger.probe += joules; break;
    case NodeStatus::Active: ledger.active += joules; break;
    case NodeStatus::Dead: break;
  }
  return joules;
}

double tx_cost(const EnergyConfig& config, double level_dbm, double frame_duration) {
  for (std::size_t i = 0; i < config.tx_levels.size(); ++i) {
    if (config.tx_levels[i] == level_dbm) return config.tx_draw[i] * frame_duration;
  }
  throw std::invalid_argument("energy: no tx draw configured for " + std::to_string(level_dbm) + " dBm");
}

EnergySummary summarize(std::span<const EnergyLedger> ledgers) {
  EnergySummary s;
  for (const EnergyLedger& l : ledgers) {
    s.by_state.sleep += l.sleep;
    s.by_state.probe += l.probe;
    s.by_state.active += l.active;
    s.by_state.tx += l.tx;
  }
  s.total = s.by_state.total();
  s.mean_per_node = ledgers.empty() ? 0.0 : s.total / static_cast<double>(ledgers.size());
  return s;
}

}  // namespace sentinet

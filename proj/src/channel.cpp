#include "sentinet/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sentinet/rng.hpp"

namespace sentinet {

void RadioConfig::validate() const {
  if (power_levels.empty()) throw std::invalid_argument("radio: at least one power level required");
  for (std::size_t i = 1; i < power_levels.size(); ++i) {
    if (!(power_levels[i] > power_levels[i - 1])) {
      throw std::invalid_argument("radio: power levels must be strictly increasing");
    }
  }
  if (!(path_loss_exponent > 0.0)) throw std::invalid_argument("radio: path loss exponent must be positive");
  if (shadowing_sigma < 0.0) throw std::invalid_argument("radio: shadowing sigma must be non-negative");
  if (sensitivity < noise_floor) throw std::invalid_argument("radio: sensitivity must be >= noise floor");
  if (!(lqi_snr_min < lqi_snr_max)) throw std::invalid_argument("radio: lqi_snr_min must be < lqi_snr_max");
  if (lqi_threshold < 0 || lqi_threshold > 10) throw std::invalid_argument("radio: lqi threshold must be in 0..10");
  if (!(tx_duration > 0.0)) throw std::invalid_argument("radio: frame duration must be positive");
}

double path_loss_db(const RadioConfig& radio, double distance) {
  if (distance < 0.0 || std::isnan(distance)) {
    throw std::invalid_argument("distance must be non-negative");
  }
  const double d = std::max(distance, kMinDistance);
  return radio.reference_loss + 10.0 * radio.path_loss_exponent * std::log10(d);
}

double rx_power_dbm(const RadioConfig& radio, double tx_power_dbm, double distance, double shadowing_db) {
  return tx_power_dbm - (path_loss_db(radio, distance) + shadowing_db);
}

int compute_lqi(const RadioConfig& radio, double rx_power_dbm) {
  const double snr = rx_power_dbm - radio.noise_floor;
  const double x = std::clamp((snr - radio.lqi_snr_min) / (radio.lqi_snr_max - radio.lqi_snr_min), 0.0, 1.0);
  return static_cast<int>(std::lround(10.0 * x));
}

int deterministic_lqi(const RadioConfig& radio, double tx_power_dbm, double distance) {
  return compute_lqi(radio, rx_power_dbm(radio, tx_power_dbm, distance, 0.0));
}

Channel::Channel(RadioConfig radio, std::span<const Position> positions, std::uint64_t seed)
    : radio_(std::move(radio)),
      positions_(positions.begin(), positions.end()),
      seed_(seed),
      sent_by_node_(positions.size(), 0),
      arrivals_(positions.size()) {
  radio_.validate();
  const std::size_t n = positions_.size();
  path_loss_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      path_loss_[i * n + j] = path_loss_db(radio_, sentinet::distance(positions_[i], positions_[j]));
    }
  }
}

double Channel::distance(NodeId a, NodeId b) const {
  return sentinet::distance(positions_.at(a), positions_.at(b));
}

double Channel::shadowing(NodeId sender, std::uint64_t sender_frame, NodeId receiver) const {
  const CounterRng rng(seed_, Stream::Shadowing, (static_cast<std::uint64_t>(sender) << 32) | receiver);
  return radio_.shadowing_sigma * rng.normal(sender_frame);
}

void Channel::note_arrival(NodeId at, const Arrival& arrival) {
  auto& list = arrivals_[at];
  const double horizon = arrival.start - 2.0 * radio_.tx_duration;
  std::erase_if(list, [horizon](const Arrival& a) { return a.end < horizon; });
  list.push_back(arrival);
}

bool Channel::clean_at(NodeId at, const Frame& frame, std::uint64_t id) const {
  for (const Arrival& a : arrivals_[at]) {
    if (a.frame == id) continue;
    if (a.start < frame.end && frame.start < a.end) return false;
  }
  return true;
}

}  // namespace sentinet

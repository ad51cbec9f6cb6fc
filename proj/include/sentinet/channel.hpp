#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "sentinet/geometry.hpp"
#include "sentinet/message.hpp"

namespace sentinet {

struct RadioConfig {
  std::vector<double> power_levels{-10.0, -5.0};  // dBm, strictly increasing
  double path_loss_exponent = 2.4;
  double reference_loss = 55.0;  // dB at 1 m
  double shadowing_sigma = 4.0;  // dB
  double noise_floor = -100.0;   // dBm
  double sensitivity = -95.0;    // dBm
  int lqi_threshold = 7;
  double lqi_snr_min = 0.0;   // dB
  double lqi_snr_max = 20.0;  // dB
  double tx_duration = 0.004;  // s per frame

  /// Throws std::invalid_argument on the first violated invariant.
  void validate() const;
};

inline constexpr double kMinDistance = 0.01;  // co-located nodes

/// Log-distance path loss in dB (distance clamped to kMinDistance).
double path_loss_db(const RadioConfig& radio, double distance);

double rx_power_dbm(const RadioConfig& radio, double tx_power_dbm, double distance, double shadowing_db);

/// Normalized SNR mapping onto 0..10.
int compute_lqi(const RadioConfig& radio, double rx_power_dbm);

/// LQI a frame sent at `tx_power_dbm` would have over `distance` without shadowing.
int deterministic_lqi(const RadioConfig& radio, double tx_power_dbm, double distance);

struct Reception {
  NodeId receiver = 0;
  int lqi = 0;
  bool addressed = false;  // false: an overheard unicast frame

  friend bool operator==(const Reception&, const Reception&) = default;
};

/// Shared medium on the 2-D field. A frame is heard at every listening node
/// where it arrives at or above sensitivity; any two frames heard at the same
/// node that overlap in time destroy each other there (no capture). A node
/// transmitting cannot receive.
class Channel {
 public:
  Channel(RadioConfig radio, std::span<const Position> positions, std::uint64_t seed);

  const RadioConfig& radio() const noexcept { return radio_; }
  std::size_t node_count() const noexcept { return positions_.size(); }
  double distance(NodeId a, NodeId b) const;

  /// Registers a frame starting at `now`. `listening(id)` tells which nodes are
  /// awake and alive at frame start. Returns the frame id (also written to msg.frame).
  template <class Listening>
  std::uint64_t begin(Message& msg, double now, Listening&& listening);

  /// Resolves the frame at its end time. `listening(id)` is re-checked for
  /// every candidate receiver. Overheard unicast frames are reported with
  /// addressed = false.
  template <class Listening>
  std::vector<Reception> deliver(std::uint64_t frame, double now, Listening&& listening);

  std::size_t frames_in_flight() const noexcept { return frames_.size(); }

 private:
  struct Arrival {
    std::uint64_t frame;
    double start;
    double end;
  };
  struct Frame {
    Message msg;
    double start;
    double end;
    std::vector<std::pair<NodeId, double>> heard;  // receiver, rx dBm
  };

  double shadowing(NodeId sender, std::uint64_t sender_frame, NodeId receiver) const;
  void note_arrival(NodeId at, const Arrival& arrival);
  bool clean_at(NodeId at, const Frame& frame, std::uint64_t id) const;

  RadioConfig radio_;
  std::vector<Position> positions_;
  std::vector<double> path_loss_;  // row-major n x n
  std::uint64_t seed_;
  std::vector<std::uint64_t> sent_by_node_;
  std::vector<std::vector<Arrival>> arrivals_;
  std::unordered_map<std::uint64_t, Frame> frames_;
  std::uint64_t next_frame_ = 0;
};

template <class Listening>
std::uint64_t Channel::begin(Message& msg, double now, Listening&& listening) {
  const std::uint64_t id = next_frame_++;
  msg.frame = id;
  msg.tx_time = now;
  Frame frame{msg, now, now + radio_.tx_duration, {}};
  const std::uint64_t sender_frame = sent_by_node_[msg.sender]++;
  const std::size_t n = positions_.size();
  const double* row = path_loss_.data() + static_cast<std::size_t>(msg.sender) * n;
  for (NodeId r = 0; r < n; ++r) {
    if (r == msg.sender || !listening(r)) continue;
    const double shadow = radio_.shadowing_sigma > 0.0 ? shadowing(msg.sender, sender_frame, r) : 0.0;
    const double rx = msg.tx_power_dbm - (row[r] + shadow);
    if (rx >= radio_.sensitivity) {
      frame.heard.emplace_back(r, rx);
      note_arrival(r, Arrival{id, frame.start, frame.end});
    }
  }
  note_arrival(msg.sender, Arrival{id, frame.start, frame.end});
  frames_.emplace(id, std::move(frame));
  return id;
}

template <class Listening>
std::vector<Reception> Channel::deliver(std::uint64_t id, double /*now*/, Listening&& listening) {
  std::vector<Reception> out;
  auto it = frames_.find(id);
  if (it == frames_.end()) return out;
  const Frame& frame = it->second;
  for (const auto& [r, rx] : frame.heard) {
    if (!listening(r) || !clean_at(r, frame, id)) continue;
    const bool addressed = frame.msg.is_broadcast() || frame.msg.addressee == r;
    out.push_back(Reception{r, compute_lqi(radio_, rx), addressed});
  }
  frames_.erase(it);
  return out;
}

}  // namespace sentinet

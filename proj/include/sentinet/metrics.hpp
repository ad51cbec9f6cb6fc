#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sentinet/channel.hpp"
#include "sentinet/geometry.hpp"
#include "sentinet/message.hpp"
#include "sentinet/status.hpp"

namespace sentinet {

struct NodeView {
  NodeId id = 0;
  Position position;
  NodeStatus status = NodeStatus::Sleep;
  double tx_dbm = 0.0;
  double energy_j = 0.0;
};

struct Snapshot {
  double time = 0.0;
  std::vector<NodeView> nodes;
  std::array<std::uint64_t, kMessageKindCount> messages{};
};

/// Cell-center sample points tiling the field at `step` spacing.
class CoverageGrid {
 public:
  CoverageGrid(Field field, double step);

  std::size_t size() const noexcept { return xs_.size(); }
  const std::vector<double>& xs() const noexcept { return xs_; }
  const std::vector<double>& ys() const noexcept { return ys_; }

  /// Fraction of points within `sensing_range` of any of `sensors`.
  double fraction(const std::vector<Position>& sensors, double sensing_range) const;

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

double coverage_fraction(const Snapshot& snapshot, Field field, double sensing_range, double grid_step);

struct ComponentStats {
  std::size_t component_count = 0;
  std::size_t isolated_count = 0;
  friend bool operator==(const ComponentStats&, const ComponentStats&) = default;
};

/// Connected components of an undirected graph given by a symmetric predicate.
ComponentStats graph_components(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& edge);

/// Components of the ACTIVE nodes; two sentinels are linked when the
/// zero-shadowing LQI at their current tx levels meets the threshold both ways.
ComponentStats sentinel_components(const Snapshot& snapshot, const RadioConfig& radio);

std::array<std::size_t, kNodeStatusCount> census(const Snapshot& snapshot);

struct MetricsRow {
  double time_s = 0.0;
  std::size_t n_sleep = 0;
  std::size_t n_probe = 0;
  std::size_t n_active = 0;
  std::size_t n_dead = 0;
  double coverage = 0.0;
  std::size_t components = 0;
  std::size_t isolated = 0;
  std::array<std::uint64_t, kMessageKindCount> messages{};
  double energy_total_j = 0.0;
  double energy_mean_j = 0.0;
};

inline constexpr const char* kMetricsCsvHeader =
    "time_s,n_sleep,n_probe,n_active,n_dead,coverage,components,isolated,msgs_probe,msgs_probe_reply,"
    "msgs_conn,msgs_conn_reply,energy_total_j,energy_mean_j";

std::string to_csv_line(const MetricsRow& row);

}  // namespace sentinet

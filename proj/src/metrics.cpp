#include "sentinet/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "sentinet/simd/coverage_kernels.hpp"

namespace sentinet {

CoverageGrid::CoverageGrid(Field field, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
  const auto nx = static_cast<std::size_t>(std::ceil(field.width / step - 1e-9));
  const auto ny = static_cast<std::size_t>(std::ceil(field.height / step - 1e-9));
  xs_.reserve(nx * ny);
  ys_.reserve(nx * ny);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      xs_.push_back((static_cast<double>(ix) + 0.5) * step);
      ys_.push_back((static_cast<double>(iy) + 0.5) * step);
    }
  }
}

double CoverageGrid::fraction(const std::vector<Position>& sensors, double sensing_range) const {
  if (xs_.empty() || sensors.empty()) return 0.0;
  std::vector<double> sx(sensors.size());
  std::vector<double> sy(sensors.size());
  for (std::size_t i = 0; i < sensors.size(); ++i) {
    sx[i] = sensors[i].x;
    sy[i] = sensors[i].y;
  }
  const std::size_t hit = simd::count_covered({xs_, ys_}, {sx, sy}, sensing_range * sensing_range);
  return static_cast<double>(hit) / static_cast<double>(xs_.size());
}

double coverage_fraction(const Snapshot& snapshot, Field field, double sensing_range, double grid_step) {
  std::vector<Position> active;
  for (const NodeView& n : snapshot.nodes) {
    if (n.status == NodeStatus::Active) active.push_back(n.position);
  }
  return CoverageGrid(field, grid_step).fraction(active, sensing_range);
}

ComponentStats graph_components(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& edge) {
  ComponentStats stats;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    ++stats.component_count;
    std::size_t size = 0;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      ++size;
      for (std::size_t v = 0; v < n; ++v) {
        if (!seen[v] && edge(u, v)) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    if (size == 1) ++stats.isolated_count;
  }
  return stats;
}

ComponentStats sentinel_components(const Snapshot& snapshot, const RadioConfig& radio) {
  std::vector<const NodeView*> active;
  for (const NodeView& n : snapshot.nodes) {
    if (n.status == NodeStatus::Active) active.push_back(&n);
  }
  return graph_components(active.size(), [&](std::size_t i, std::size_t j) {
    const NodeView& a = *active[i];
    const NodeView& b = *active[j];
    const double d = distance(a.position, b.position);
    return deterministic_lqi(radio, a.tx_dbm, d) >= radio.lqi_threshold &&
           deterministic_lqi(radio, b.tx_dbm, d) >= radio.lqi_threshold;
  });
}

std::array<std::size_t, kNodeStatusCount> census(const Snapshot& snapshot) {
  std::array<std::size_t, kNodeStatusCount> c{};
  for (const NodeView& n : snapshot.nodes) ++c[static_cast<std::size_t>(n.status)];
  return c;
}

std::string to_csv_line(const MetricsRow& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.6f,%zu,%zu,%zu,%zu,%.6f,%zu,%zu,%llu,%llu,%llu,%llu,%.9g,%.9g", r.time_s,
                r.n_sleep, r.n_probe, r.n_active, r.n_dead, r.coverage, r.components, r.isolated,
                static_cast<unsigned long long>(r.messages[0]), static_cast<unsigned long long>(r.messages[1]),
                static_cast<unsigned long long>(r.messages[2]), static_cast<unsigned long long>(r.messages[3]),
                r.energy_total_j, r.energy_mean_j);
  return buf;
}

}  // namespace sentinet

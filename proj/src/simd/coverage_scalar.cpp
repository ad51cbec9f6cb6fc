#include "sentinet/simd/coverage_kernels.hpp"

namespace sentinet::simd {

std::size_t count_covered_scalar(PointsSoA points, PointsSoA sensors, double radius_sq) noexcept {
  const std::size_t n = points.x.size();
  const std::size_t m = sensors.x.size();
  std::size_t covered = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double px = points.x[i];
    const double py = points.y[i];
    for (std::size_t j = 0; j < m; ++j) {
      const double dx = px - sensors.x[j];
      const double dy = py - sensors.y[j];
      if (dx * dx + dy * dy <= radius_sq) {
        ++covered;
        break;
      }
    }
  }
  return covered;
}

}  // namespace sentinet::simd

// Compiled with -mavx2 only; dispatch guarantees it runs on AVX2 hardware.
#include <immintrin.h>

#include <bit>

#include "sentinet/simd/coverage_kernels.hpp"

namespace sentinet::simd {

std::size_t count_covered_avx2(PointsSoA points, PointsSoA sensors, double radius_sq) noexcept {
  const std::size_t n = points.x.size();
  const std::size_t m = sensors.x.size();
  const __m256d r2 = _mm256_set1_pd(radius_sq);
  std::size_t covered = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d px = _mm256_loadu_pd(points.x.data() + i);
    const __m256d py = _mm256_loadu_pd(points.y.data() + i);
    __m256d hit = _mm256_setzero_pd();
    for (std::size_t j = 0; j < m; ++j) {
      const __m256d dx = _mm256_sub_pd(px, _mm256_set1_pd(sensors.x[j]));
      const __m256d dy = _mm256_sub_pd(py, _mm256_set1_pd(sensors.y[j]));
      const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
      hit = _mm256_or_pd(hit, _mm256_cmp_pd(d2, r2, _CMP_LE_OQ));
      if (_mm256_movemask_pd(hit) == 0xF) break;
    }
    covered += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(_mm256_movemask_pd(hit))));
  }
  if (i < n) {
    covered += count_covered_scalar(PointsSoA{points.x.subspan(i), points.y.subspan(i)}, sensors, radius_sq);
  }
  return covered;
}

}  // namespace sentinet::simd

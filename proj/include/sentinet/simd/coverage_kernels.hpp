#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Grid-coverage counting: how many sample points lie within `radius_sq`
// (squared distance, inclusive) of at least one sensor. Every variant computes
// dx*dx + dy*dy in double precision in the same order, so all variants return
// identical counts.

namespace sentinet::simd {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

struct PointsSoA {
  std::span<const double> x;
  std::span<const double> y;
};

std::size_t count_covered_scalar(PointsSoA points, PointsSoA sensors, double radius_sq) noexcept;

#if defined(SENTINET_HAVE_AVX2)
std::size_t count_covered_avx2(PointsSoA points, PointsSoA sensors, double radius_sq) noexcept;
#endif

using CoverageKernel = std::size_t (*)(PointsSoA, PointsSoA, double) noexcept;

/// True if the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Best available variant; SENTINET_ISA=scalar in the environment forces the reference path.
Isa active_isa() noexcept;

CoverageKernel coverage_kernel(Isa isa) noexcept;

inline std::size_t count_covered(PointsSoA points, PointsSoA sensors, double radius_sq) noexcept {
  return coverage_kernel(active_isa())(points, sensors, radius_sq);
}

}  // namespace sentinet::simd

#include <cstdlib>
#include <string_view>

#include "sentinet/simd/coverage_kernels.hpp"

namespace sentinet::simd {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "?";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(SENTINET_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept {
  static const Isa chosen = [] {
    const char* forced = std::getenv("SENTINET_ISA");
    if (forced != nullptr && std::string_view(forced) == "scalar") return Isa::Scalar;
    return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  }();
  return chosen;
}

CoverageKernel coverage_kernel(Isa isa) noexcept {
#if defined(SENTINET_HAVE_AVX2)
  if (isa == Isa::Avx2 && isa_available(Isa::Avx2)) return &count_covered_avx2;
#endif
  (void)isa;
  return &count_covered_scalar;
}

}  // namespace sentinet::simd

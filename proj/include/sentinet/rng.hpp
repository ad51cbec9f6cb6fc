#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace sentinet {

/// Name recorded in every output file so results can be re-derived.
inline constexpr std::string_view kGeneratorName = "splitmix64-counter/v1";

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent purposes for which random numbers are drawn.
enum class Stream : std::uint64_t {
  Deploy = 1,     // node positions
  Node = 2,       // per-node scheduling draws (sleep times, probe-reply jitter)
  Shadowing = 3,  // per-(frame, receiver) shadowing
  Aux = 4,        // tests and tooling
  Link = 5,       // per-node link-control draws (t_c, conn-reply jitter)
};

/// Counter-based generator. Every output is a pure function of
/// (seed, stream, key, counter); there is no hidden state, so substreams for
/// different keys never interact.
class CounterRng {
 public:
  constexpr CounterRng(std::uint64_t seed, Stream stream, std::uint64_t key) noexcept
      : base_(splitmix64(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(stream)) ^ key)) {}

  constexpr std::uint64_t bits(std::uint64_t counter) const noexcept {
    return splitmix64(base_ ^ splitmix64(counter));
  }

  /// Uniform on the open interval (0, 1); never returns 0 or 1.
  constexpr double uniform(std::uint64_t counter) const noexcept {
    return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1p-53;
  }

  /// Standard normal via Box-Muller on counters 2c and 2c+1.
  double normal(std::uint64_t counter) const noexcept {
    const double u1 = uniform(2 * counter);
    const double u2 = uniform(2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t base_;
};

/// Sequential view over a CounterRng: draw index advances by one per call.
class Substream {
 public:
  constexpr Substream(std::uint64_t seed, Stream stream, std::uint64_t key) noexcept
      : rng_(seed, stream, key) {}

  double uniform() noexcept { return rng_.uniform(next_++); }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  std::uint64_t draws() const noexcept { return next_; }

 private:
  CounterRng rng_;
  std::uint64_t next_ = 0;
};

}  // namespace sentinet

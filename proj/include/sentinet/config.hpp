#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sentinet/channel.hpp"
#include "sentinet/energy.hpp"
#include "sentinet/geometry.hpp"
#include "sentinet/message.hpp"
#include "sentinet/node.hpp"
#include "sentinet/weibull.hpp"

namespace sentinet {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what, std::string key = {})
      : std::runtime_error(what), key_(std::move(key)) {}
  /// Offending key when the error came from validation, else empty.
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Where each key was last set, e.g. "run.cfg:3" or "--nodes".
using ConfigOrigins = std::map<std::string, std::string, std::less<>>;

/// One fault to inject. `node=ID@T` kills a node; `sentinels-at=T[:count=K]`
/// kills the K lowest-id ACTIVE nodes at T (all of them without a count).
struct FailureSpec {
  enum class Kind { Node, SentinelsAt };
  Kind kind = Kind::Node;
  NodeId node = 0;
  double time = 0.0;
  std::optional<std::size_t> count;

  static FailureSpec parse(std::string_view text);
  std::string to_string() const;
};

struct RunConfig {
  Field field{100.0, 100.0};
  std::size_t node_count = 50;
  double duration = 1000.0;
  std::uint64_t seed = 42;
  double lambda = 0.05;  // Weibull scale, 1/s
  double beta = 2.0;     // Weibull shape
  RadioConfig radio{};
  EnergyConfig energy{};
  LinkControlMode link_control = LinkControlMode::Piggybacked;
  double sensing_range = 15.0;
  double grid_step = 1.0;
  double t_w = 0.1;
  double t_c_min = 5.0;
  double t_c_max = 15.0;
  double reply_jitter = 0.09;
  HazardClock hazard_clock = HazardClock::Network;
  double metric_interval = 1.0;
  double heal_epsilon = 0.05;
  std::vector<FailureSpec> failures;

  /// Throws ConfigError naming the offending key.
  void validate() const;

  WeibullParams weibull() const { return WeibullParams(lambda, beta); }
  ProtocolConfig protocol() const;

  /// Canonical key=value pairs; applying them to a default config reproduces this one.
  std::vector<std::pair<std::string, std::string>> to_pairs() const;
  std::string echo() const;
  std::uint64_t hash() const;
};

/// Sets one key. Throws ConfigError for unknown keys or unparsable values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Reads `key=value` lines ('#' comments) on top of `base`. Errors carry file:line.
RunConfig load_config_file(const std::filesystem::path& path, RunConfig base = {}, ConfigOrigins* origins = nullptr);
RunConfig parse_config_text(std::string_view text, std::string_view origin, RunConfig base = {},
                            ConfigOrigins* origins = nullptr);

std::string format_double(double v);
std::vector<double> parse_double_list(std::string_view text);

}  // namespace sentinet

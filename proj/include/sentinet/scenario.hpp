#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sentinet/config.hpp"
#include "sentinet/energy.hpp"
#include "sentinet/metrics.hpp"
#include "sentinet/simulation.hpp"

namespace sentinet {

struct HealingReport {
  std::string spec;
  double failure_time = 0.0;
  std::size_t killed = 0;
  bool clamped = false;
  bool skipped = false;
  double coverage_before = 0.0;
  std::optional<double> recovery_time;  // seconds after the failure; empty if never
};

/// For every injected failure: seconds until coverage is back within
/// `epsilon` of the last sample taken before the failure.
std::vector<HealingReport> healing_report(const Simulation& sim);

struct RunResult {
  EnergySummary energy;
  MetricsRow final_row;
  std::uint64_t frames_total = 0;
  std::uint64_t trace_digest = 0;
  std::vector<HealingReport> healing;
  std::vector<std::string> warnings;
};

/// Run-metadata line placed at the head of every output file.
std::string metadata_comment(const RunConfig& config);

/// Creates `dir`; refuses a non-empty existing directory unless `force`.
void prepare_output_dir(const std::filesystem::path& dir, bool force);

/// Writes metrics.csv, snapshot.json, summary.json and config.txt (plus
/// healing.json when failures were injected).
void write_run_outputs(const std::filesystem::path& dir, const Simulation& sim,
                       std::optional<double> wall_seconds = std::nullopt);

RunResult summarize_run(const Simulation& sim);

/// Runs one simulation and writes its outputs.
RunResult execute_run(const RunConfig& config, const std::filesystem::path& dir, bool force,
                      bool record_wall_time = false);

enum class SweepAxis { Beta, Nodes, LinkControl };
SweepAxis parse_sweep_axis(std::string_view text);
std::string_view to_string(SweepAxis axis) noexcept;

struct SweepSpec {
  RunConfig base;
  SweepAxis axis = SweepAxis::Beta;
  std::vector<std::string> values;
  std::size_t reps = 1;
  std::filesystem::path out;
  bool force = false;
  unsigned jobs = 1;
  bool record_wall_time = false;
};

struct SweepPoint {
  std::string axis_value;
  std::size_t rep = 0;
  std::filesystem::path dir;
  RunResult result;
};

/// Configuration for one point of the sweep; repetition k uses seed + k.
RunConfig sweep_point_config(const SweepSpec& spec, const std::string& value, std::size_t rep);

/// Executes every axis value x repetition and writes aggregate.csv. Points are
/// independent, so `jobs` > 1 runs them on worker threads.
std::vector<SweepPoint> run_sweep(const SweepSpec& spec);

}  // namespace sentinet

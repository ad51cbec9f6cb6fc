#include "sentinet/scenario.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <thread>

#include "sentinet/rng.hpp"

namespace sentinet {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string hex64(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

ordered_json meta_json(const RunConfig& config) {
  ordered_json m;
  m["seed"] = config.seed;
  m["config_hash"] = hex64(config.hash());
  m["generator"] = std::string(kGeneratorName);
  return m;
}

ordered_json config_json(const RunConfig& config) {
  ordered_json c = ordered_json::object();
  ordered_json kills = ordered_json::array();
  for (const auto& [k, v] : config.to_pairs()) {
    if (k == "kill") {
      kills.push_back(v);
    } else {
      c[k] = v;
    }
  }
  c["kill"] = kills;
  return c;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

ordered_json energy_json(const EnergySummary& e) {
  ordered_json j;
  j["total_j"] = e.total;
  j["mean_per_node_j"] = e.mean_per_node;
  j["by_state"] = {{"sleep_j", e.by_state.sleep},
                   {"probe_j", e.by_state.probe},
                   {"active_j", e.by_state.active},
                   {"tx_j", e.by_state.tx}};
  return j;
}

}  // namespace

std::vector<HealingReport> healing_report(const Simulation& sim) {
  std::vector<HealingReport> out;
  const auto& rows = sim.rows();
  const double eps = sim.config().heal_epsilon;
  for (const FailureRecord& f : sim.failures()) {
    HealingReport r;
    r.spec = f.spec.to_string();
    r.failure_time = f.time;
    r.killed = f.killed.size();
    r.clamped = f.clamped;
    r.skipped = f.skipped;
    if (f.skipped) {
      out.push_back(r);
      continue;
    }
    for (const MetricsRow& row : rows) {
      if (row.time_s < f.time) r.coverage_before = row.coverage;
    }
    for (const MetricsRow& row : rows) {
      if (row.time_s >= f.time && row.coverage >= r.coverage_before - eps) {
        r.recovery_time = row.time_s - f.time;
        break;
      }
    }
    out.push_back(r);
  }
  return out;
}

std::string metadata_comment(const RunConfig& config) {
  return "# seed=" + std::to_string(config.seed) + " config_hash=" + hex64(config.hash()) +
         " generator=" + std::string(kGeneratorName);
}

void prepare_output_dir(const fs::path& dir, bool force) {
  if (fs::exists(dir)) {
    if (!fs::is_directory(dir)) throw std::runtime_error(dir.string() + " exists and is not a directory");
    if (!fs::is_empty(dir) && !force) {
      throw std::runtime_error("output directory " + dir.string() + " is not empty (use --force to overwrite)");
    }
  }
  fs::create_directories(dir);
}

RunResult summarize_run(const Simulation& sim) {
  RunResult r;
  r.energy = sim.energy_summary();
  r.final_row = sim.rows().empty() ? sim.sample() : sim.rows().back();
  r.frames_total = sim.frames_total();
  r.trace_digest = sim.trace_digest();
  r.healing = healing_report(sim);
  r.warnings = sim.warnings();
  return r;
}

void write_run_outputs(const fs::path& dir, const Simulation& sim, std::optional<double> wall_seconds) {
  const RunConfig& config = sim.config();

  std::string csv = metadata_comment(config) + "\n" + kMetricsCsvHeader + "\n";
  for (const MetricsRow& row : sim.rows()) csv += to_csv_line(row) + "\n";
  write_file(dir / "metrics.csv", csv);

  const Snapshot snap = sim.snapshot();
  ordered_json snapshot;
  snapshot["meta"] = meta_json(config);
  snapshot["time"] = snap.time;
  ordered_json nodes = ordered_json::array();
  for (const NodeView& n : snap.nodes) {
    nodes.push_back(ordered_json{{"id", n.id},
                                 {"x", n.position.x},
                                 {"y", n.position.y},
                                 {"status", std::string(to_string(n.status))},
                                 {"tx_dbm", n.tx_dbm},
                                 {"energy_j", n.energy_j}});
  }
  snapshot["nodes"] = std::move(nodes);
  write_file(dir / "snapshot.json", snapshot.dump(1) + "\n");

  const RunResult result = summarize_run(sim);
  ordered_json summary;
  summary["meta"] = meta_json(config);
  summary["seed"] = config.seed;
  summary["config"] = config_json(config);
  ordered_json totals;
  totals["energy"] = energy_json(result.energy);
  ordered_json frames;
  for (std::size_t k = 0; k < kMessageKindCount; ++k) {
    frames[std::string(to_string(static_cast<MessageKind>(k)))] = sim.frames_sent()[k];
  }
  totals["frames"] = frames;
  totals["frames_total"] = result.frames_total;
  ordered_json events;
  for (std::size_t k = 0; k < kEventKindCount; ++k) {
    events[std::string(to_string(static_cast<EventKind>(k)))] = sim.summary().dispatched[k];
  }
  totals["events"] = events;
  totals["trace_digest"] = hex64(result.trace_digest);
  const MetricsRow& last = result.final_row;
  totals["final"] = {{"time_s", last.time_s},     {"n_sleep", last.n_sleep},   {"n_probe", last.n_probe},
                     {"n_active", last.n_active}, {"n_dead", last.n_dead},     {"coverage", last.coverage},
                     {"components", last.components}, {"isolated", last.isolated}};
  summary["totals"] = totals;
  summary["warnings"] = result.warnings;
  summary["runtime_wall_s"] = wall_seconds ? ordered_json(*wall_seconds) : ordered_json(nullptr);
  write_file(dir / "summary.json", summary.dump(1) + "\n");

  write_file(dir / "config.txt", metadata_comment(config) + "\n" + config.echo());

  if (!sim.failures().empty()) {
    ordered_json heal;
    heal["meta"] = meta_json(config);
    heal["epsilon"] = config.heal_epsilon;
    ordered_json list = ordered_json::array();
    for (const HealingReport& h : result.healing) {
      list.push_back(ordered_json{{"spec", h.spec},
                                  {"failure_time_s", h.failure_time},
                                  {"killed", h.killed},
                                  {"clamped", h.clamped},
                                  {"skipped", h.skipped},
                                  {"coverage_before", h.coverage_before},
                                  {"recovery_time_s", h.recovery_time ? ordered_json(*h.recovery_time)
                                                                      : ordered_json(nullptr)}});
    }
    heal["failures"] = list;
    write_file(dir / "healing.json", heal.dump(1) + "\n");
  }
}

RunResult execute_run(const RunConfig& config, const fs::path& dir, bool force, bool record_wall_time) {
  prepare_output_dir(dir, force);
  const auto start = std::chrono::steady_clock::now();
  Simulation sim(config);
  sim.run();
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_run_outputs(dir, sim, record_wall_time ? std::optional<double>(wall) : std::nullopt);
  return summarize_run(sim);
}

SweepAxis parse_sweep_axis(std::string_view text) {
  if (text == "beta") return SweepAxis::Beta;
  if (text == "nodes") return SweepAxis::Nodes;
  if (text == "link_control" || text == "link-control") return SweepAxis::LinkControl;
  throw ConfigError("unknown sweep axis '" + std::string(text) + "' (expected beta|nodes|link_control)");
}

std::string_view to_string(SweepAxis axis) noexcept {
  switch (axis) {
    case SweepAxis::Beta: return "beta";
    case SweepAxis::Nodes: return "nodes";
    case SweepAxis::LinkControl: return "link_control";
  }
  return "?";
}

RunConfig sweep_point_config(const SweepSpec& spec, const std::string& value, std::size_t rep) {
  RunConfig c = spec.base;
  switch (spec.axis) {
    case SweepAxis::Beta: apply_setting(c, "beta", value); break;
    case SweepAxis::Nodes: apply_setting(c, "nodes", value); break;
    case SweepAxis::LinkControl: apply_setting(c, "link-control", value); break;
  }
  c.seed = spec.base.seed + rep;
  c.validate();
  return c;
}

std::vector<SweepPoint> run_sweep(const SweepSpec& spec) {
  if (spec.values.empty()) throw ConfigError("sweep: at least one axis value required");
  if (spec.reps < 1) throw ConfigError("sweep: reps must be at least 1");
  prepare_output_dir(spec.out, spec.force);

  std::vector<SweepPoint> points;
  std::vector<RunConfig> configs;
  for (const std::string& v : spec.values) {
    for (std::size_t rep = 0; rep < spec.reps; ++rep) {
      configs.push_back(sweep_point_config(spec, v, rep));
      const fs::path dir = spec.out / (std::string(to_string(spec.axis)) + "=" + v) / ("rep" + std::to_string(rep));
      points.push_back(SweepPoint{v, rep, dir, {}});
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      points[i].result = execute_run(configs[i], points[i].dir, spec.force, spec.record_wall_time);
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(spec.jobs, static_cast<unsigned>(points.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  std::string csv = "# sweep axis=" + std::string(to_string(spec.axis)) + " reps=" + std::to_string(spec.reps) + " " +
                    metadata_comment(spec.base).substr(2) + "\n";
  csv += "axis_value,rep,energy_total_j,energy_mean_j,components,coverage_final\n";
  for (const SweepPoint& p : points) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%zu,%.9g,%.9g,%zu,%.6f\n", p.axis_value.c_str(), p.rep, p.result.energy.total,
                  p.result.energy.mean_per_node, p.result.final_row.components, p.result.final_row.coverage);
    csv += buf;
  }
  write_file(spec.out / "aggregate.csv", csv);
  return points;
}

}  // namespace sentinet

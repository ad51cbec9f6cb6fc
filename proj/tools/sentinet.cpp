// sentinet: run, sweep and fault-injection front end for the simulator.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "sentinet/config.hpp"
#include "sentinet/scenario.hpp"

using namespace sentinet;

namespace {

// Flags that map one-to-one onto config keys, in the order they are applied.
constexpr std::pair<const char*, const char*> kSettingFlags[] = {
    {"nodes", "node count"},
    {"field", "field size WxH in metres"},
    {"duration", "simulated seconds"},
    {"seed", "master seed (SENTINET_SEED overrides)"},
    {"beta", "Weibull shape"},
    {"lambda", "Weibull scale, 1/s"},
    {"link-control", "off | standalone | piggybacked | both"},
    {"lqi-threshold", "escalate below this LQI (0-10)"},
    {"tx-levels", "comma-separated power levels in dBm, ascending"},
    {"tx-draw", "transmit power draw per level, W"},
    {"sensing-range", "metres"},
    {"grid-step", "coverage grid spacing in metres"},
    {"tw", "probe wait window t_w, s"},
    {"tc-min", "connectivity timer lower bound, s"},
    {"tc-max", "connectivity timer upper bound, s"},
    {"reply-jitter", "max reply delay, s"},
    {"hazard-clock", "network | cycle | off"},
    {"metric-interval", "seconds between metrics rows"},
    {"heal-epsilon", "coverage tolerance for recovery"},
    {"shadowing", "log-normal shadowing sigma, dB"},
};

struct Common {
  std::map<std::string, std::string> settings;
  std::string config_file;
  std::vector<std::string> kills;
  std::string out;
  bool force = false;
  bool wall_time = false;
};

void add_common(CLI::App* app, Common& c) {
  for (const auto& [key, help] : kSettingFlags) {
    app->add_option_function<std::string>(
        std::string("--") + key, [&c, key = key](const std::string& v) { c.settings[key] = v; }, help);
  }
  app->add_option("--config", c.config_file, "key=value configuration file; flags override it")
      ->check(CLI::ExistingFile);
  app->add_option("--out", c.out, "output directory")->required();
  app->add_flag("--force", c.force, "overwrite a non-empty output directory");
  app->add_flag("--wall-time", c.wall_time, "record runtime_wall_s in summary.json");
}

RunConfig resolve(const Common& c) {
  ConfigOrigins origins;
  RunConfig config = c.config_file.empty() ? RunConfig{} : load_config_file(c.config_file, {}, &origins);
  auto set = [&](std::string_view key, const std::string& value, const std::string& origin) {
    try {
      apply_setting(config, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(origin + ": " + e.what());
    }
    origins[std::string(key)] = origin;
  };
  for (const auto& [key, help] : kSettingFlags) {
    if (const auto it = c.settings.find(key); it != c.settings.end()) set(key, it->second, std::string("--") + key);
  }
  for (const std::string& k : c.kills) set("kill", k, "--kill");
  if (const char* env = std::getenv("SENTINET_SEED"); env != nullptr && *env != '\0') set("seed", env, "SENTINET_SEED");
  try {
    config.validate();
  } catch (const ConfigError& e) {
    const auto it = origins.find(e.key());
    if (it == origins.end()) throw;
    throw ConfigError(it->second + ": " + e.what(), e.key());
  }
  return config;
}

void print_result(const RunResult& r) {
  std::printf("energy_total_j=%.6g energy_mean_j=%.6g frames=%llu coverage=%.4f components=%zu isolated=%zu\n",
              r.energy.total, r.energy.mean_per_node, static_cast<unsigned long long>(r.frames_total),
              r.final_row.coverage, r.final_row.components, r.final_row.isolated);
  for (const std::string& w : r.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
}

void print_healing(const RunResult& r) {
  for (const HealingReport& h : r.healing) {
    if (h.skipped) {
      std::printf("%s: skipped (past duration)\n", h.spec.c_str());
      continue;
    }
    std::printf("%s: killed=%zu%s coverage_before=%.4f recovery=", h.spec.c_str(), h.killed,
                h.clamped ? " (clamped)" : "", h.coverage_before);
    if (h.recovery_time) {
      std::printf("%.3f s\n", *h.recovery_time);
    } else {
      std::printf("none\n");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weibull sentinel scheduling and link-control simulator"};
  app.require_subcommand(1);

  Common run_opts;
  CLI::App* run = app.add_subcommand("run", "one simulation");
  add_common(run, run_opts);
  run->add_option("--kill", run_opts.kills, "failure spec (repeatable)");

  Common inject_opts;
  CLI::App* inject = app.add_subcommand("inject", "one simulation with fault injection and a healing report");
  add_common(inject, inject_opts);
  inject->add_option("--kill", inject_opts.kills, "node=ID@T or sentinels-at=T[:count=K] (repeatable)")->required();

  Common sweep_opts;
  std::string axis;
  std::string values;
  std::size_t reps = 1;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  CLI::App* sweep = app.add_subcommand("sweep", "one run per axis value and repetition");
  add_common(sweep, sweep_opts);
  sweep->add_option("--kill", sweep_opts.kills, "failure spec applied to every point (repeatable)");
  sweep->add_option("--axis", axis, "beta | nodes | link_control")->required();
  sweep->add_option("--values", values, "comma-separated axis values")->required();
  sweep->add_option("--reps", reps, "repetitions per point; rep k uses seed + k");
  sweep->add_option("--jobs", jobs, "concurrent runs");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed() || inject->parsed()) {
      const Common& c = run->parsed() ? run_opts : inject_opts;
      const RunResult r = execute_run(resolve(c), c.out, c.force, c.wall_time);
      print_result(r);
      if (inject->parsed()) print_healing(r);
      return 0;
    }
    SweepSpec spec;
    spec.base = resolve(sweep_opts);
    spec.axis = parse_sweep_axis(axis);
    for (const auto& v : CLI::detail::split(values, ',')) {
      const std::string t = CLI::detail::trim_copy(v);
      if (!t.empty()) spec.values.push_back(t);
    }
    spec.reps = reps;
    spec.out = sweep_opts.out;
    spec.force = sweep_opts.force;
    spec.jobs = jobs;
    spec.record_wall_time = sweep_opts.wall_time;
    const auto points = run_sweep(spec);
    std::printf("%zu runs written under %s\n", points.size(), spec.out.string().c_str());
    return 0;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

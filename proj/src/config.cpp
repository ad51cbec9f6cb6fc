#include "sentinet/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace sentinet {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ConfigError("invalid number for '" + std::string(key) + "': '" + std::string(text) + "'");
  }
  return v;
}

template <class Int>
Int parse_int(std::string_view key, std::string_view text) {
  text = trim(text);
  Int v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("invalid integer for '" + std::string(key) + "': '" + std::string(text) + "'");
  }
  return v;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_double("list", text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

FailureSpec FailureSpec::parse(std::string_view text) {
  FailureSpec f;
  constexpr std::string_view kSentinels = "sentinels-at=";
  constexpr std::string_view kNode = "node=";
  if (text.starts_with(kSentinels)) {
    f.kind = Kind::SentinelsAt;
    std::string_view rest = text.substr(kSentinels.size());
    const auto colon = rest.find(':');
    f.time = parse_double("kill", rest.substr(0, colon));
    if (colon != std::string_view::npos) {
      std::string_view opt = rest.substr(colon + 1);
      if (!opt.starts_with("count=")) throw ConfigError("kill: expected ':count=K' in '" + std::string(text) + "'");
      f.count = parse_int<std::size_t>("kill", opt.substr(6));
    }
  } else if (text.starts_with(kNode)) {
    f.kind = Kind::Node;
    std::string_view rest = text.substr(kNode.size());
    const auto at = rest.find('@');
    if (at == std::string_view::npos) throw ConfigError("kill: expected 'node=ID@T' in '" + std::string(text) + "'");
    f.node = parse_int<NodeId>("kill", rest.substr(0, at));
    f.time = parse_double("kill", rest.substr(at + 1));
  } else {
    throw ConfigError("kill: unrecognized spec '" + std::string(text) + "' (node=ID@T or sentinels-at=T[:count=K])");
  }
  if (f.time < 0.0) throw ConfigError("kill: negative time in '" + std::string(text) + "'");
  return f;
}

std::string FailureSpec::to_string() const {
  if (kind == Kind::Node) return "node=" + std::to_string(node) + "@" + format_double(time);
  std::string s = "sentinels-at=" + format_double(time);
  if (count) s += ":count=" + std::to_string(*count);
  return s;
}

void RunConfig::validate() const {
  auto require = [](bool ok, const char* key, const std::string& what) {
    if (!ok) throw ConfigError(std::string(key) + ": " + what, key);
  };
  require(field.width > 0.0 && field.height > 0.0, "field", "dimensions must be positive");
  require(node_count >= 1, "nodes", "must be at least 1");
  require(duration > 0.0, "duration", "must be positive");
  require(lambda > 0.0, "lambda", "must be positive");
  require(beta > 0.0, "beta", "must be positive");
  require(sensing_range >= 0.0, "sensing-range", "must be non-negative");
  require(grid_step > 0.0, "grid-step", "must be positive");
  require(t_w > 0.0, "tw", "must be positive");
  require(t_c_min > 0.0, "tc-min", "must be positive");
  require(t_c_min <= t_c_max, "tc-min", "must not exceed tc-max");
  require(reply_jitter >= 0.0, "reply-jitter", "must be non-negative");
  require(reply_jitter + radio.tx_duration < t_w, "reply-jitter",
          "jitter plus one frame must fit inside the t_w reply window");
  require(metric_interval > 0.0, "metric-interval", "must be positive");
  require(heal_epsilon >= 0.0, "heal-epsilon", "must be non-negative");
  require(radio.power_levels == energy.tx_levels, "tx-draw", "one draw per tx level required");
  for (const FailureSpec& f : failures) {
    if (f.kind == FailureSpec::Kind::Node) {
      require(f.node < node_count, "kill", "unknown node id " + std::to_string(f.node));
    }
  }
  try {
    radio.validate();
    energy.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

ProtocolConfig RunConfig::protocol() const {
  ProtocolConfig p;
  p.t_w = t_w;
  p.t_c_min = t_c_min;
  p.t_c_max = t_c_max;
  p.reply_jitter = reply_jitter;
  p.link_control = link_control;
  p.lqi_threshold = radio.lqi_threshold;
  p.power_levels = radio.power_levels;
  p.hazard_clock = hazard_clock;
  return p;
}

std::vector<std::pair<std::string, std::string>> RunConfig::to_pairs() const {
  std::vector<std::pair<std::string, std::string>> kv{
      {"nodes", std::to_string(node_count)},
      {"field", format_double(field.width) + "x" + format_double(field.height)},
      {"duration", format_double(duration)},
      {"seed", std::to_string(seed)},
      {"lambda", format_double(lambda)},
      {"beta", format_double(beta)},
      {"link-control", std::string(to_string(link_control))},
      {"lqi-threshold", std::to_string(radio.lqi_threshold)},
      {"tx-levels", join(radio.power_levels)},
      {"tx-draw", join(energy.tx_draw)},
      {"sensing-range", format_double(sensing_range)},
      {"grid-step", format_double(grid_step)},
      {"tw", format_double(t_w)},
      {"tc-min", format_double(t_c_min)},
      {"tc-max", format_double(t_c_max)},
      {"reply-jitter", format_double(reply_jitter)},
      {"hazard-clock", std::string(to_string(hazard_clock))},
      {"metric-interval", format_double(metric_interval)},
      {"heal-epsilon", format_double(heal_epsilon)},
      {"shadowing", format_double(radio.shadowing_sigma)},
      {"path-loss-exponent", format_double(radio.path_loss_exponent)},
      {"reference-loss", format_double(radio.reference_loss)},
      {"noise-floor", format_double(radio.noise_floor)},
      {"sensitivity", format_double(radio.sensitivity)},
      {"lqi-snr-min", format_double(radio.lqi_snr_min)},
      {"lqi-snr-max", format_double(radio.lqi_snr_max)},
      {"frame-duration", format_double(radio.tx_duration)},
      {"sleep-draw", format_double(energy.sleep_draw)},
      {"probe-draw", format_double(energy.probe_awake_draw)},
      {"active-draw", format_double(energy.active_draw)},
  };
  for (const FailureSpec& f : failures) kv.emplace_back("kill", f.to_string());
  return kv;
}

std::string RunConfig::echo() const {
  std::string out;
  for (const auto& [k, v] : to_pairs()) out += k + "=" + v + "\n";
  return out;
}

std::uint64_t RunConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : echo()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void apply_setting(RunConfig& c, std::string_view key, std::string_view raw) {
  const std::string_view v = trim(raw);
  if (key == "nodes") {
    c.node_count = parse_int<std::size_t>(key, v);
  } else if (key == "field") {
    const auto x = v.find('x');
    if (x == std::string_view::npos) throw ConfigError("field: expected WxH, got '" + std::string(v) + "'");
    c.field = Field{parse_double(key, v.substr(0, x)), parse_double(key, v.substr(x + 1))};
  } else if (key == "duration") {
    c.duration = parse_double(key, v);
  } else if (key == "seed") {
    c.seed = parse_int<std::uint64_t>(key, v);
  } else if (key == "lambda") {
    c.lambda = parse_double(key, v);
  } else if (key == "beta") {
    c.beta = parse_double(key, v);
  } else if (key == "link-control") {
    try {
      c.link_control = parse_link_control(v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "lqi-threshold") {
    c.radio.lqi_threshold = parse_int<int>(key, v);
  } else if (key == "tx-levels") {
    c.radio.power_levels = parse_double_list(v);
    c.energy.tx_levels = c.radio.power_levels;
  } else if (key == "tx-draw") {
    c.energy.tx_draw = parse_double_list(v);
  } else if (key == "sensing-range") {
    c.sensing_range = parse_double(key, v);
  } else if (key == "grid-step") {
    c.grid_step = parse_double(key, v);
  } else if (key == "tw") {
    c.t_w = parse_double(key, v);
  } else if (key == "tc-min") {
    c.t_c_min = parse_double(key, v);
  } else if (key == "tc-max") {
    c.t_c_max = parse_double(key, v);
  } else if (key == "reply-jitter") {
    c.reply_jitter = parse_double(key, v);
  } else if (key == "hazard-clock") {
    try {
      c.hazard_clock = parse_hazard_clock(v);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "metric-interval") {
    c.metric_interval = parse_double(key, v);
  } else if (key == "heal-epsilon") {
    c.heal_epsilon = parse_double(key, v);
  } else if (key == "shadowing") {
    c.radio.shadowing_sigma = parse_double(key, v);
  } else if (key == "path-loss-exponent") {
    c.radio.path_loss_exponent = parse_double(key, v);
  } else if (key == "reference-loss") {
    c.radio.reference_loss = parse_double(key, v);
  } else if (key == "noise-floor") {
    c.radio.noise_floor = parse_double(key, v);
  } else if (key == "sensitivity") {
    c.radio.sensitivity = parse_double(key, v);
  } else if (key == "lqi-snr-min") {
    c.radio.lqi_snr_min = parse_double(key, v);
  } else if (key == "lqi-snr-max") {
    c.radio.lqi_snr_max = parse_double(key, v);
  } else if (key == "frame-duration") {
    c.radio.tx_duration = parse_double(key, v);
  } else if (key == "sleep-draw") {
    c.energy.sleep_draw = parse_double(key, v);
  } else if (key == "probe-draw") {
    c.energy.probe_awake_draw = parse_double(key, v);
  } else if (key == "active-draw") {
    c.energy.active_draw = parse_double(key, v);
  } else if (key == "kill") {
    c.failures.push_back(FailureSpec::parse(v));
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

RunConfig parse_config_text(std::string_view text, std::string_view origin, RunConfig base, ConfigOrigins* origins) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = std::string(origin) + ":" + std::to_string(line_no) + ": ";
    if (eq == std::string_view::npos) throw ConfigError(where + "expected key=value, got '" + std::string(line) + "'");
    try {
      const std::string_view key = trim(line.substr(0, eq));
      apply_setting(base, key, line.substr(eq + 1));
      if (origins != nullptr) (*origins)[std::string(key)] = where.substr(0, where.size() - 2);
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }
  return base;
}

RunConfig load_config_file(const std::filesystem::path& path, RunConfig base, ConfigOrigins* origins) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path.string(), std::move(base), origins);
}

}  // namespace sentinet

#include "fdpa/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace fdpa {

namespace {

void require(bool ok, const std::string &what) {
  if (!ok) throw std::invalid_argument(what);
}

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(std::string_view v) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || ptr != v.data() + v.size()) throw std::invalid_argument("expected a real number");
  return x;
}

template <typename Int>
Int to_integer(std::string_view v) {
  Int x{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || ptr != v.data() + v.size()) throw std::invalid_argument("expected an integer");
  return x;
}

bool to_bool(std::string_view v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw std::invalid_argument("expected true or false");
}

using Setter = std::function<void(ScenarioConfig &, std::string_view)>;

const std::map<std::string, Setter, std::less<>> &setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"n_antennas", [](auto &c, auto v) { c.n_antennas = to_integer<int>(v); }},
      {"p_a", [](auto &c, auto v) { c.p_a = to_double(v); }},
      {"p_b", [](auto &c, auto v) { c.p_b = to_double(v); }},
      {"rho", [](auto &c, auto v) { c.rho = to_double(v); }},
      {"theta_desired", [](auto &c, auto v) { c.theta_desired = deg_to_rad(to_double(v)); }},
      {"theta_undesired", [](auto &c, auto v) { c.theta_undesired = deg_to_rad(to_double(v)); }},
      {"spacing_ratio", [](auto &c, auto v) { c.spacing_ratio = to_double(v); }},
      {"path_loss_exponent", [](auto &c, auto v) { c.path_loss_exponent = to_double(v); }},
      {"alpha_ref", [](auto &c, auto v) { c.alpha_ref = to_double(v); }},
      {"l1", [](auto &c, auto v) { c.l1 = to_double(v); }},
      {"l2", [](auto &c, auto v) { c.l2 = to_double(v); }},
      {"uav_speed", [](auto &c, auto v) { c.uav_speed = to_double(v); }},
      {"sigma2_b", [](auto &c, auto v) { c.sigma2_b = to_double(v); }},
      {"sigma2_e", [](auto &c, auto v) { c.sigma2_e = to_double(v); }},
      {"loop_channel_mode",
       [](auto &c, auto v) {
         if (v == "deterministic")
           c.loop_channel_mode = LoopChannelMode::kDeterministic;
         else if (v == "seeded-gaussian")
           c.loop_channel_mode = LoopChannelMode::kSeededGaussian;
         else
           throw std::invalid_argument("expected deterministic or seeded-gaussian");
       }},
      {"seed", [](auto &c, auto v) { c.seed = to_integer<std::uint64_t>(v); }},
      {"epsilon", [](auto &c, auto v) { c.epsilon = to_double(v); }},
      {"beta2_init", [](auto &c, auto v) { c.beta2_init = to_double(v); }},
      {"max_iterations", [](auto &c, auto v) { c.max_iterations = to_integer<int>(v); }},
      {"policy", [](auto &c, auto v) { c.policy = parse_policy(v); }},
      {"anlnr_noise",
       [](auto &c, auto v) {
         if (v == "eve")
           c.anlnr_noise = AnlnrNoise::kEve;
         else if (v == "bob")
           c.anlnr_noise = AnlnrNoise::kBob;
         else
           throw std::invalid_argument("expected eve or bob");
       }},
      {"hd_power_rule",
       [](auto &c, auto v) {
         if (v == "matched")
           c.hd_power_rule = HdPowerRule::kMatched;
         else if (v == "full")
           c.hd_power_rule = HdPowerRule::kFull;
         else
           throw std::invalid_argument("expected matched or full");
       }},
      {"eve_present", [](auto &c, auto v) { c.eve_present = to_bool(v); }},
  };
  return table;
}

std::string fmt_exact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void ScenarioConfig::validate() const {
  require(n_antennas >= 1, "n_antennas must be a positive integer");
  require(finite_positive(p_a), "p_a must be > 0");
  require(finite_positive(p_b), "p_b must be > 0");
  require(rho >= 0.0 && rho <= 1.0, "rho must lie in [0, 1]");
  require(theta_desired > 0.0 && theta_desired < std::numbers::pi, "theta_desired must lie in (0, 180) degrees");
  require(theta_undesired > 0.0 && theta_undesired < std::numbers::pi,
          "theta_undesired must lie in (0, 180) degrees");
  require(finite_positive(spacing_ratio), "spacing_ratio must be > 0");
  require(finite_positive(path_loss_exponent), "path_loss_exponent must be > 0");
  require(finite_positive(alpha_ref), "alpha_ref must be > 0");
  require(finite_positive(l1), "l1 must be > 0");
  require(finite_positive(l2), "l2 must be > 0");
  require(finite_positive(uav_speed), "uav_speed must be > 0");
  require(finite_positive(sigma2_b), "sigma2_b must be > 0");
  require(finite_positive(sigma2_e), "sigma2_e must be > 0");
  require(finite_positive(epsilon), "epsilon must be > 0");
  require(beta2_init >= 0.0 && beta2_init <= 1.0, "beta2_init must lie in [0, 1]");
  require(max_iterations >= 1, "max_iterations must be >= 1");
}

ScenarioParseError::ScenarioParseError(std::string_view source, int line, std::string_view key,
                                       std::string_view reason)
    : std::runtime_error(std::string(source) + ":" + std::to_string(line) + ": key '" + std::string(key) +
                         "': " + std::string(reason)),
      line_(line),
      key_(key) {}

ScenarioConfig parse_scenario(std::istream &in, std::string_view source_name) {
  ScenarioConfig cfg;
  std::map<std::string, int, std::less<>> seen;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ScenarioParseError(source_name, line_no, line, "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ScenarioParseError(source_name, line_no, key, "unknown key");
    if (!seen.emplace(key, line_no).second) throw ScenarioParseError(source_name, line_no, key, "duplicate key");
    if (value.empty()) throw ScenarioParseError(source_name, line_no, key, "missing value");
    try {
      it->second(cfg, value);
    } catch (const std::invalid_argument &e) {
      throw ScenarioParseError(source_name, line_no, key, e.what());
    }
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument &e) {
    // report the field named in the message when we can find it
    std::string msg = e.what();
    const std::string key = msg.substr(0, msg.find(' '));
    const auto at = seen.find(key);
    throw ScenarioParseError(source_name, at == seen.end() ? 0 : at->second, key, msg);
  }
  return cfg;
}

ScenarioConfig load_scenario(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ScenarioParseError(path, 0, "", "cannot open file");
  return parse_scenario(in, path);
}

void write_scenario(std::ostream &out, const ScenarioConfig &c) {
  out << "n_antennas = " << c.n_antennas << '\n'
      << "p_a = " << fmt_exact(c.p_a) << '\n'
      << "p_b = " << fmt_exact(c.p_b) << '\n'
      << "rho = " << fmt_exact(c.rho) << '\n'
      << "theta_desired = " << fmt_exact(rad_to_deg(c.theta_desired)) << '\n'
      << "theta_undesired = " << fmt_exact(rad_to_deg(c.theta_undesired)) << '\n'
      << "spacing_ratio = " << fmt_exact(c.spacing_ratio) << '\n'
      << "path_loss_exponent = " << fmt_exact(c.path_loss_exponent) << '\n'
      << "alpha_ref = " << fmt_exact(c.alpha_ref) << '\n'
      << "l1 = " << fmt_exact(c.l1) << '\n'
      << "l2 = " << fmt_exact(c.l2) << '\n'
      << "uav_speed = " << fmt_exact(c.uav_speed) << '\n'
      << "sigma2_b = " << fmt_exact(c.sigma2_b) << '\n'
      << "sigma2_e = " << fmt_exact(c.sigma2_e) << '\n'
      << "loop_channel_mode = " << to_string(c.loop_channel_mode) << '\n'
      << "seed = " << c.seed << '\n'
      << "epsilon = " << fmt_exact(c.epsilon) << '\n'
      << "beta2_init = " << fmt_exact(c.beta2_init) << '\n'
      << "max_iterations = " << c.max_iterations << '\n'
      << "policy = " << to_string(c.policy) << '\n'
      << "anlnr_noise = " << to_string(c.anlnr_noise) << '\n'
      << "hd_power_rule = " << to_string(c.hd_power_rule) << '\n'
      << "eve_present = " << (c.eve_present ? "true" : "false") << '\n';
}

std::string_view to_string(LoopChannelMode m) {
  return m == LoopChannelMode::kDeterministic ? "deterministic" : "seeded-gaussian";
}
std::string_view to_string(AnlnrNoise m) { return m == AnlnrNoise::kEve ? "eve" : "bob"; }
std::string_view to_string(CoefficientPolicy m) { return m == CoefficientPolicy::kRebuild ? "rebuild" : "freeze"; }
std::string_view to_string(HdPowerRule m) { return m == HdPowerRule::kMatched ? "matched" : "full"; }

CoefficientPolicy parse_policy(std::string_view s) {
  if (s == "rebuild") return CoefficientPolicy::kRebuild;
  if (s == "freeze") return CoefficientPolicy::kFreeze;
  throw std::invalid_argument("expected rebuild or freeze");
}

}  // namespace fdpa

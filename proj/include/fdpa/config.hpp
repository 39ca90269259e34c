#pragma once

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fdpa {

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

enum class LoopChannelMode { kDeterministic, kSeededGaussian };

/// Which noise power sits in the ANLNR denominator: Eve's (kEve) or Bob's
/// own receiver noise (kBob).
enum class AnlnrNoise { kEve, kBob };

/// Whether Bob's AN vector is re-derived every time beta2 moves (kRebuild) or
/// held at its value for beta2_init for the whole run (kFreeze).
enum class CoefficientPolicy { kRebuild, kFreeze };

/// Half-duplex Alice budget: P_a plus the AN power Bob actually spent in the
/// matched full-duplex run (kMatched), or P_a + P_b (kFull).
enum class HdPowerRule { kMatched, kFull };

/// All physical and algorithmic parameters of one network instance.
/// Angles are radians here; scenario files carry degrees.
struct ScenarioConfig {
  int n_antennas = 8;
  double p_a = 1.0;
  double p_b = 0.5;
  double rho = 0.1;
  double theta_desired = deg_to_rad(22.0);
  double theta_undesired = deg_to_rad(30.0);
  double spacing_ratio = 0.5;
  double path_loss_exponent = 2.0;
  double alpha_ref = 1.0;
  double l1 = 400.0;
  double l2 = 200.0;
  double uav_speed = 10.0;
  double sigma2_b = 1e-10;
  double sigma2_e = 1e-10;
  LoopChannelMode loop_channel_mode = LoopChannelMode::kDeterministic;
  std::uint64_t seed = 1;
  double epsilon = 1e-6;
  double beta2_init = 0.1;
  int max_iterations = 100;
  CoefficientPolicy policy = CoefficientPolicy::kRebuild;
  AnlnrNoise anlnr_noise = AnlnrNoise::kEve;
  HdPowerRule hd_power_rule = HdPowerRule::kMatched;
  // false drops every Eve link gain to zero
  bool eve_present = true;

  /// Throws std::invalid_argument naming the first violated constraint.
  void validate() const;

  double anlnr_sigma2() const { return anlnr_noise == AnlnrNoise::kEve ? sigma2_e : sigma2_b; }
};

/// Malformed scenario file. what() names the source, line and key.
class ScenarioParseError : public std::runtime_error {
 public:
  ScenarioParseError(std::string_view source, int line, std::string_view key, std::string_view reason);

  int line() const { return line_; }
  const std::string &key() const { return key_; }

 private:
  int line_;
  std::string key_;
};

/// Parses `key = value` lines on top of the defaults. `#` starts a comment.
/// Unknown keys, duplicate keys and unparsable values are errors, and so is
/// a resulting configuration that fails validate().
ScenarioConfig parse_scenario(std::istream &in, std::string_view source_name = "<stream>");
ScenarioConfig load_scenario(const std::string &path);

/// Writes every field in the scenario-file format. Parsing the output gives
/// back `cfg` (angles up to one rounding of the degree conversion).
void write_scenario(std::ostream &out, const ScenarioConfig &cfg);

std::string_view to_string(LoopChannelMode m);
std::string_view to_string(AnlnrNoise m);
std::string_view to_string(CoefficientPolicy m);
std::string_view to_string(HdPowerRule m);

CoefficientPolicy parse_policy(std::string_view s);

}  // namespace fdpa

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fdpa/beamforming.hpp"
#include "fdpa/channel_geometry.hpp"
#include "fdpa/config.hpp"
#include "fdpa/pa_optimizer.hpp"
#include "fdpa/secrecy_engine.hpp"

namespace fdpa {

/// One network snapshot: Bob at distance r. Channels, the MRT beamformer and
/// the NSP matrix are fixed; Bob's AN vector is re-derived per beta2.
class NetworkInstance {
 public:
  NetworkInstance(const ScenarioConfig &cfg, double r);

  const ScenarioConfig &config() const { return cfg_; }
  const ChannelSet &channels() const { return channels_; }

  BeamformerSet beamformers(double beta2) const;
  RateCoefficients rate_coefficients(double beta2) const;
  RationalCoefficients rational_coefficients(double beta2) const;
  CoefficientBuilder builder() const;

 private:
  ScenarioConfig cfg_;
  ChannelSet channels_;
  Eigen::VectorXcd v_b_;
  Eigen::MatrixXcd p_an_;
};

enum class Strategy { kFdOpt, kFdFixed, kHd };

std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view s);

struct StrategyOutcome {
  double secrecy_rate = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  int iterations = 0;
  bool converged = true;
};

inline constexpr PAPoint kDefaultFixedPA{0.5, 0.5};

/// fd_opt runs the alternating optimizer; fd_fixed evaluates the same pipeline
/// at `fixed_pa`; hd gives Bob no AN and optimizes beta1 alone with Alice's
/// budget raised per cfg.hd_power_rule.
StrategyOutcome run_strategy(const ScenarioConfig &cfg, double r, Strategy strategy,
                             PAPoint fixed_pa = kDefaultFixedPA);

/// Half-duplex run with an explicit Alice budget.
StrategyOutcome run_half_duplex(const ScenarioConfig &cfg, double r, double alice_power);

enum class SweepVariable { kPower, kDistance, kAntennas };

std::string_view to_string(SweepVariable v);
SweepVariable parse_sweep_variable(std::string_view s);

struct SweepSpec {
  SweepVariable variable = SweepVariable::kPower;
  std::vector<double> values;
  std::vector<Strategy> strategies{Strategy::kFdOpt, Strategy::kFdFixed, Strategy::kHd};
  PAPoint fixed_pa = kDefaultFixedPA;
  ScenarioConfig base;
  double r = 100.0;  // Bob's distance for power and antenna sweeps
  // when set, p_b tracks p_a at this ratio during power sweeps
  std::optional<double> bob_power_ratio;

  void validate() const;
};

struct SweepRow {
  double value = 0.0;
  std::vector<StrategyOutcome> outcomes;  // parallel to SweepSpec::strategies
};

/// One row per value, in the order of spec.values. Points run concurrently.
std::vector<SweepRow> run_sweep(const SweepSpec &spec);

/// `steps` evenly spaced values from..to inclusive; geometric when `log_spacing`.
std::vector<double> sweep_values(double from, double to, int steps, bool log_spacing = false);

}  // namespace fdpa

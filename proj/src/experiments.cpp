#include "fdpa/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>

namespace fdpa {

NetworkInstance::NetworkInstance(const ScenarioConfig &cfg, double r)
    : cfg_(cfg), channels_(build_channels(cfg, r)), v_b_(mrt_beamformer(channels_.h_sd)), p_an_(nsp_projection(channels_.h_sd)) {}

BeamformerSet NetworkInstance::beamformers(double beta2) const {
  return {v_b_, p_an_, anlnr_vector(channels_.h_dd, channels_.h_de, beta2, cfg_.p_b, cfg_.anlnr_sigma2())};
}

RateCoefficients NetworkInstance::rate_coefficients(double beta2) const {
  return fdpa::rate_coefficients(channels_, beamformers(beta2), cfg_);
}

RationalCoefficients NetworkInstance::rational_coefficients(double beta2) const {
  return fdpa::rational_coefficients(rate_coefficients(beta2), cfg_.sigma2_b, cfg_.sigma2_e);
}

CoefficientBuilder NetworkInstance::builder() const {
  return [net = *this](double beta2) { return net.rational_coefficients(beta2); };
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::kFdOpt: return "fd_opt";
    case Strategy::kFdFixed: return "fd_fixed";
    case Strategy::kHd: return "hd";
  }
  return "?";
}

Strategy parse_strategy(std::string_view s) {
  if (s == "fd_opt") return Strategy::kFdOpt;
  if (s == "fd_fixed") return Strategy::kFdFixed;
  if (s == "hd") return Strategy::kHd;
  throw std::invalid_argument("unknown strategy '" + std::string(s) + "' (expected fd_opt, fd_fixed or hd)");
}

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::kPower: return "power";
    case SweepVariable::kDistance: return "distance";
    case SweepVariable::kAntennas: return "antennas";
  }
  return "?";
}

SweepVariable parse_sweep_variable(std::string_view s) {
  if (s == "power") return SweepVariable::kPower;
  if (s == "distance") return SweepVariable::kDistance;
  if (s == "antennas") return SweepVariable::kAntennas;
  throw std::invalid_argument("unknown sweep variable '" + std::string(s) + "' (expected power, distance or antennas)");
}

namespace {

StrategyOutcome run_fd_opt(const ScenarioConfig &cfg, double r) {
  const NetworkInstance net(cfg, r);
  const auto res = alternate(net.builder(), cfg);
  return {res.secrecy_rate, res.beta1_opt, res.beta2_opt, res.iterations, res.converged};
}

StrategyOutcome run_fd_fixed(const ScenarioConfig &cfg, double r, PAPoint pa) {
  pa.validate();
  const NetworkInstance net(cfg, r);
  const double q_beta2 = cfg.policy == CoefficientPolicy::kFreeze ? cfg.beta2_init : pa.beta2;
  const auto rc = net.rate_coefficients(q_beta2);
  return {secrecy_rate_direct(rc, pa, cfg.sigma2_b, cfg.sigma2_e), pa.beta1, pa.beta2, 0, true};
}

double hd_budget(const ScenarioConfig &cfg, double matched_beta2) {
  return cfg.hd_power_rule == HdPowerRule::kFull ? cfg.p_a + cfg.p_b : cfg.p_a + matched_beta2 * cfg.p_b;
}

ScenarioConfig apply_value(const SweepSpec &spec, double value, double &r) {
  ScenarioConfig cfg = spec.base;
  r = spec.r;
  switch (spec.variable) {
    case SweepVariable::kPower:
      cfg.p_a = value;
      if (spec.bob_power_ratio) cfg.p_b = *spec.bob_power_ratio * value;
      break;
    case SweepVariable::kDistance:
      r = value;
      break;
    case SweepVariable::kAntennas:
      cfg.n_antennas = static_cast<int>(std::lround(value));
      break;
  }
  return cfg;
}

SweepRow run_point(const SweepSpec &spec, double value) {
  double r = 0.0;
  const ScenarioConfig cfg = apply_value(spec, value, r);
  SweepRow row{value, {}};
  std::optional<StrategyOutcome> fd_opt;
  auto matched = [&]() -> const StrategyOutcome & {
    if (!fd_opt) fd_opt = run_fd_opt(cfg, r);
    return *fd_opt;
  };
  for (const auto s : spec.strategies) {
    switch (s) {
      case Strategy::kFdOpt: row.outcomes.push_back(matched()); break;
      case Strategy::kFdFixed: row.outcomes.push_back(run_fd_fixed(cfg, r, spec.fixed_pa)); break;
      case Strategy::kHd: {
        const double beta2 = cfg.hd_power_rule == HdPowerRule::kMatched ? matched().beta2 : 0.0;
        row.outcomes.push_back(run_half_duplex(cfg, r, hd_budget(cfg, beta2)));
        break;
      }
    }
  }
  return row;
}

}  // namespace

StrategyOutcome run_half_duplex(const ScenarioConfig &cfg, double r, double alice_power) {
  ScenarioConfig hd = cfg;
  hd.p_a = alice_power;
  const NetworkInstance net(hd, r);
  auto rc = net.rate_coefficients(0.0);
  // Bob only receives: no self-interference and no jamming of Eve
  rc.c = 0.0;
  rc.f = 0.0;
  const auto q = rational_coefficients(rc, hd.sigma2_b, hd.sigma2_e);
  const auto step = optimize_beta1(q, 0.0);
  return {std::max(0.0, step.objective_at_chosen), step.chosen, 0.0, 1, true};
}

StrategyOutcome run_strategy(const ScenarioConfig &cfg, double r, Strategy strategy, PAPoint fixed_pa) {
  switch (strategy) {
    case Strategy::kFdOpt: return run_fd_opt(cfg, r);
    case Strategy::kFdFixed: return run_fd_fixed(cfg, r, fixed_pa);
    case Strategy::kHd: {
      const double beta2 = cfg.hd_power_rule == HdPowerRule::kMatched ? run_fd_opt(cfg, r).beta2 : 0.0;
      return run_half_duplex(cfg, r, hd_budget(cfg, beta2));
    }
  }
  throw std::invalid_argument("run_strategy: unknown strategy");
}

void SweepSpec::validate() const {
  if (values.empty()) throw std::invalid_argument("sweep: no values");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i] > values[i - 1])) throw std::invalid_argument("sweep: values must be strictly increasing");
  if (strategies.empty()) throw std::invalid_argument("sweep: no strategies");
  fixed_pa.validate();
  if (bob_power_ratio && !(*bob_power_ratio > 0.0)) throw std::invalid_argument("sweep: bob power ratio must be > 0");
  if (variable == SweepVariable::kAntennas)
    for (double v : values)
      if (v < 1.0 || v != std::round(v)) throw std::invalid_argument("sweep: antenna counts must be positive integers");
  base.validate();
}

std::vector<SweepRow> run_sweep(const SweepSpec &spec) {
  spec.validate();
  const std::size_t n = spec.values.size();
  const std::size_t workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16u));

  std::vector<SweepRow> rows(n);
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < std::min(workers, n); ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < n; i += workers) rows[i] = run_point(spec, spec.values[i]);
    }));
  }
  for (auto &j : jobs) j.get();
  return rows;
}

std::vector<double> sweep_values(double from, double to, int steps, bool log_spacing) {
  if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
  if (!(from < to)) throw std::invalid_argument("sweep: from must be < to");
  if (log_spacing && !(from > 0.0)) throw std::invalid_argument("sweep: log spacing needs from > 0");
  std::vector<double> out(steps);
  for (int i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) / (steps - 1);
    out[i] = log_spacing ? from * std::pow(to / from, t) : from + (to - from) * t;
  }
  out.front() = from;
  out.back() = to;
  return out;
}

}  // namespace fdpa

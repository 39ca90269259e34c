#include "fdpa/channel_geometry.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

namespace fdpa {

Eigen::VectorXcd steering_vector(double theta, int n, double spacing_ratio) {
  if (n < 1) throw std::invalid_argument("steering_vector: n must be >= 1");
  if (!std::isfinite(theta)) throw std::invalid_argument("steering_vector: theta must be finite");
  if (!(spacing_ratio > 0.0)) throw std::invalid_argument("steering_vector: spacing_ratio must be > 0");

  const double centre = (n + 1) / 2.0;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  const double c = std::cos(theta);
  Eigen::VectorXcd h(n);
  for (int k = 1; k <= n; ++k) {
    const double psi = -(k - centre) * spacing_ratio * c;
    h(k - 1) = std::polar(scale, 2.0 * std::numbers::pi * psi);
  }
  return h;
}

double path_loss(double distance, double alpha_ref, double exponent) {
  if (!(distance > 0.0)) throw std::invalid_argument("path_loss: distance must be > 0");
  return alpha_ref / std::pow(distance, exponent);
}

Eigen::VectorXcd loop_channel(const ScenarioConfig &cfg) {
  const int n = cfg.n_antennas;
  if (cfg.loop_channel_mode == LoopChannelMode::kDeterministic) {
    return Eigen::VectorXcd::Constant(n, std::complex<double>(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
  }
  // CN(0, 1) entries: real and imaginary parts each carry variance 1/2
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Eigen::VectorXcd h(n);
  for (int k = 0; k < n; ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    h(k) = {re, im};
  }
  return h;
}

double bob_eve_distance(double r, double l2, double separation) {
  const double sq = r * r + l2 * l2 - 2.0 * r * l2 * std::cos(separation);
  return std::sqrt(std::max(sq, 0.0));
}

ChannelSet build_channels(const ScenarioConfig &cfg, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("build_channels: r must be > 0");
  cfg.validate();

  const int n = cfg.n_antennas;
  ChannelSet ch;
  ch.d_ab = r;
  ch.d_ae = cfg.l2;
  ch.d_be = bob_eve_distance(r, cfg.l2, std::abs(cfg.theta_desired - cfg.theta_undesired));

  const double bob_x = r * std::cos(cfg.theta_desired);
  const double bob_y = r * std::sin(cfg.theta_desired);
  const double eve_x = cfg.l2 * std::cos(cfg.theta_undesired);
  const double eve_y = cfg.l2 * std::sin(cfg.theta_undesired);
  ch.theta_be = std::atan2(eve_y - bob_y, eve_x - bob_x);

  ch.h_sd = steering_vector(cfg.theta_desired, n, cfg.spacing_ratio);
  ch.h_se = steering_vector(cfg.theta_undesired, n, cfg.spacing_ratio);
  ch.h_de = steering_vector(ch.theta_be, n, cfg.spacing_ratio);
  ch.h_dd = loop_channel(cfg);

  ch.g_ab = path_loss(ch.d_ab, cfg.alpha_ref, cfg.path_loss_exponent);
  if (cfg.eve_present) {
    ch.g_ae = path_loss(ch.d_ae, cfg.alpha_ref, cfg.path_loss_exponent);
    ch.g_be = path_loss(ch.d_be, cfg.alpha_ref, cfg.path_loss_exponent);
  }
  return ch;
}

double flight_distance(const ScenarioConfig &cfg, double seconds) {
  const double t_end = cfg.l1 / cfg.uav_speed;
  if (!(seconds >= 0.0) || seconds > t_end) throw std::invalid_argument("flight_distance: time outside the flight");
  return cfg.uav_speed * seconds;
}

}  // namespace fdpa

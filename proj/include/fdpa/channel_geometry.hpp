#pragma once

#include <Eigen/Dense>

#include "fdpa/config.hpp"

namespace fdpa {

/// Line-of-sight channels for Bob at distance r from Alice.
///
/// Alice sits at the origin of the array axis. Bob is placed r metres out
/// along theta_desired, Eve l2 metres out along theta_undesired, so the
/// Bob-Eve distance follows from the law of cosines. The Bob-Eve steering
/// vector uses the bearing of Eve as seen from Bob, measured against the
/// same axis.
struct ChannelSet {
  Eigen::VectorXcd h_sd;  // Alice -> Bob, unit norm
  Eigen::VectorXcd h_se;  // Alice -> Eve, unit norm
  Eigen::VectorXcd h_de;  // Bob -> Eve, unit norm
  Eigen::VectorXcd h_dd;  // Bob transmit -> Bob receive loop

  double g_ab = 0.0;
  double g_ae = 0.0;
  double g_be = 0.0;
  double d_ab = 0.0;
  double d_ae = 0.0;
  double d_be = 0.0;
  double theta_be = 0.0;  // radians

  int size() const { return static_cast<int>(h_sd.size()); }
};

/// ULA response with the phase reference at the array centre:
/// entry k is exp(j*2*pi*psi_k)/sqrt(n), psi_k = -(k - (n+1)/2) * spacing_ratio * cos(theta).
Eigen::VectorXcd steering_vector(double theta, int n, double spacing_ratio);

/// alpha_ref / distance^exponent.
double path_loss(double distance, double alpha_ref, double exponent);

/// Loop channel between Bob's transmit array and its receive antenna.
Eigen::VectorXcd loop_channel(const ScenarioConfig &cfg);

double bob_eve_distance(double r, double l2, double separation);

ChannelSet build_channels(const ScenarioConfig &cfg, double r);

/// Distance from Alice after `seconds` of flight along the straight path.
double flight_distance(const ScenarioConfig &cfg, double seconds);

}  // namespace fdpa

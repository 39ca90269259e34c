#pragma once

#include <stdexcept>

#include <Eigen/Dense>

#include "fdpa/channel_geometry.hpp"
#include "fdpa/config.hpp"

namespace fdpa {

struct BeamformerSet {
  Eigen::VectorXcd v_b;   // message beamformer, unit norm
  Eigen::MatrixXcd p_an;  // Alice AN projection, trace(P P^H) = 1
  Eigen::VectorXcd q_an;  // Bob AN vector, unit norm
};

/// A single-antenna Alice has no null space to put AN into.
class NoNullSpaceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Maximum ratio transmission: returns h_sd itself.
Eigen::VectorXcd mrt_beamformer(const Eigen::VectorXcd &h_sd);

/// Orthogonal projector onto the complement of h_sd, scaled by 1/sqrt(N-1)
/// so that trace(P P^H) = 1.
Eigen::MatrixXcd nsp_projection(const Eigen::VectorXcd &h_sd);

/// Maximum-ANLNR AN vector for Bob.
///
/// The maximiser of |q^H h_de|^2 / q^H M q with M = beta2*p_b*h_dd*h_dd^H + sigma2*I
/// is M^{-1} h_de normalised. M is a rank-one update of a scaled identity so
/// the inverse is applied with Sherman-Morrison.
Eigen::VectorXcd anlnr_vector(const Eigen::VectorXcd &h_dd, const Eigen::VectorXcd &h_de, double beta2,
                              double p_b, double sigma2);

/// The ANLNR ratio itself, for any (not necessarily optimal) q.
double anlnr(const Eigen::VectorXcd &q, const Eigen::VectorXcd &h_dd, const Eigen::VectorXcd &h_de, double beta2,
             double p_b, double sigma2);

/// All three designs for the given channels; q_an is derived at `beta2`.
BeamformerSet design_beamformers(const ChannelSet &ch, const ScenarioConfig &cfg, double beta2);

}  // namespace fdpa

#include "fdpa/beamforming.hpp"

#include <cmath>

namespace fdpa {

namespace {

constexpr double kUnitNormTol = 1e-9;

void require_unit(const Eigen::VectorXcd &h, const char *who) {
  if (h.size() == 0 || std::abs(h.norm() - 1.0) > kUnitNormTol)
    throw std::invalid_argument(std::string(who) + ": h_sd must have unit norm");
}

}  // namespace

Eigen::VectorXcd mrt_beamformer(const Eigen::VectorXcd &h_sd) {
  require_unit(h_sd, "mrt_beamformer");
  return h_sd;
}

Eigen::MatrixXcd nsp_projection(const Eigen::VectorXcd &h_sd) {
  require_unit(h_sd, "nsp_projection");
  const auto n = h_sd.size();
  if (n < 2) throw NoNullSpaceError("nsp_projection: N = 1 leaves no null space for AN");
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(n, n) - h_sd * h_sd.adjoint();
  p /= std::sqrt(static_cast<double>(n - 1));
  return p;
}

Eigen::VectorXcd anlnr_vector(const Eigen::VectorXcd &h_dd, const Eigen::VectorXcd &h_de, double beta2,
                              double p_b, double sigma2) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("anlnr_vector: sigma2 must be > 0");
  if (!(beta2 >= 0.0 && beta2 <= 1.0)) throw std::invalid_argument("anlnr_vector: beta2 must lie in [0, 1]");
  if (!(p_b >= 0.0)) throw std::invalid_argument("anlnr_vector: p_b must be >= 0");
  if (h_dd.size() != h_de.size()) throw std::invalid_argument("anlnr_vector: length mismatch");
  if (h_de.norm() == 0.0) throw std::invalid_argument("anlnr_vector: h_de must be nonzero");

  const double k = beta2 * p_b;
  const double u2 = h_dd.squaredNorm();
  if (k == 0.0 || u2 == 0.0) return h_de / h_de.norm();

  // Sherman-Morrison, written along u = h_dd and orthogonal to it:
  // (sigma2 I + k u u^H)^{-1} scales the u component by 1/(sigma2 + k|u|^2)
  // and everything else by 1/sigma2. The residual u component of `perp` is
  // what carries the self-interference, so it gets a second projection pass.
  const std::complex<double> along = h_dd.dot(h_de) / u2;
  Eigen::VectorXcd perp = h_de - h_dd * along;
  perp -= h_dd * (h_dd.dot(perp) / u2);
  // common factor sigma2 dropped; it cancels in the normalisation
  Eigen::VectorXcd x = perp + h_dd * (along * (sigma2 / (sigma2 + k * u2)));
  return x / x.norm();
}

double anlnr(const Eigen::VectorXcd &q, const Eigen::VectorXcd &h_dd, const Eigen::VectorXcd &h_de, double beta2,
             double p_b, double sigma2) {
  const double k = beta2 * p_b;
  const double signal = k * std::norm(h_de.dot(q));
  const double leak = k * std::norm(h_dd.dot(q)) + sigma2 * q.squaredNorm();
  return signal / leak;
}

BeamformerSet design_beamformers(const ChannelSet &ch, const ScenarioConfig &cfg, double beta2) {
  return {mrt_beamformer(ch.h_sd), nsp_projection(ch.h_sd),
          anlnr_vector(ch.h_dd, ch.h_de, beta2, cfg.p_b, cfg.anlnr_sigma2())};
}

}  // namespace fdpa

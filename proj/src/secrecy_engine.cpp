#include "fdpa/secrecy_engine.hpp"

#include <cmath>
#include <numbers>

namespace fdpa {

namespace {

double quad_form_rank_one(const Eigen::VectorXcd &h, const Eigen::VectorXcd &w) { return std::norm(w.dot(h)); }

}  // namespace

Extended RationalCoefficients::numerator(double beta1, double beta2) const {
  const Extended x = beta1, y = beta2;
  return -a2 * x * x + b1 * y * y + c2 * x * y + d2 * x + e1 * y + f1;
}

Extended RationalCoefficients::denominator(double beta1, double beta2) const {
  const Extended x = beta1, y = beta2;
  return -a1 * x * x + b1 * y * y + c1 * x * y + d1 * x + e1 * y + f1;
}

void PAPoint::validate() const {
  if (!(beta1 >= 0.0 && beta1 <= 1.0)) throw std::invalid_argument("beta1 must lie in [0, 1]");
  if (!(beta2 >= 0.0 && beta2 <= 1.0)) throw std::invalid_argument("beta2 must lie in [0, 1]");
}

RateCoefficients rate_coefficients(const ChannelSet &ch, const BeamformerSet &bf, const ScenarioConfig &cfg) {
  const auto n = ch.h_sd.size();
  if (ch.h_se.size() != n || ch.h_de.size() != n || ch.h_dd.size() != n || bf.v_b.size() != n ||
      bf.q_an.size() != n || bf.p_an.rows() != n || bf.p_an.cols() != n)
    throw std::invalid_argument("rate_coefficients: channel and beamformer lengths disagree");

  // h^H (P P^H) h = |P^H h|^2
  const Eigen::MatrixXcd p_adj = bf.p_an.adjoint();
  RateCoefficients rc;
  rc.a = ch.g_ab * cfg.p_a * quad_form_rank_one(ch.h_sd, bf.v_b);
  rc.b = ch.g_ab * cfg.p_a * (p_adj * ch.h_sd).squaredNorm();
  rc.c = cfg.p_b * cfg.rho * quad_form_rank_one(ch.h_dd, bf.q_an);
  rc.d = ch.g_ae * cfg.p_a * quad_form_rank_one(ch.h_se, bf.v_b);
  rc.e = ch.g_ae * cfg.p_a * (p_adj * ch.h_se).squaredNorm();
  rc.f = ch.g_be * cfg.p_b * quad_form_rank_one(ch.h_de, bf.q_an);
  return rc;
}

RationalCoefficients rational_coefficients(const RateCoefficients &rc, double sigma2_b, double sigma2_e) {
  const Extended a = rc.a, b = rc.b, c = rc.c, d = rc.d, e = rc.e, f = rc.f;
  const Extended bob_floor = b + sigma2_b;
  const Extended eve_floor = e + sigma2_e;
  RationalCoefficients q;
  q.a1 = b * (d - e);
  q.b1 = c * f;
  q.c1 = c * (d - e) - b * f;
  // the Eve-side floor here carries sigma2_e; see the expansion of (X)(Y + D x)
  q.d1 = (d - e) * bob_floor - b * eve_floor;
  q.e1 = c * eve_floor + f * bob_floor;
  q.f1 = bob_floor * eve_floor;
  q.a2 = e * (a - b);
  q.c2 = f * (a - b) - c * e;
  q.d2 = (a - b) * eve_floor - e * bob_floor;
  return q;
}

DirectRates achievable_rates(const RateCoefficients &rc, PAPoint p, double sigma2_b, double sigma2_e) {
  p.validate();
  const double x = p.beta1;
  const double y = p.beta2;
  const double sinr_b = rc.a * x / ((1.0 - x) * rc.b + y * rc.c + sigma2_b);
  const double sinr_e = rc.d * x / ((1.0 - x) * rc.e + y * rc.f + sigma2_e);
  return {std::log1p(sinr_b) / std::numbers::ln2, std::log1p(sinr_e) / std::numbers::ln2};
}

double secrecy_rate_direct(const RateCoefficients &rc, PAPoint p, double sigma2_b, double sigma2_e) {
  return achievable_rates(rc, p, sigma2_b, sigma2_e).secrecy();
}

double secrecy_gap_direct(const RateCoefficients &rc, PAPoint p, double sigma2_b, double sigma2_e) {
  return achievable_rates(rc, p, sigma2_b, sigma2_e).difference();
}

double secrecy_rate_rational(const RationalCoefficients &q, PAPoint p) {
  p.validate();
  const Extended num = q.numerator(p.beta1, p.beta2);
  const Extended den = q.denominator(p.beta1, p.beta2);
  if (!(num > 0) || !(den > 0))
    throw std::domain_error("secrecy_rate_rational: quadratic not positive at the given PA point");
  if (num == den) return 0.0;
  return static_cast<double>(std::log2(num / den));
}

}  // namespace fdpa

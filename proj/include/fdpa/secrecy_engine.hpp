#pragma once

#include <stdexcept>

#include "fdpa/beamforming.hpp"
#include "fdpa/channel_geometry.hpp"
#include "fdpa/config.hpp"

namespace fdpa {

/// Received powers per unit PA factor.
///
/// Bob's SINR is a*beta1 / ((1-beta1)*b + beta2*c + sigma2_b) and Eve's is
/// d*beta1 / ((1-beta1)*e + beta2*f + sigma2_e).
struct RateCoefficients {
  double a = 0.0;  // message at Bob
  double b = 0.0;  // Alice AN at Bob
  double c = 0.0;  // residual self-interference at Bob
  double d = 0.0;  // message at Eve
  double e = 0.0;  // Alice AN at Eve
  double f = 0.0;  // Bob AN at Eve
};

/// Extended precision for the expanded quadratics. Their coefficients mix
/// products such as A*E with A*sigma2_e, and at high SNR the difference is
/// far below double resolution.
using Extended = long double;

/// R_b - R_e = log2(num / den) with
///   num = -a2 x^2 + b1 y^2 + c2 x y + d2 x + e1 y + f1
///   den = -a1 x^2 + b1 y^2 + c1 x y + d1 x + e1 y + f1
/// where x = beta1 and y = beta2.
struct RationalCoefficients {
  Extended a1 = 0, b1 = 0, c1 = 0, d1 = 0, e1 = 0, f1 = 0;
  Extended a2 = 0, c2 = 0, d2 = 0;

  Extended numerator(double beta1, double beta2) const;
  Extended denominator(double beta1, double beta2) const;
};

struct PAPoint {
  double beta1 = 0.0;
  double beta2 = 0.0;

  void validate() const;
};

struct DirectRates {
  double bob = 0.0;  // R_b, bits/s/Hz
  double eve = 0.0;  // R_e
  double difference() const { return bob - eve; }
  double secrecy() const { return difference() > 0.0 ? difference() : 0.0; }
};

RateCoefficients rate_coefficients(const ChannelSet &ch, const BeamformerSet &bf, const ScenarioConfig &cfg);

RationalCoefficients rational_coefficients(const RateCoefficients &rc, double sigma2_b, double sigma2_e);

DirectRates achievable_rates(const RateCoefficients &rc, PAPoint p, double sigma2_b, double sigma2_e);

/// max{0, R_b - R_e}.
double secrecy_rate_direct(const RateCoefficients &rc, PAPoint p, double sigma2_b, double sigma2_e);

/// R_b - R_e without the clamp; this is what the optimizer maximizes.
double secrecy_gap_direct(const RateCoefficients &rc, PAPoint p, double sigma2_b, double sigma2_e);

/// log2(num/den) of the rational form. Throws std::domain_error when either
/// quadratic is not strictly positive at p.
double secrecy_rate_rational(const RationalCoefficients &q, PAPoint p);

}  // namespace fdpa

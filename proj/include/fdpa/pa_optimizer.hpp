#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fdpa/config.hpp"
#include "fdpa/secrecy_engine.hpp"

namespace fdpa {

/// Numerator of dF/dx over the positive denominator, written as
/// lead*x^2 + 2*half_linear*x + constant. Its sign is the sign of the
/// partial derivative of the objective.
struct DerivativeQuadratic {
  double lead = 0.0;
  double half_linear = 0.0;
  double constant = 0.0;

  double discriminant() const { return half_linear * half_linear - lead * constant; }
  double operator()(double x) const { return lead * x * x + 2.0 * half_linear * x + constant; }
};

/// The two real roots (-h + sqrt(D))/lead and (-h - sqrt(D))/lead, evaluated
/// without cancellation. Empty when the discriminant is negative or the
/// leading coefficient vanishes.
struct QuadraticRoots {
  double plus = 0.0;
  double minus = 0.0;
};
std::optional<QuadraticRoots> stationary_roots(const DerivativeQuadratic &dq);

DerivativeQuadratic beta1_derivative(const RationalCoefficients &q, double beta2);
DerivativeQuadratic beta2_derivative(const RationalCoefficients &q, double beta1);

enum class CoordinateCase {
  kTwoRoots,           // discriminant >= 0
  kIncreasing,         // no real roots, positive lead
  kDecreasing,         // no real roots, negative lead
  kLinear,             // lead negligible: one stationary point
  kConstant,           // lead and linear term negligible
};

struct CoordinateCandidates {
  std::vector<double> stationary_points;  // interior roots that were compared
  std::vector<double> endpoints;
  double chosen = 1.0;
  double objective_at_chosen = 0.0;
  CoordinateCase which = CoordinateCase::kTwoRoots;
  // beta1 only: every candidate lies below F(0, beta2) = 0 and F falls away
  // from the excluded beta1 = 0, so the best point of a dense grid was taken
  bool fallback_used = false;
};

/// Best beta1 in (0, 1] for fixed beta2. beta1 = 0 carries no message and is
/// never a candidate; the endpoint 1 always is.
CoordinateCandidates optimize_beta1(const RationalCoefficients &q, double beta2);

/// Best beta2 in [0, 1] for fixed beta1. Both endpoints are always candidates.
CoordinateCandidates optimize_beta2(const RationalCoefficients &q, double beta1);

/// Rational coefficients as a function of beta2 (Bob's AN vector depends on it).
using CoefficientBuilder = std::function<RationalCoefficients(double beta2)>;

struct IterationRecord {
  double beta1 = 0.0;
  double beta2 = 0.0;
  double objective = 0.0;  // unclamped R_b - R_e
};

struct PAResult {
  double beta1_opt = 1.0;
  double beta2_opt = 0.0;
  double secrecy_rate = 0.0;  // clamped
  double objective = 0.0;     // unclamped
  int iterations = 0;
  bool converged = false;
  int fallback_steps = 0;
  std::vector<IterationRecord> trace;
};

/// Objective at (beta1, beta2) with coefficients taken per `policy`.
double policy_objective(const CoefficientBuilder &build, CoefficientPolicy policy, double beta2_init, double beta1,
                        double beta2);

/// Alternating closed-form maximization of R_b - R_e.
///
/// Starting from beta2_init, each iteration picks the best beta1 for the
/// current beta2 and then the best beta2 for that beta1, and records the
/// objective. It stops once two consecutive objectives (the first compared
/// against zero) differ by at most cfg.epsilon, or after cfg.max_iterations.
///
/// With CoefficientPolicy::kRebuild the coefficients are rebuilt from the
/// current beta2 before every step and for every recorded objective. With
/// kFreeze they are built once at beta2_init.
PAResult alternate(const CoefficientBuilder &build, const ScenarioConfig &cfg);

struct GridOptimum {
  double beta1 = 0.0;
  double beta2 = 0.0;
  double objective = 0.0;
};

/// Exhaustive search on a grid_points x grid_points lattice over the unit
/// square, using the same coefficient policy as alternate(). Ties keep the
/// smallest beta2, then the smallest beta1.
GridOptimum grid_oracle(const CoefficientBuilder &build, const ScenarioConfig &cfg, int grid_points);

}  // namespace fdpa

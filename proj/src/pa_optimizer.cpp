#include "fdpa/pa_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <stdexcept>

namespace fdpa {

namespace {

// Relative size below which a derivative coefficient is treated as zero.
constexpr double kNegligible = 1e-14;
constexpr int kFallbackGrid = 1000;

double max_abs(std::initializer_list<Extended> xs) {
  Extended m = 0;
  for (Extended x : xs) m = std::max(m, std::abs(x));
  return static_cast<double>(m);
}

// Magnitude of the products that make up the derivative numerator. Used to
// decide when a coefficient is only cancellation noise.
double term_scale(std::initializer_list<Extended> products) { return max_abs(products); }

bool negligible(double x, double scale) { return std::abs(x) <= kNegligible * scale; }

double eval_beta1(const RationalCoefficients &q, double beta2, double x) {
  return secrecy_rate_rational(q, {x, beta2});
}

double eval_beta2(const RationalCoefficients &q, double beta1, double y) {
  return secrecy_rate_rational(q, {beta1, y});
}

struct Classified {
  CoordinateCase which;
  std::vector<double> interior;  // stationary points strictly inside (0, 1)
};

Classified classify(const DerivativeQuadratic &dq, double scale) {
  Classified out{CoordinateCase::kTwoRoots, {}};
  auto keep = [&](double x) {
    if (x > 0.0 && x < 1.0) out.interior.push_back(x);
  };
  if (negligible(dq.lead, scale)) {
    if (negligible(2.0 * dq.half_linear, scale)) {
      out.which = CoordinateCase::kConstant;
      return out;
    }
    out.which = CoordinateCase::kLinear;
    keep(-dq.constant / (2.0 * dq.half_linear));
    return out;
  }
  if (dq.discriminant() < 0.0) {
    out.which = dq.lead > 0.0 ? CoordinateCase::kIncreasing : CoordinateCase::kDecreasing;
    return out;
  }
  const auto roots = stationary_roots(dq);
  keep(roots->plus);
  keep(roots->minus);
  return out;
}

template <typename Eval>
void choose(CoordinateCandidates &out, Eval &&eval) {
  std::vector<double> all = out.endpoints;
  all.insert(all.end(), out.stationary_points.begin(), out.stationary_points.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  bool first = true;
  for (double x : all) {
    const double v = eval(x);
    // strict comparison: ties keep the smaller PA factor
    if (first || v > out.objective_at_chosen) {
      out.chosen = x;
      out.objective_at_chosen = v;
      first = false;
    }
  }
}

}  // namespace

std::optional<QuadraticRoots> stationary_roots(const DerivativeQuadratic &dq) {
  const double disc = dq.discriminant();
  if (dq.lead == 0.0 || disc < 0.0) return std::nullopt;
  const double s = std::sqrt(disc);
  const double h = dq.half_linear;
  // one root from the formula without cancellation, the other from the
  // product of roots constant/lead
  QuadraticRoots r;
  if (h >= 0.0) {
    const double t = -(h + s);
    r.minus = t / dq.lead;
    r.plus = t != 0.0 ? dq.constant / t : 0.0;
  } else {
    const double t = -h + s;
    r.plus = t / dq.lead;
    r.minus = dq.constant / t;
  }
  return r;
}

namespace {

struct Beta1Terms {
  Extended b3, c3, d3;
  Beta1Terms(const RationalCoefficients &q, Extended beta2)
      : b3(q.d2 + q.c2 * beta2), c3((q.e1 + q.b1 * beta2) * beta2 + q.f1), d3(q.d1 + q.c1 * beta2) {}
};

struct Beta2Terms {
  Extended b4, c4, d4, e4;
  Beta2Terms(const RationalCoefficients &q, Extended beta1)
      : b4(q.e1 + q.c2 * beta1),
        c4((q.d2 - q.a2 * beta1) * beta1 + q.f1),
        d4(q.e1 + q.c1 * beta1),
        e4((q.d1 - q.a1 * beta1) * beta1 + q.f1) {}
};

DerivativeQuadratic rounded(Extended lead, Extended half, Extended constant) {
  return {static_cast<double>(lead), static_cast<double>(half), static_cast<double>(constant)};
}

}  // namespace

DerivativeQuadratic beta1_derivative(const RationalCoefficients &q, double beta2) {
  const Beta1Terms t(q, beta2);
  return rounded(q.a1 * t.b3 - q.a2 * t.d3, q.a1 * t.c3 - q.a2 * t.c3, t.b3 * t.c3 - t.c3 * t.d3);
}

DerivativeQuadratic beta2_derivative(const RationalCoefficients &q, double beta1) {
  const Beta2Terms t(q, beta1);
  return rounded(q.b1 * t.d4 - q.b1 * t.b4, q.b1 * t.e4 - q.b1 * t.c4, t.b4 * t.e4 - t.c4 * t.d4);
}

CoordinateCandidates optimize_beta1(const RationalCoefficients &q, double beta2) {
  if (!(beta2 >= 0.0 && beta2 <= 1.0)) throw std::invalid_argument("optimize_beta1: beta2 must lie in [0, 1]");

  const Beta1Terms t(q, beta2);
  const auto dq = beta1_derivative(q, beta2);
  const double scale = term_scale({q.a1 * t.b3, q.a2 * t.d3, q.a1 * t.c3, q.a2 * t.c3, t.b3 * t.c3, t.c3 * t.d3});

  CoordinateCandidates out;
  auto eval = [&](double x) { return eval_beta1(q, beta2, x); };
  auto cls = classify(dq, scale);
  out.which = cls.which;
  out.endpoints = {1.0};
  out.stationary_points = std::move(cls.interior);

  choose(out, eval);

  // F(0, beta2) = 0. A best candidate below that while F falls away from
  // beta1 = 0 means the supremum is only approached at the excluded endpoint.
  const double slope_at_zero = dq.constant;
  if (out.objective_at_chosen < 0.0 && slope_at_zero < 0.0 && !negligible(slope_at_zero, scale)) {
    out.fallback_used = true;
    for (int k = 1; k <= kFallbackGrid; ++k) {
      const double x = static_cast<double>(k) / kFallbackGrid;
      const double v = eval(x);
      if (v > out.objective_at_chosen) {
        out.chosen = x;
        out.objective_at_chosen = v;
      }
    }
  }
  return out;
}

CoordinateCandidates optimize_beta2(const RationalCoefficients &q, double beta1) {
  if (!(beta1 >= 0.0 && beta1 <= 1.0)) throw std::invalid_argument("optimize_beta2: beta1 must lie in [0, 1]");

  const Beta2Terms t(q, beta1);
  const auto dq = beta2_derivative(q, beta1);
  const double scale = term_scale({q.b1 * t.d4, q.b1 * t.b4, q.b1 * t.e4, q.b1 * t.c4, t.b4 * t.e4, t.c4 * t.d4});

  CoordinateCandidates out;
  auto cls = classify(dq, scale);
  out.which = cls.which;
  out.stationary_points = std::move(cls.interior);
  // monotone cases resolve to an endpoint, so both endpoints always compete
  out.endpoints = {0.0, 1.0};
  choose(out, [&](double y) { return eval_beta2(q, beta1, y); });
  return out;
}

double policy_objective(const CoefficientBuilder &build, CoefficientPolicy policy, double beta2_init, double beta1,
                        double beta2) {
  const auto q = build(policy == CoefficientPolicy::kFreeze ? beta2_init : beta2);
  return secrecy_rate_rational(q, {beta1, beta2});
}

PAResult alternate(const CoefficientBuilder &build, const ScenarioConfig &cfg) {
  if (!(cfg.epsilon > 0.0)) throw std::invalid_argument("alternate: epsilon must be > 0");
  if (!(cfg.beta2_init >= 0.0 && cfg.beta2_init <= 1.0))
    throw std::invalid_argument("alternate: beta2_init must lie in [0, 1]");
  if (cfg.max_iterations < 1) throw std::invalid_argument("alternate: max_iterations must be >= 1");

  const bool freeze = cfg.policy == CoefficientPolicy::kFreeze;
  const RationalCoefficients frozen = freeze ? build(cfg.beta2_init) : RationalCoefficients{};
  auto coefficients = [&](double beta2) { return freeze ? frozen : build(beta2); };

  PAResult res;
  double beta2 = cfg.beta2_init;
  double previous = 0.0;  // R_s before the first iteration
  for (int it = 1; it <= cfg.max_iterations; ++it) {
    const auto q = coefficients(beta2);
    const auto step1 = optimize_beta1(q, beta2);
    const auto step2 = optimize_beta2(q, step1.chosen);
    res.fallback_steps += step1.fallback_used ? 1 : 0;

    const double beta1 = step1.chosen;
    const bool moved = step2.chosen != beta2;
    beta2 = step2.chosen;
    const double objective =
        (moved && !freeze) ? secrecy_rate_rational(coefficients(beta2), {beta1, beta2}) : step2.objective_at_chosen;

    res.trace.push_back({beta1, beta2, objective});
    res.iterations = it;
    if (std::abs(objective - previous) <= cfg.epsilon) {
      res.converged = true;
      break;
    }
    previous = objective;
  }
  const auto &last = res.trace.back();
  res.beta1_opt = last.beta1;
  res.beta2_opt = last.beta2;
  res.objective = last.objective;
  res.secrecy_rate = std::max(0.0, last.objective);
  return res;
}

GridOptimum grid_oracle(const CoefficientBuilder &build, const ScenarioConfig &cfg, int grid_points) {
  if (grid_points < 2) throw std::invalid_argument("grid_oracle: grid_points must be >= 2");
  const bool freeze = cfg.policy == CoefficientPolicy::kFreeze;
  const RationalCoefficients frozen = freeze ? build(cfg.beta2_init) : RationalCoefficients{};
  const double last = grid_points - 1;

  // maximize num/den directly; log2 is monotone
  Extended best_ratio = -1;
  GridOptimum best;
  for (int j = 0; j < grid_points; ++j) {
    const double y = j / last;
    const auto q = freeze ? frozen : build(y);
    for (int i = 0; i < grid_points; ++i) {
      const double x = i / last;
      const Extended num = q.numerator(x, y);
      const Extended den = q.denominator(x, y);
      if (!(num > 0) || !(den > 0)) throw std::domain_error("grid_oracle: quadratic not positive on the grid");
      const Extended ratio = num / den;
      if (ratio > best_ratio) {
        best_ratio = ratio;
        best.beta1 = x;
        best.beta2 = y;
      }
    }
  }
  const auto q = freeze ? frozen : build(best.beta2);
  best.objective = secrecy_rate_rational(q, {best.beta1, best.beta2});
  return best;
}

}  // namespace fdpa

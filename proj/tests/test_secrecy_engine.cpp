#include <doctest.h>

#include <cmath>
#include <random>

#include "fdpa/experiments.hpp"
#include "fdpa/secrecy_engine.hpp"
#include "oracles.hpp"

using namespace fdpa;

namespace {

RateCoefficients dense_coefficients(const ChannelSet &ch, const BeamformerSet &bf, const ScenarioConfig &cfg) {
  const Eigen::MatrixXcd an = bf.p_an * bf.p_an.adjoint();
  RateCoefficients rc;
  rc.a = ch.g_ab * cfg.p_a * oracle::hermitian_form(ch.h_sd, oracle::outer(bf.v_b));
  rc.b = ch.g_ab * cfg.p_a * oracle::hermitian_form(ch.h_sd, an);
  rc.c = cfg.p_b * cfg.rho * oracle::hermitian_form(ch.h_dd, oracle::outer(bf.q_an));
  rc.d = ch.g_ae * cfg.p_a * oracle::hermitian_form(ch.h_se, oracle::outer(bf.v_b));
  rc.e = ch.g_ae * cfg.p_a * oracle::hermitian_form(ch.h_se, an);
  rc.f = ch.g_be * cfg.p_b * oracle::hermitian_form(ch.h_de, oracle::outer(bf.q_an));
  return rc;
}

bool rel_close(double got, double want, double tol, double floor = 0.0) {
  return std::abs(got - want) <= tol * std::max(std::abs(want), floor);
}

}  // namespace

TEST_CASE("rate_coefficients: defaults at 100 m") {
  // frozen from a 40-digit evaluation of the same pipeline
  const ScenarioConfig cfg;
  const NetworkInstance net(cfg, 100.0);

  const auto rc = net.rate_coefficients(0.1);
  CHECK(rel_close(rc.a, 1e-4, 1e-12));
  CHECK(std::abs(rc.b) <= 1e-12 * rc.a);
  // C is |h_dd^H q|^2 with q nearly orthogonal to h_dd: a ~1e-10 projection
  // read through double dot products, so only ~5 digits survive
  CHECK(rel_close(rc.c, 8.0064196012243156e-22, 1e-4));
  CHECK(rel_close(rc.d, 2.0512616906341807e-5, 1e-12));
  CHECK(rel_close(rc.e, 6.4105472766545609e-7, 1e-12));
  CHECK(rel_close(rc.f, 4.7934650697546733e-5, 1e-12));

  const auto half = net.rate_coefficients(0.5);
  CHECK(rel_close(half.c, 3.2025678507379434e-23, 1e-4));
  CHECK(rel_close(half.f, 4.7934650696932678e-5, 1e-12));

  const auto s2b = cfg.sigma2_b, s2e = cfg.sigma2_e;
  CHECK(secrecy_rate_direct(half, {0.5, 0.5}, s2b, s2e) == doctest::Approx(18.423366285966496).epsilon(1e-10));
  CHECK(secrecy_rate_direct(net.rate_coefficients(1.0), {1.0, 1.0}, s2b, s2e) ==
        doctest::Approx(19.41764688269291).epsilon(1e-10));
}

TEST_CASE("rate_coefficients: agree with dense Hermitian forms") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto cfg = oracle::random_scenario(rng);
    const double r = oracle::random_distance(rng);
    const double beta2 = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const NetworkInstance net(cfg, r);
    const auto bf = net.beamformers(beta2);
    const auto got = net.rate_coefficients(beta2);
    const auto want = dense_coefficients(net.channels(), bf, cfg);
    const double scale_a = net.channels().g_ab * cfg.p_a;
    const double scale_e = net.channels().g_ae * cfg.p_a;
    CHECK(rel_close(got.a, want.a, 1e-12));
    CHECK(std::abs(got.b - want.b) <= 1e-12 * scale_a);
    CHECK(std::abs(got.c - want.c) <= 1e-12 * cfg.p_b * cfg.rho);
    CHECK(rel_close(got.d, want.d, 1e-10, scale_e * 1e-6));
    CHECK(std::abs(got.e - want.e) <= 1e-12 * scale_e);
    CHECK(std::abs(got.f - want.f) <= 1e-12 * net.channels().g_be * cfg.p_b);
  }
}

TEST_CASE("rate_coefficients: MRT and null-space AN at Bob") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const auto cfg = oracle::random_scenario(rng);
    const NetworkInstance net(cfg, oracle::random_distance(rng));
    const auto rc = net.rate_coefficients(0.5);
    const double full = net.channels().g_ab * cfg.p_a;
    CHECK(rel_close(rc.a, full, 1e-12));
    CHECK(std::abs(rc.b) <= 1e-12 * full);
  }
}

TEST_CASE("rate_coefficients: mismatched lengths throw") {
  const ScenarioConfig cfg;
  const NetworkInstance net(cfg, 100.0);
  auto bf = net.beamformers(0.5);
  bf.q_an = Eigen::VectorXcd::Constant(3, 1.0);
  CHECK_THROWS_AS(rate_coefficients(net.channels(), bf, cfg), std::invalid_argument);
}

TEST_CASE("rational_coefficients: match the polynomial expansion") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto [rc, s2b, s2e] = oracle::random_coefficients(rng);
    const auto q = rational_coefficients(rc, s2b, s2e);
    const auto [num, den] = oracle::expand_ratio(rc, s2b, s2e);
    const double scale = (rc.a + rc.b + rc.c + s2b) * (rc.d + rc.e + rc.f + s2e);
    auto same = [&](double got, double want) { return std::abs(got - want) <= 1e-13 * scale; };

    CHECK(same(-q.a2, num.at(2, 0)));
    CHECK(same(q.b1, num.at(0, 2)));
    CHECK(same(q.c2, num.at(1, 1)));
    CHECK(same(q.d2, num.at(1, 0)));
    CHECK(same(q.e1, num.at(0, 1)));
    CHECK(same(q.f1, num.at(0, 0)));

    CHECK(same(-q.a1, den.at(2, 0)));
    CHECK(same(q.b1, den.at(0, 2)));
    CHECK(same(q.c1, den.at(1, 1)));
    CHECK(same(q.d1, den.at(1, 0)));
    CHECK(same(q.e1, den.at(0, 1)));
    CHECK(same(q.f1, den.at(0, 0)));
  }
}

TEST_CASE("rational_coefficients: degenerate inputs") {
  RateCoefficients rc{2.0, 0.0, 0.3, 1.0, 0.2, 0.4};
  CHECK(rational_coefficients(rc, 0.1, 0.1).a1 == 0.0);

  rc = {2.0, 0.5, 0.0, 1.0, 0.2, 0.0};
  const auto q = rational_coefficients(rc, 0.1, 0.1);
  CHECK(q.b1 == 0.0);
  CHECK(q.e1 == 0.0);
}

TEST_CASE("secrecy rate: rational and direct forms agree on a grid") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto [rc, s2b, s2e] = oracle::random_coefficients(rng);
    const auto q = rational_coefficients(rc, s2b, s2e);
    for (int i = 0; i <= 20; ++i)
      for (int j = 0; j <= 20; ++j) {
        const PAPoint p{i / 20.0, j / 20.0};
        const double direct = secrecy_gap_direct(rc, p, s2b, s2e);
        const double rational = secrecy_rate_rational(q, p);
        CHECK(std::abs(direct - rational) <= 1e-9);
      }
  }
}

TEST_CASE("secrecy rate: no message means no secrecy") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [rc, s2b, s2e] = oracle::random_coefficients(rng);
    const auto q = rational_coefficients(rc, s2b, s2e);
    for (double y : {0.0, 0.3, 1.0}) {
      CHECK(secrecy_rate_rational(q, {0.0, y}) == 0.0);
      CHECK(secrecy_rate_direct(rc, {0.0, y}, s2b, s2e) == 0.0);
    }
  }
}

TEST_CASE("secrecy rate: without Eve it is Bob's rate") {
  const RateCoefficients rc{3.0, 0.5, 0.2, 0.0, 0.0, 0.0};
  const double s2b = 0.1, s2e = 0.2;
  for (double x : {0.25, 0.5, 1.0})
    for (double y : {0.0, 0.5, 1.0}) {
      const double want = std::log2(1.0 + rc.a * x / ((1 - x) * rc.b + y * rc.c + s2b));
      CHECK(secrecy_rate_direct(rc, {x, y}, s2b, s2e) == doctest::Approx(want).epsilon(1e-14));
    }
}

TEST_CASE("secrecy rate: clamp and monotonicity") {
  // Eve with a far better channel than Bob
  const RateCoefficients rc{0.1, 0.0, 0.0, 5.0, 0.0, 0.0};
  CHECK(secrecy_gap_direct(rc, {1.0, 0.0}, 1.0, 1.0) < 0.0);
  CHECK(secrecy_rate_direct(rc, {1.0, 0.0}, 1.0, 1.0) == 0.0);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    auto [rc2, s2b, s2e] = oracle::random_coefficients(rng);
    const PAPoint p{0.7, 0.4};
    const double before = secrecy_gap_direct(rc2, p, s2b, s2e);
    rc2.a *= 1.5;
    CHECK(secrecy_gap_direct(rc2, p, s2b, s2e) > before);
  }
}

TEST_CASE("secrecy rate: invalid points") {
  const RateCoefficients rc{1.0, 0.1, 0.1, 0.5, 0.1, 0.1};
  CHECK_THROWS_AS(secrecy_rate_direct(rc, {1.2, 0.0}, 0.1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(secrecy_rate_direct(rc, {0.5, -0.1}, 0.1, 0.1), std::invalid_argument);

  RationalCoefficients bad;
  bad.f1 = -1.0;
  CHECK_THROWS_AS(secrecy_rate_rational(bad, {0.5, 0.5}), std::domain_error);
}

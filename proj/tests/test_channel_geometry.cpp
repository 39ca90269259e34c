#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fdpa/channel_geometry.hpp"
#include "oracles.hpp"

using namespace fdpa;

TEST_CASE("steering_vector: single antenna is the phase centre") {
  for (double theta : {0.1, 1.0, 2.5}) {
    const auto h = steering_vector(theta, 1, 0.5);
    REQUIRE(h.size() == 1);
    CHECK(h(0).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(h(0).imag()) < 1e-15);
  }
}

TEST_CASE("steering_vector: broadside gives equal phases") {
  const auto h = steering_vector(std::numbers::pi / 2, 4, 0.5);
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(h(k) - std::complex<double>(0.5, 0.0)) < 1e-15);
  }
}

TEST_CASE("steering_vector: 22 degrees, 8 elements") {
  // frozen from a 40-digit evaluation of the phase function
  const std::complex<double> expected[8] = {
      {-0.25378504817916409, -0.24615675761737554}, {0.19135295366304697, 0.2972945460724562},
      {-0.11895085003555678, -0.33294248043140795}, {0.040351083733110443, 0.35124320639916085},
      {0.040351083733110443, -0.35124320639916085}, {-0.11895085003555678, 0.33294248043140795},
      {0.19135295366304697, -0.2972945460724562},   {-0.25378504817916409, 0.24615675761737554}};
  const auto h = steering_vector(deg_to_rad(22.0), 8, 0.5);
  const auto loop = oracle::steering_loop(deg_to_rad(22.0), 8, 0.5);
  for (int k = 0; k < 8; ++k) {
    CHECK(std::abs(h(k) - expected[k]) < 1e-14);
    CHECK(std::abs(h(k) - loop[k]) < 1e-14);
  }
}

TEST_CASE("steering_vector: invalid arguments") {
  CHECK_THROWS_AS(steering_vector(0.3, 0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(steering_vector(NAN, 4, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(steering_vector(INFINITY, 4, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(steering_vector(0.3, 4, 0.0), std::invalid_argument);
}

TEST_CASE("steering_vector: unit norm, constant modulus, conjugate symmetry") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> spacing(0.05, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 32);
    const double theta = angle(rng);
    const double s = spacing(rng);
    const auto h = steering_vector(theta, n, s);
    CHECK(std::abs(h.norm() - 1.0) < 1e-12);
    for (int k = 0; k < n; ++k) CHECK(std::abs(std::abs(h(k)) - 1.0 / std::sqrt(double(n))) < 1e-12);

    const auto mirrored = steering_vector(std::numbers::pi - theta, n, s);
    CHECK((mirrored - h.conjugate()).norm() < 1e-12);
  }
}

TEST_CASE("path_loss") {
  CHECK(path_loss(1.0, 1.0, 2.0) == 1.0);
  CHECK(path_loss(200.0, 1.0, 2.0) == doctest::Approx(2.5e-5).epsilon(1e-14));
  CHECK(path_loss(400.0, 1.0, 2.0) == doctest::Approx(6.25e-6).epsilon(1e-14));
  CHECK_THROWS_AS(path_loss(0.0, 1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(path_loss(-3.0, 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("build_channels: geometry") {
  ScenarioConfig cfg;

  SUBCASE("Bob level with Eve: law of cosines") {
    const auto ch = build_channels(cfg, 200.0);
    const double expected = std::sqrt(200.0 * 200.0 * 2.0 - 2.0 * 200.0 * 200.0 * std::cos(deg_to_rad(8.0)));
    CHECK(ch.d_be == doctest::Approx(expected).epsilon(1e-13));
    CHECK(ch.d_be == doctest::Approx(27.90258949765012).epsilon(1e-12));
    CHECK(ch.g_be == doctest::Approx(1.0 / (expected * expected)).epsilon(1e-12));
  }

  SUBCASE("defaults at 100 m") {
    const auto ch = build_channels(cfg, 100.0);
    CHECK(ch.d_ab == 100.0);
    CHECK(ch.d_ae == 200.0);
    CHECK(ch.g_ab == doctest::Approx(1e-4).epsilon(1e-14));
    CHECK(ch.g_ae == doctest::Approx(2.5e-5).epsilon(1e-14));
    // bearing of Eve seen from Bob, frozen from a 40-digit evaluation
    CHECK(ch.theta_be == doctest::Approx(0.66056750009001021).epsilon(1e-13));
    CHECK(ch.d_be == doctest::Approx(101.92780410828631).epsilon(1e-13));
    CHECK((ch.h_de - steering_vector(ch.theta_be, 8, 0.5)).norm() == 0.0);
    CHECK(std::abs(ch.h_sd.norm() - 1.0) < 1e-12);
    CHECK(std::abs(ch.h_se.norm() - 1.0) < 1e-12);
    CHECK(std::abs(ch.h_de.norm() - 1.0) < 1e-12);
    CHECK(std::abs(ch.h_dd.norm() - 1.0) < 1e-12);  // all-ones / sqrt(N)
  }

  SUBCASE("collinear Bob on Eve is degenerate") {
    cfg.theta_undesired = cfg.theta_desired;
    CHECK_THROWS_AS(build_channels(cfg, 200.0), std::invalid_argument);
  }

  SUBCASE("nonpositive distance") {
    CHECK_THROWS_AS(build_channels(cfg, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_channels(cfg, -5.0), std::invalid_argument);
  }

  SUBCASE("no Eve zeroes her gains") {
    cfg.eve_present = false;
    const auto ch = build_channels(cfg, 100.0);
    CHECK(ch.g_ae == 0.0);
    CHECK(ch.g_be == 0.0);
    CHECK(ch.g_ab > 0.0);
  }
}

TEST_CASE("build_channels: deterministic in every loop mode") {
  ScenarioConfig cfg;
  cfg.loop_channel_mode = LoopChannelMode::kSeededGaussian;
  cfg.seed = 1234;
  const auto a = build_channels(cfg, 150.0);
  const auto b = build_channels(cfg, 150.0);
  CHECK((a.h_dd - b.h_dd).norm() == 0.0);
  CHECK((a.h_de - b.h_de).norm() == 0.0);

  cfg.seed = 1235;
  CHECK((build_channels(cfg, 150.0).h_dd - a.h_dd).norm() > 0.0);
}

TEST_CASE("loop_channel: seeded gaussian has roughly unit entry variance") {
  ScenarioConfig cfg;
  cfg.loop_channel_mode = LoopChannelMode::kSeededGaussian;
  cfg.n_antennas = 20000;
  cfg.seed = 99;
  const auto h = loop_channel(cfg);
  CHECK(h.squaredNorm() / h.size() == doctest::Approx(1.0).epsilon(0.03));
  CHECK(std::abs(h.mean()) < 0.03);
}

TEST_CASE("flight_distance") {
  ScenarioConfig cfg;
  CHECK(flight_distance(cfg, 0.0) == 0.0);
  CHECK(flight_distance(cfg, 12.5) == 125.0);
  CHECK(flight_distance(cfg, 40.0) == 400.0);
  CHECK_THROWS_AS(flight_distance(cfg, 40.5), std::invalid_argument);
  CHECK_THROWS_AS(flight_distance(cfg, -1.0), std::invalid_argument);
}

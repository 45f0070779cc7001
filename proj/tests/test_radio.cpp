#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cellassoc/radio.hpp"

using namespace cellassoc;

TEST_CASE("distance handles both dimensions") {
  Station s;
  s.position = {1.0, 2.0};
  CHECK(distance(s, {4.0, 6.0}) == Catch::Approx(5.0));
  CHECK(distance(s, {1.0, 2.0}) == 0.0);
}

TEST_CASE("channel gain follows the lifted path-loss law") {
  RadioParams p;  // sigma2 1, xi 2, height 1
  Station s;
  s.position = {0.0, 0.0};
  CHECK(channel_gain(p, s, {0.0, 0.0}) == Catch::Approx(1.0));
  const double d = std::sqrt(3.0);
  CHECK(channel_gain(p, s, {d, 0.0}) == Catch::Approx(0.25));
  p.xi = 4.0;
  CHECK(channel_gain(p, s, {d, 0.0}) == Catch::Approx(1.0 / 16.0));
  p.height = 0.0;
  p.xi = 2.0;
  CHECK(channel_gain(p, s, {2.0, 0.0}) == Catch::Approx(0.25));
}

TEST_CASE("snr and throughput") {
  RadioParams p;
  p.sigma2 = 4.0;
  CHECK(snr(p, 8.0, 0.5) == Catch::Approx(1.0));
  CHECK(throughput(0.0) == 0.0);
  CHECK(throughput(1.0) == Catch::Approx(1.0));
  CHECK(throughput(3.0) == Catch::Approx(2.0));
  CHECK_THROWS_AS(snr(p, -1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(throughput(-0.1), std::invalid_argument);
}

TEST_CASE("round-robin power inverts the rate formula") {
  RadioParams p;
  p.sigma2 = 0.09;
  p.xi = 3.0;
  p.height = 0.5;
  p.theta_bar = 2.5e-3;
  Station s;
  s.position = {1.0, 0.0};
  const Point x{3.0, 0.0};
  const double n = 640.0;
  const double power = required_power_round_robin(p, s, x, n);
  CHECK(power > 0.0);
  // Serving one user full-time at that power yields exactly n * theta_bar,
  // so each of the n time-shared users sees theta_bar.
  const double rate = throughput(snr(p, power, channel_gain(p, s, x)));
  CHECK(rate == Catch::Approx(n * p.theta_bar).epsilon(1e-12));

  CHECK(required_power_round_robin(p, s, x, 0.0) == 0.0);
  CHECK_THROWS_AS(required_power_round_robin(p, s, x, -1.0), std::invalid_argument);
}

TEST_CASE("power is monotone in load and in distance") {
  RadioParams p;
  p.theta_bar = 1e-3;
  Station s;
  s.position = {0.0, 0.0};
  const double p1 = required_power_round_robin(p, s, {1.0, 0.0}, 100.0);
  const double p2 = required_power_round_robin(p, s, {1.0, 0.0}, 200.0);
  const double p3 = required_power_round_robin(p, s, {2.0, 0.0}, 100.0);
  CHECK(p2 > p1);
  CHECK(p3 > p1);
}

TEST_CASE("rate exponent overflow guard") {
  RadioParams p;
  p.theta_bar = 1.0;
  Station s;
  CHECK_THROWS_WITH(required_power_round_robin(p, s, {0.0, 0.0}, 1001.0),
                    Catch::Matchers::ContainsSubstring("overflow guard"));
  CHECK_NOTHROW(required_power_round_robin(p, s, {0.0, 0.0}, 999.0));
}

TEST_CASE("radio parameter validation") {
  RadioParams p;
  CHECK_NOTHROW(validate_radio(p));
  p.sigma2 = 0.0;
  CHECK_THROWS_WITH(validate_radio(p), Catch::Matchers::ContainsSubstring("sigma2"));
  p = RadioParams{};
  p.xi = -2.0;
  CHECK_THROWS_WITH(validate_radio(p), Catch::Matchers::ContainsSubstring("xi"));
  p = RadioParams{};
  p.height = -1.0;
  CHECK_THROWS_WITH(validate_radio(p), Catch::Matchers::ContainsSubstring("height"));
  p = RadioParams{};
  p.theta_bar = 0.0;
  CHECK_THROWS_WITH(validate_radio(p), Catch::Matchers::ContainsSubstring("theta_bar"));
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cellassoc/cellassoc.hpp"
#include "checkers.hpp"

using namespace cellassoc;

namespace {

Station station_at(int idx, double x, double y = 0.0, double power = 1.0) {
  Station s;
  s.index = idx;
  s.position = {x, y};
  s.tx_power = power;
  return s;
}

RadioParams softer_noise() {
  RadioParams p;
  p.sigma2 = 0.09;
  return p;
}

}  // namespace

TEST_CASE("rate share scales inversely with the cell size") {
  const EquilibriumModel model = make_rate_share_model(softer_noise(), 2500.0);
  const Station s = station_at(0, 0.0);
  const Point p{3.0, 0.0};
  const double r = offered_rate(model, s, p, 0.2);
  CHECK(r > 0.0);
  CHECK(offered_rate(model, s, p, 0.4) == Catch::Approx(r / 2.0));
  CHECK(std::isinf(offered_rate(model, s, p, 0.0)));
  CHECK_THROWS_AS(offered_rate(model, s, p, -0.1), std::invalid_argument);

  EquilibriumModel empty;
  CHECK_THROWS_AS(offered_rate(empty, s, p, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(make_rate_share_model(softer_noise(), 0.5), std::invalid_argument);
}

TEST_CASE("cost offers require an additive spec") {
  const CongestionSpec mult = make_multiplicative_spec(
      distance_cost(1.0), {constant_fn(1.0)}, {constant_fn(0.0)});
  CHECK_THROWS_AS(make_cost_offer_model(mult, 100.0), std::invalid_argument);

  const CongestionSpec add = make_additive_spec(
      distance_cost(1.0), {constant_fn(2.0)}, {constant_fn(0.0)});
  const EquilibriumModel model = make_cost_offer_model(add, 100.0);
  CHECK(model.offer(station_at(0, 0.0), {3.0, 0.0}, 0.5) == Catch::Approx(-5.0));
  CHECK_THROWS_AS(model.offer(station_at(7, 0.0), {1.0, 0.0}, 0.5), std::invalid_argument);
}

TEST_CASE("symmetric stations share the line at the midpoint") {
  const Domain d = make_interval_domain(-10.0, 10.0, 2000);
  const DensityField f = build_uniform_density(d);
  const EquilibriumModel model = make_rate_share_model(softer_noise(), 2500.0);

  const auto sols = solve_equilibrium(d, f, {station_at(0, -5.0), station_at(1, 5.0)}, model);
  REQUIRE(sols.size() == 1);
  const EquilibriumSolution& eq = sols[0];
  CHECK(eq.converged);
  REQUIRE(eq.thresholds.size() == 1);
  CHECK(std::fabs(eq.thresholds[0]) <= 1e-6);
  CHECK(eq.partition.masses[0] == Catch::Approx(0.5).margin(1e-3));
  CHECK(eq.partition.masses[1] == Catch::Approx(0.5).margin(1e-3));
  CHECK(eq.common_rate > 0.0);
  CHECK(eq.residual <= 1e-9);
}

TEST_CASE("a stronger station captures the larger cell") {
  const Domain d = make_interval_domain(-10.0, 10.0, 2000);
  const DensityField f = build_uniform_density(d);
  const EquilibriumModel model = make_rate_share_model(softer_noise(), 2500.0);

  const auto sols = solve_equilibrium(
      d, f, {station_at(0, -5.0, 0.0, 1.0), station_at(1, 5.0, 0.0, 4.0)}, model);
  REQUIRE_FALSE(sols.empty());
  const EquilibriumSolution eq = select_equilibrium(sols, SelectCriterion::best);
  REQUIRE(eq.thresholds.size() == 1);
  CHECK(eq.thresholds[0] < 0.0);
  CHECK(eq.partition.masses[1] > eq.partition.masses[0]);
}

TEST_CASE("three symmetric stations produce mirrored thresholds") {
  const Domain d = make_interval_domain(-10.0, 10.0, 2000);
  const DensityField f = build_uniform_density(d);
  const EquilibriumModel model = make_rate_share_model(softer_noise(), 2500.0);
  const std::vector<Station> st = {station_at(0, -10.0), station_at(1, 0.0),
                                   station_at(2, 10.0)};

  const auto sols = solve_equilibrium(d, f, st, model);
  REQUIRE_FALSE(sols.empty());
  const EquilibriumSolution eq = select_equilibrium(sols, SelectCriterion::best);
  CHECK(eq.converged);
  REQUIRE(eq.thresholds.size() == 2);
  CHECK(eq.thresholds[0] + eq.thresholds[1] == Catch::Approx(0.0).margin(1e-6));
  CHECK(eq.partition.masses[0] == Catch::Approx(eq.partition.masses[2]).margin(1e-3));
  CHECK(eq.residual <= 1e-6);

  const std::vector<Station> unsorted = {station_at(0, 5.0), station_at(1, -5.0),
                                         station_at(2, 8.0)};
  CHECK_THROWS_AS(solve_equilibrium_1d_multi(d, f, unsorted, model), std::invalid_argument);
}

TEST_CASE("no single user can gain by deviating at equilibrium") {
  testutil::Lcg rng(20260822u);
  const EquilibriumModel model = make_rate_share_model(softer_noise(), 2500.0);
  for (int trial = 0; trial < 6; ++trial) {
    const Domain d = make_interval_domain(-10.0, 10.0, 4000);
    const DensityField f = build_density_from_samples(d, [&](const Point& p) {
      return 1.0 + 0.04 * (trial + 1) * (p.x + 10.0);
    });
    const double x0 = rng.range(-8.0, -1.0);
    const double x1 = rng.range(1.0, 8.0);
    std::vector<Station> st = {station_at(0, x0, 0.0, rng.range(0.5, 2.0)),
                               station_at(1, x1, 0.0, rng.range(0.5, 2.0))};
    const auto sols = solve_equilibrium(d, f, st, model, 4000);
    REQUIRE_FALSE(sols.empty());
    for (const auto& eq : sols) {
      CHECK(eq.converged);
      CHECK(testutil::worst_deviation_gain(d, st, model, eq.partition) <= 1e-6);
    }
  }
}

TEST_CASE("small 2d grids reach a deviation-proof split") {
  const Domain d = make_rect_domain(-4.0, 4.0, -4.0, 4.0, 48, 48);
  const DensityField f = build_uniform_density(d);
  const EquilibriumModel model = make_rate_share_model(softer_noise(), 2500.0);
  const std::vector<Station> st = {station_at(0, -2.0, -2.0), station_at(1, 2.0, -2.0),
                                   station_at(2, -2.0, 2.0), station_at(3, 2.0, 2.0),
                                   station_at(4, 0.0, 0.0)};

  const auto sols = solve_equilibrium(d, f, st, model);
  REQUIRE(sols.size() == 1);
  const EquilibriumSolution& eq = sols[0];
  CHECK(eq.converged);
  CHECK(eq.residual <= 1e-9);
  CHECK(eq.thresholds.empty());
  CHECK(eq.common_rate > 0.0);
  double total = 0.0;
  for (double m : eq.partition.masses) {
    CHECK(m > 0.0);
    total += m;
  }
  CHECK(total == Catch::Approx(1.0).margin(1e-9));
  CHECK(testutil::worst_deviation_gain(d, st, model, eq.partition) <= 1e-9);

  // The four corner stations are symmetric; the center one serves the rest.
  CHECK(eq.partition.masses[0] == Catch::Approx(eq.partition.masses[3]).margin(1e-2));
}

TEST_CASE("equilibrium selection picks by common rate") {
  EquilibriumSolution a, b;
  a.common_rate = 1.0;
  a.thresholds = {0.3};
  b.common_rate = 2.0;
  b.thresholds = {0.6};
  const EquilibriumSolution best = select_equilibrium({a, b}, SelectCriterion::best);
  CHECK(best.common_rate == 2.0);
  CHECK(best.classification == EquilibriumClass::best);
  const EquilibriumSolution worst = select_equilibrium({a, b}, SelectCriterion::worst);
  CHECK(worst.common_rate == 1.0);
  CHECK(worst.classification == EquilibriumClass::worst);
  CHECK(to_string(best.classification) == "best");
  CHECK(to_string(EquilibriumClass::unclassified) == "unclassified");
  CHECK_THROWS_AS(select_equilibrium({}, SelectCriterion::best), std::invalid_argument);

  // Equal rates break the tie toward the lower first threshold.
  b.common_rate = 1.0;
  const EquilibriumSolution tied = select_equilibrium({a, b}, SelectCriterion::best);
  CHECK(tied.thresholds[0] == 0.3);
}

TEST_CASE("the capacity toy pins everyone to one station") {
  const PoaToyReport toy = poa_toy_example();
  REQUIRE(toy.equilibria.size() == 1);
  CHECK(toy.equilibrium.partition.masses[0] == 0.0);
  CHECK(std::fabs(toy.equilibrium.partition.masses[1] - 1.0) <= 1e-9);
  CHECK(toy.equilibrium.classification == EquilibriumClass::worst);
  CHECK(toy.equilibrium_cost == Catch::Approx(1.5).epsilon(1e-9));
  CHECK(toy.optimum_cost == Catch::Approx(0.599001).epsilon(1e-9));
  CHECK(std::fabs(toy.optimum_boundary - 0.001) <= 1.0001e-5);
  CHECK(toy.ratio == Catch::Approx(2.5041694421).epsilon(1e-6));
  CHECK(toy.ratio > 1.0);
  CHECK(toy.optimum.masses[0] == Catch::Approx(0.001).margin(1e-5));
}

TEST_CASE("price of anarchy is one for an uncongested game") {
  const Domain d = make_interval_domain(0.0, 1.0, 2000);
  const DensityField f = build_uniform_density(d);
  const std::vector<Station> st = {station_at(0, 0.3), station_at(1, 0.7)};
  const CongestionSpec spec = make_additive_spec(
      distance_cost(2.0), std::vector<MassFn>(2, constant_fn(0.0)),
      std::vector<MassFn>(2, constant_fn(0.0)));
  const EquilibriumModel model = make_cost_offer_model(spec, 2500.0);

  const double ratio = price_of_anarchy(d, f, st, softer_noise(), spec, model);
  CHECK(ratio >= 1.0 - 1e-9);
  CHECK(ratio == Catch::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("a zero-cost optimum is rejected") {
  const Domain d = make_interval_domain(0.0, 1.0, 100);
  const DensityField f = build_uniform_density(d);
  const std::vector<Station> st = {station_at(0, 0.3), station_at(1, 0.7)};
  const CongestionSpec spec = make_additive_spec(
      [](const Station&, const Point&) { return 0.0; },
      std::vector<MassFn>(2, constant_fn(0.0)), std::vector<MassFn>(2, constant_fn(0.0)));
  const EquilibriumModel model = make_cost_offer_model(spec, 2500.0);
  CHECK_THROWS_WITH(price_of_anarchy(d, f, st, softer_noise(), spec, model),
                    Catch::Matchers::ContainsSubstring("optimum cost is zero"));
}

TEST_CASE("degenerate two-station inputs are rejected") {
  const Domain d = make_interval_domain(0.0, 1.0, 100);
  const DensityField f = build_uniform_density(d);
  const EquilibriumModel model = make_rate_share_model(softer_noise(), 2500.0);
  CHECK_THROWS_AS(solve_equilibrium_1d_two_stations(d, f, station_at(0, 0.5),
                                                    station_at(1, 0.5), model),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_equilibrium_1d_two_stations(d, f, station_at(0, 0.2),
                                                    station_at(1, 0.8), model, 1),
                  std::invalid_argument);
}

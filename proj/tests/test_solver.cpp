#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "cellassoc/cellassoc.hpp"
#include "checkers.hpp"

using namespace cellassoc;

namespace {

Station station_at(int idx, double x, double y = 0.0) {
  Station s;
  s.index = idx;
  s.position = {x, y};
  return s;
}

CongestionSpec zero_additive(const BaseCostFn& base, int k) {
  return make_additive_spec(base, std::vector<MassFn>(k, constant_fn(0.0)),
                            std::vector<MassFn>(k, constant_fn(0.0)));
}

}  // namespace

TEST_CASE("zero congestion terms reproduce voronoi from the warm start") {
  const Domain d = make_interval_domain(0.0, 1.0, 2000);
  const DensityField f = build_uniform_density(d);
  const std::vector<Station> st = {station_at(0, 0.25), station_at(1, 0.8)};

  auto [part, report] = solve_additive(d, f, st, zero_additive(distance_cost(2.0), 2));
  const Partition ref = voronoi_partition(d, f, st);
  CHECK(report.converged);
  CHECK(report.iterations <= 2);
  CHECK(report.residual <= 1e-8);
  CHECK(part.assignment == ref.assignment);

  const CongestionSpec unit = make_multiplicative_spec(
      distance_cost(2.0), std::vector<MassFn>(3, constant_fn(1.0)),
      std::vector<MassFn>(3, constant_fn(0.0)));
  const std::vector<Station> st3 = {station_at(0, 0.1), station_at(1, 0.55),
                                    station_at(2, 0.9)};
  auto [part3, report3] = solve_multiplicative(d, f, st3, unit);
  CHECK(report3.converged);
  CHECK(report3.iterations <= 2);
  CHECK(part3.assignment == voronoi_partition(d, f, st3).assignment);
}

TEST_CASE("mirror-symmetric stations split the mass evenly") {
  const Domain d = make_interval_domain(0.0, 1.0, 2000);
  const DensityField f = build_uniform_density(d);
  const std::vector<Station> st = {station_at(0, 0.3), station_at(1, 0.7)};
  RadioParams rp;
  rp.theta_bar = 1e-3;

  auto [part, report] = round_robin_solver(d, f, st, rp, 2500.0);
  REQUIRE(report.converged);
  CHECK(part.masses[0] == Catch::Approx(0.5).margin(1e-3));
  CHECK(part.masses[1] == Catch::Approx(0.5).margin(1e-3));
  CHECK(part.user_counts[0] == Catch::Approx(1250.0).margin(2.0));
  CHECK(report.total_power == Catch::Approx(2500.0 * report.total_cost));
  CHECK(report.max_mass_sum_error <= 1e-9);
  CHECK(part.masses[0] + part.masses[1] == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("a congestion term sheds load monotonically") {
  const Domain d = make_interval_domain(0.0, 1.0, 1000);
  const DensityField f = build_uniform_density(d);
  const std::vector<Station> st = {station_at(0, 0.4), station_at(1, 0.6)};

  double prev = 1.0;
  for (double c : {0.0, 0.1, 1.0, 10.0}) {
    const CongestionSpec spec = make_additive_spec(
        distance_cost(2.0),
        {[c](double n) { return c * n; }, constant_fn(0.0)},
        {constant_fn(c), constant_fn(0.0)});
    auto [part, report] = solve_additive(d, f, st, spec);
    REQUIRE(report.converged);
    CHECK(part.masses[0] <= prev + 1e-12);
    prev = part.masses[0];
  }
  CHECK(prev < 0.25);
}

TEST_CASE("small instances match the exhaustive oracle") {
  const Domain d = make_interval_domain(0.0, 1.0, 14);
  const DensityField f =
      build_density_from_samples(d, [](const Point& p) { return 0.4 + p.x; });
  const std::vector<Station> st = {station_at(0, 0.15), station_at(1, 0.85)};

  SECTION("additive") {
    const CongestionSpec spec = make_additive_spec(
        distance_cost(2.0),
        std::vector<MassFn>(2, [](double n) { return 0.5 * n * n; }),
        std::vector<MassFn>(2, [](double n) { return n; }));
    auto [part, report] = solve_additive(d, f, st, spec);
    auto [opart, ocost] = brute_force_oracle(d, f, st, spec, OracleMode::exhaustive);
    REQUIRE(report.converged);
    CHECK(std::fabs(report.total_cost - ocost) <= 1e-9);
    CHECK(total_cost(part, d, f, st, spec) >= ocost - 1e-12);
  }

  SECTION("multiplicative") {
    const CongestionSpec spec = make_multiplicative_spec(
        distance_cost(2.0),
        std::vector<MassFn>(2, [](double n) { return 1.0 + n * n; }),
        std::vector<MassFn>(2, [](double n) { return 2.0 * n; }));
    auto [part, report] = solve_multiplicative(d, f, st, spec);
    auto [opart, ocost] = brute_force_oracle(d, f, st, spec, OracleMode::exhaustive);
    REQUIRE(report.converged);
    CHECK(std::fabs(report.total_cost - ocost) <= 1e-9);
  }

  SECTION("three stations") {
    const Domain d12 = make_interval_domain(0.0, 1.0, 12);
    const DensityField f12 =
        build_density_from_samples(d12, [](const Point& p) { return 1.5 - p.x; });
    const std::vector<Station> st3 = {station_at(0, 0.1), station_at(1, 0.5),
                                      station_at(2, 0.9)};
    const CongestionSpec spec = make_additive_spec(
        distance_cost(2.0), std::vector<MassFn>(3, [](double n) { return n; }),
        std::vector<MassFn>(3, constant_fn(1.0)));
    auto [part, report] = solve_additive(d12, f12, st3, spec);
    auto [opart, ocost] = brute_force_oracle(d12, f12, st3, spec, OracleMode::exhaustive);
    REQUIRE(report.converged);
    CHECK(std::fabs(report.total_cost - ocost) <= 1e-9);
  }
}

TEST_CASE("full-resolution runs agree with the threshold-scan oracle") {
  const Domain d = make_interval_domain(0.0, 1.0, 10000);
  const DensityField f =
      build_density_from_samples(d, [](const Point& p) { return 0.5 + p.x; });
  const std::vector<Station> st = {station_at(0, 0.2), station_at(1, 0.75)};
  RadioParams rp;
  rp.theta_bar = 1e-3;
  const CongestionSpec spec = round_robin_spec(rp, 2, 2500.0);

  auto [part, report] = solve_multiplicative(d, f, st, spec);
  auto [opart, ocost] = brute_force_oracle(d, f, st, spec, OracleMode::threshold_scan);
  REQUIRE(report.converged);
  CHECK(std::fabs(report.total_cost - ocost) / std::max(1.0, std::fabs(ocost)) <= 1e-6);
}

TEST_CASE("three-station scan agreement at moderate resolution") {
  const Domain d = make_interval_domain(-1.0, 1.0, 2000);
  const DensityField f =
      build_density_from_samples(d, [](const Point& p) { return 1.2 + p.x * 0.5; });
  const std::vector<Station> st = {station_at(0, -0.7), station_at(1, 0.0),
                                   station_at(2, 0.6)};
  const CongestionSpec spec = make_additive_spec(
      distance_cost(2.0),
      {[](double n) { return 2.0 * n; }, [](double n) { return 0.5 * n; },
       [](double n) { return n; }},
      {constant_fn(2.0), constant_fn(0.5), constant_fn(1.0)});

  auto [part, report] = solve_additive(d, f, st, spec);
  const detail::SearchResult scan = detail::scan_contiguous(d, f, st, spec);
  REQUIRE(report.converged);
  CHECK(std::fabs(report.total_cost - scan.cost) / std::max(1.0, std::fabs(scan.cost)) <=
        1e-6);
}

TEST_CASE("slack carrier budgets reduce the penalized policy to rate-fair") {
  const Domain d = make_interval_domain(0.0, 1.0, 2000);
  const DensityField f = build_uniform_density(d);
  std::vector<Station> st = {station_at(0, 0.35), station_at(1, 0.75)};
  for (auto& s : st) {
    s.max_carriers = 5000.0;
    s.kappa_bar = 10.0;
  }
  RadioParams rp;
  rp.theta_bar = 1e-3;

  auto [part, report] = penalized_rate_fair_solver(d, f, st, rp, 2500.0);
  REQUIRE(report.converged);
  CHECK(part.assignment == rate_fair_solver(d, f, st, rp).assignment);
}

TEST_CASE("a binding carrier budget pins the cell near its quota") {
  const Domain d = make_interval_domain(0.0, 1.0, 2000);
  const DensityField f = build_uniform_density(d);
  std::vector<Station> st = {station_at(0, 0.5), station_at(1, 0.9)};
  st[0].max_carriers = 750.0;   // 0.3 of the population
  st[0].kappa_bar = 50.0;
  st[1].max_carriers = 5000.0;
  st[1].kappa_bar = 50.0;
  RadioParams rp;
  rp.theta_bar = 1e-3;

  auto [part, report] = penalized_rate_fair_solver(d, f, st, rp, 2500.0);
  REQUIRE(report.converged);
  // Without the budget station 0 would take well over half the line; the
  // penalty should hold it just above its 0.3 quota.
  CHECK(part.masses[0] == Catch::Approx(0.3).margin(1e-3));
  CHECK(part.user_counts[0] == Catch::Approx(750.0).margin(3.0));

  const CongestionSpec spec = penalized_spec(rp, st, 2500.0);
  const double gap = first_order_gap(d, f, st, spec, part);
  CHECK(gap <= testutil::one_cell_score_slack(d, f, st, spec, part));
}

TEST_CASE("alpha two recovers the round-robin partition") {
  const Domain d = make_interval_domain(0.0, 1.0, 2000);
  const DensityField f =
      build_density_from_samples(d, [](const Point& p) { return 0.2 + 1.6 * p.x; });
  const std::vector<Station> st = {station_at(0, 0.1), station_at(1, 0.9)};
  RadioParams rp;
  rp.theta_bar = 1e-3;

  auto [apart, areport] = alpha_fair_solver(d, f, st, rp, 2500.0, 2.0);
  auto [rpart, rreport] = round_robin_solver(d, f, st, rp, 2500.0);
  REQUIRE(areport.converged);
  REQUIRE(rreport.converged);
  CHECK(apart.assignment == rpart.assignment);

  CHECK_THROWS_WITH(alpha_fair_solver(d, f, st, rp, 2500.0, 1.0),
                    Catch::Matchers::ContainsSubstring("alpha = 1"));
}

TEST_CASE("the fairness exponent moves the boundary") {
  const Domain d = make_interval_domain(0.0, 1.0, 4000);
  const DensityField f =
      build_density_from_samples(d, [](const Point& p) { return 0.2 + 1.6 * p.x; });
  const std::vector<Station> st = {station_at(0, 0.1), station_at(1, 0.9)};
  RadioParams rp;
  rp.theta_bar = 1e-3;
  rp.sigma2 = 0.09;

  auto boundary_cell = [&](const Partition& part) {
    for (int c = 0; c + 1 < d.cell_count(); ++c)
      if (part.assignment[c] != part.assignment[c + 1]) return c;
    return -1;
  };

  double costs[2];
  int cells[2];
  const double alphas[2] = {0.5, 2.0};
  for (int t = 0; t < 2; ++t) {
    auto [part, report] = alpha_fair_solver(d, f, st, rp, 2500.0, alphas[t]);
    REQUIRE(report.converged);
    const CongestionSpec spec = alpha_fair_spec(rp, 2, 2500.0, alphas[t]);
    const detail::SearchResult scan = detail::scan_contiguous(d, f, st, spec);
    CHECK(std::fabs(report.total_cost - scan.cost) /
              std::max(1.0, std::fabs(scan.cost)) <=
          1e-6);
    costs[t] = report.total_cost;
    cells[t] = boundary_cell(part);
  }
  CHECK(cells[0] >= 0);
  CHECK(cells[1] >= 0);
  CHECK(cells[0] != cells[1]);
  CHECK(costs[0] < 0.0);  // alpha < 1 flips the objective's sign
  CHECK(costs[1] > 0.0);
}

TEST_CASE("first-order optimality holds to one-cell granularity") {
  const Domain d = make_interval_domain(0.0, 5.6, 5000);
  const DensityField f =
      build_density_from_samples(d, [](const Point& p) { return 2.0 * p.x; });
  const std::vector<Station> st = {station_at(0, 0.0), station_at(1, 5.6)};
  RadioParams rp;
  rp.theta_bar = 8.077992e-4;

  const CongestionSpec spec = round_robin_spec(rp, 2, 2500.0);
  auto [part, report] = solve_multiplicative(d, f, st, spec);
  REQUIRE(report.converged);
  const double gap = first_order_gap(d, f, st, spec, part);
  CHECK(gap <= testutil::one_cell_score_slack(d, f, st, spec, part));
}

TEST_CASE("solver configuration is validated") {
  const Domain d = make_interval_domain(0.0, 1.0, 10);
  const DensityField f = build_uniform_density(d);
  const std::vector<Station> st = {station_at(0, 0.2), station_at(1, 0.8)};
  const CongestionSpec add = zero_additive(distance_cost(2.0), 2);

  SolverConfig cfg;
  cfg.tol = 0.0;
  CHECK_THROWS_AS(solve_additive(d, f, st, add, cfg), std::invalid_argument);
  cfg = {};
  cfg.damping = 1.5;
  CHECK_THROWS_AS(solve_additive(d, f, st, add, cfg), std::invalid_argument);
  cfg = {};
  cfg.max_iter = 0;
  CHECK_THROWS_AS(solve_additive(d, f, st, add, cfg), std::invalid_argument);

  CHECK_THROWS_AS(solve_multiplicative(d, f, st, add), std::invalid_argument);
  const CongestionSpec mult = make_multiplicative_spec(
      distance_cost(2.0), std::vector<MassFn>(2, constant_fn(1.0)),
      std::vector<MassFn>(2, constant_fn(0.0)));
  CHECK_THROWS_AS(solve_additive(d, f, st, mult), std::invalid_argument);
  CHECK_THROWS_AS(solve_additive(d, f, {}, add), std::invalid_argument);
  CHECK_THROWS_AS(solve_additive(d, f, {station_at(0, 0.5)}, add), std::invalid_argument);

  const std::vector<Station> dup = {station_at(0, 0.4), station_at(1, 0.4)};
  CHECK_THROWS_AS(voronoi_partition(d, f, dup), std::invalid_argument);
}

TEST_CASE("oracle size caps are enforced") {
  const Domain d2 = make_rect_domain(0, 1, 0, 1, 4, 4);
  const DensityField f2 = build_uniform_density(d2);
  const std::vector<Station> st = {station_at(0, 0.2, 0.2), station_at(1, 0.8, 0.8)};
  const CongestionSpec add = zero_additive(distance_cost(2.0), 2);
  CHECK_THROWS_AS(brute_force_oracle(d2, f2, st, add, OracleMode::threshold_scan),
                  std::invalid_argument);

  const Domain big = make_interval_domain(0.0, 1.0, 17);
  const DensityField fb = build_uniform_density(big);
  const std::vector<Station> st1 = {station_at(0, 0.2), station_at(1, 0.8)};
  CHECK_THROWS_AS(brute_force_oracle(big, fb, st1, add, OracleMode::exhaustive),
                  std::invalid_argument);
}

TEST_CASE("partition csv lists one row per cell") {
  const Domain d = make_interval_domain(0.0, 1.0, 8);
  const DensityField f = build_uniform_density(d);
  const std::vector<Station> st = {station_at(0, 0.25), station_at(1, 0.75)};
  const Partition part = voronoi_partition(d, f, st);

  std::stringstream buf;
  write_partition_csv(part, d, buf);
  std::string line;
  REQUIRE(std::getline(buf, line));
  CHECK(line == "cell_index,x,station_index");
  int rows = 0, flips = 0;
  int last = -1;
  while (std::getline(buf, line)) {
    const int station = std::stoi(line.substr(line.rfind(',') + 1));
    if (last >= 0 && station != last) ++flips;
    last = station;
    ++rows;
  }
  CHECK(rows == 8);
  CHECK(flips == 1);
}

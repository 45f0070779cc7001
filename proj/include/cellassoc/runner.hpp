#pragma once
// Turns a validated Scenario into computed artifacts: a partition CSV, a
// report JSON and a short console summary. Reports are byte-identical across
// reruns of the same scenario, so wall-clock timings stay out of them and are
// only surfaced in the printed summary.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cellassoc/congestion.hpp"
#include "cellassoc/grid.hpp"
#include "cellassoc/oracle.hpp"
#include "cellassoc/partition.hpp"
#include "cellassoc/scenario.hpp"
#include "cellassoc/solver.hpp"
#include "cellassoc/wardrop.hpp"

namespace cellassoc {

inline DensityField build_density(const Scenario& sc) {
  switch (sc.density.kind) {
    case DensityDef::Kind::uniform:
      return build_uniform_density(sc.domain);
    case DensityDef::Kind::linear: {
      const double a = sc.domain.ax, b = sc.domain.bx;
      const double wa = sc.density.at_a, wb = sc.density.at_b;
      return build_density_from_samples(
          sc.domain, [a, b, wa, wb](const Point& p) { return wa + (wb - wa) * (p.x - a) / (b - a); });
    }
    case DensityDef::Kind::piecewise: {
      std::vector<PiecewisePiece> pieces;
      for (const auto& p : sc.density.pieces) {
        Region region = sc.domain.dim == 1 ? make_interval_region(p.x0, p.x1)
                                           : make_rect_region(p.x0, p.x1, p.y0, p.y1);
        pieces.push_back({region, p.level});
      }
      return build_piecewise_density(sc.domain, pieces);
    }
    case DensityDef::Kind::radial:
      return build_radial_density(sc.domain, sc.density.r_d);
    case DensityDef::Kind::csv:
      return read_density_csv(sc.domain, sc.density.file);
  }
  throw std::logic_error("build_density: unhandled density kind");
}

inline std::vector<Station> build_stations(const Scenario& sc) {
  std::vector<Station> out;
  for (std::size_t i = 0; i < sc.stations.size(); ++i) {
    Station st;
    st.index = static_cast<int>(i);
    st.position = sc.stations[i].position;
    st.tx_power = sc.stations[i].tx_power;
    st.max_carriers = sc.stations[i].max_carriers;
    st.kappa_bar = sc.stations[i].kappa_bar;
    out.push_back(st);
  }
  return out;
}

inline SolverConfig solver_config(const Scenario& sc) {
  SolverConfig cfg;
  cfg.tol = sc.solver.tol;
  cfg.damping = sc.solver.damping;
  cfg.max_iter = sc.solver.max_iter;
  return cfg;
}

inline BaseCostFn scenario_base_cost(const Scenario& sc) {
  if (sc.cost.kind == CostDef::Kind::distance) return distance_cost(sc.cost.exponent);
  return rate_fair_base_cost(sc.radio);
}

// Additive congestion game assembled from the per-station penalty
// declarations; the step fires strictly above its threshold with a 1e-9
// guard so prefix-sum rounding exactly at the threshold cannot trip it.
inline CongestionSpec penalty_game_spec(const Scenario& sc) {
  std::vector<MassFn> s, s_prime;
  for (const auto& st : sc.stations) {
    switch (st.penalty.kind) {
      case PenaltyDef::Kind::none:
        s.push_back(constant_fn(0.0));
        s_prime.push_back(constant_fn(0.0));
        break;
      case PenaltyDef::Kind::constant:
        s.push_back(constant_fn(st.penalty.value));
        s_prime.push_back(constant_fn(0.0));
        break;
      case PenaltyDef::Kind::step: {
        const double t = st.penalty.threshold, v = st.penalty.value;
        s.push_back([t, v](double mass) { return mass > t + 1e-9 ? v : 0.0; });
        s_prime.push_back(constant_fn(0.0));
        break;
      }
      case PenaltyDef::Kind::linear: {
        const double c = st.penalty.value;
        s.push_back([c](double mass) { return c * mass; });
        s_prime.push_back(constant_fn(c));
        break;
      }
    }
  }
  return make_additive_spec(scenario_base_cost(sc), std::move(s), std::move(s_prime));
}

inline CongestionSpec zero_congestion_spec(const Scenario& sc) {
  const int k = static_cast<int>(sc.stations.size());
  return make_additive_spec(scenario_base_cost(sc), std::vector<MassFn>(k, constant_fn(0.0)),
                            std::vector<MassFn>(k, constant_fn(0.0)));
}

struct RunRecord {
  std::string scenario_name;
  PolicyKind policy = PolicyKind::rate_fair;
  nlohmann::json report;
  std::string partition_path;
  std::string report_path;
  std::string summary;
  bool converged = true;
  double duration_seconds = 0.0;
};

namespace detail {

inline std::string join_path(const std::string& dir, const std::string& file) {
  if (dir.empty() || file.empty() || file.front() == '/') return file;
  if (dir.back() == '/') return dir + file;
  return dir + "/" + file;
}

inline std::string hash_hex(std::uint64_t h) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string format_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

// Positions where the 1D assignment switches stations, at cell edges.
inline std::vector<double> boundaries_1d(const Domain& domain, const std::vector<int>& a) {
  std::vector<double> t;
  for (int c = 0; c + 1 < domain.cell_count(); ++c)
    if (a[c] != a[c + 1]) t.push_back(domain.ax + (c + 1) * domain.dx());
  return t;
}

inline void fill_solver_report(nlohmann::json& j, const SolverReport& rep) {
  j["iterations"] = rep.iterations;
  j["residual"] = rep.residual;
  j["converged"] = rep.converged;
  j["total_cost"] = rep.total_cost;
  j["masses"] = rep.masses;
  j["intracell_costs"] = rep.intracell_costs;
  j["max_mass_sum_error"] = rep.max_mass_sum_error;
}

}  // namespace detail

inline RunRecord run_scenario(const Scenario& sc, const std::string& out_dir = ".") {
  const auto t0 = std::chrono::steady_clock::now();
  const DensityField density = build_density(sc);
  const std::vector<Station> stations = build_stations(sc);
  const SolverConfig cfg = solver_config(sc);

  RunRecord rec;
  rec.scenario_name = sc.name;
  rec.policy = sc.policy;

  nlohmann::json j;
  Partition part;
  std::optional<Partition> optimum_part;
  std::string extra_summary;

  switch (sc.policy) {
    case PolicyKind::round_robin: {
      auto [p, rep] =
          round_robin_solver(sc.domain, density, stations, sc.radio, sc.total_users, cfg);
      part = std::move(p);
      detail::fill_solver_report(j, rep);
      j["total_power"] = rep.total_power;
      rec.converged = rep.converged;
      extra_summary = "  total_power " + detail::format_g(rep.total_power) + "\n";
      break;
    }
    case PolicyKind::rate_fair: {
      part = rate_fair_solver(sc.domain, density, stations, sc.radio);
      const CongestionSpec spec = zero_congestion_spec(sc);
      j["iterations"] = 0;
      j["residual"] = 0.0;
      j["converged"] = true;
      j["total_cost"] = total_cost(part, sc.domain, density, stations, spec);
      j["masses"] = part.masses;
      j["intracell_costs"] = intracell_costs(part, sc.domain, density, stations, spec);
      rec.converged = true;
      break;
    }
    case PolicyKind::penalized: {
      auto [p, rep] =
          penalized_rate_fair_solver(sc.domain, density, stations, sc.radio, sc.total_users, cfg);
      part = std::move(p);
      detail::fill_solver_report(j, rep);
      rec.converged = rep.converged;
      break;
    }
    case PolicyKind::alpha_fair: {
      auto [p, rep] = alpha_fair_solver(sc.domain, density, stations, sc.radio, sc.total_users,
                                        sc.alpha, cfg);
      part = std::move(p);
      detail::fill_solver_report(j, rep);
      rec.converged = rep.converged;
      break;
    }
    case PolicyKind::wardrop: {
      const EquilibriumModel model = make_rate_share_model(sc.radio, sc.total_users);
      const auto solutions = solve_equilibrium(sc.domain, density, stations, model,
                                               sc.solver.scan_resolution, cfg);
      if (solutions.empty()) throw std::runtime_error("run_scenario: no equilibrium found");
      const EquilibriumSolution chosen = select_equilibrium(solutions, sc.solver.select);
      part = chosen.partition;
      const CongestionSpec spec = zero_congestion_spec(sc);
      j["iterations"] = 0;
      j["residual"] = chosen.residual;
      j["converged"] = chosen.converged;
      j["total_cost"] = total_cost(part, sc.domain, density, stations, spec);
      j["masses"] = part.masses;
      j["intracell_costs"] = intracell_costs(part, sc.domain, density, stations, spec);
      j["common_rate"] = chosen.common_rate;
      j["classification"] = to_string(chosen.classification);
      j["thresholds"] = chosen.thresholds;
      rec.converged = chosen.converged;
      extra_summary = "  common_rate " + detail::format_g(chosen.common_rate) +
                      "  equilibria " + std::to_string(solutions.size()) + "\n";
      break;
    }
    case PolicyKind::poa: {
      const CongestionSpec spec = penalty_game_spec(sc);
      const EquilibriumModel model = make_cost_offer_model(spec, sc.total_users);
      const auto solutions = solve_equilibrium(sc.domain, density, stations, model,
                                               sc.solver.scan_resolution, cfg);
      if (solutions.empty()) throw std::runtime_error("run_scenario: no equilibrium found");
      const EquilibriumSolution worst = select_equilibrium(solutions, SelectCriterion::worst);
      part = worst.partition;
      const double eq_cost = total_cost(part, sc.domain, density, stations, spec);

      double opt_cost;
      if (sc.domain.dim == 1 && stations.size() <= 3) {
        cellassoc::detail::SearchResult scan =
            cellassoc::detail::scan_contiguous(sc.domain, density, stations, spec);
        opt_cost = scan.cost;
        if (!scan.boundaries.empty()) j["optimum_boundary"] = scan.boundaries[0];
        optimum_part =
            make_partition(sc.domain, density, stations.size(), std::move(scan.assignment));
      } else {
        auto solved = solve_additive(sc.domain, density, stations, spec, cfg);
        opt_cost = solved.second.total_cost;
        optimum_part = std::move(solved.first);
        if (sc.domain.dim == 1) {
          const auto b = detail::boundaries_1d(sc.domain, optimum_part->assignment);
          if (!b.empty()) j["optimum_boundary"] = b[0];
        }
      }
      if (opt_cost == 0.0)
        throw std::runtime_error("run_scenario: optimum cost is zero, ratio undefined");

      j["iterations"] = 0;
      j["residual"] = worst.residual;
      j["converged"] = worst.converged;
      j["total_cost"] = eq_cost;
      j["masses"] = part.masses;
      j["intracell_costs"] = intracell_costs(part, sc.domain, density, stations, spec);
      j["equilibrium_cost"] = eq_cost;
      j["optimum_cost"] = opt_cost;
      j["ratio"] = eq_cost / opt_cost;
      rec.converged = worst.converged;
      extra_summary = "  equilibrium_cost " + detail::format_g(eq_cost) + "  optimum_cost " +
                      detail::format_g(opt_cost) + "  ratio " +
                      detail::format_g(eq_cost / opt_cost) + "\n";
      break;
    }
  }
  j["scenario_hash"] = detail::hash_hex(sc.hash);

  rec.partition_path = detail::join_path(
      out_dir, sc.output.partition.empty() ? sc.name + ".partition.csv" : sc.output.partition);
  rec.report_path = detail::join_path(
      out_dir, sc.output.report.empty() ? sc.name + ".report.json" : sc.output.report);
  write_partition_csv(part, sc.domain, rec.partition_path);
  if (optimum_part) {
    std::string opt_path = rec.partition_path;
    const std::string suffix = ".csv";
    if (opt_path.size() > suffix.size() &&
        opt_path.compare(opt_path.size() - suffix.size(), suffix.size(), suffix) == 0)
      opt_path.replace(opt_path.size() - suffix.size(), suffix.size(), ".optimum.csv");
    else
      opt_path += ".optimum.csv";
    write_partition_csv(*optimum_part, sc.domain, opt_path);
    extra_summary += "  optimum partition in " + opt_path + "\n";
  }
  rec.report = j;
  detail::write_text_file(rec.report_path, j.dump(2) + "\n");

  rec.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::string s;
  s += "scenario " + sc.name + "  policy " + to_string(sc.policy) + "  hash " +
       detail::hash_hex(sc.hash) + "\n";
  s += std::string("  converged ") + (rec.converged ? "yes" : "no") + "  residual " +
       detail::format_g(j["residual"].get<double>()) + "\n";
  s += "  total_cost " + detail::format_g(j["total_cost"].get<double>()) + "\n";
  s += extra_summary;
  s += "  wrote " + rec.partition_path + " and " + rec.report_path + "\n";
  rec.summary = s;
  return rec;
}

struct SweepResult {
  std::string csv_path;
  int rows = 0;
  bool all_converged = true;
  std::string summary;
};

// Moves one station along the x axis and re-solves at each stop; one CSV row
// per parameter value. station_index is zero-based.
inline SweepResult sweep_station_position(const Scenario& sc, int station_index, double from,
                                          double to, int steps,
                                          const std::string& out_dir = ".") {
  if (sc.domain.dim != 1)
    throw std::invalid_argument("sweep_station_position: 1D scenarios only");
  if (sc.policy == PolicyKind::poa)
    throw std::invalid_argument(
        "sweep_station_position: the poa policy is not sweepable; use wardrop or an optimal "
        "policy");
  if (station_index < 0 || station_index >= static_cast<int>(sc.stations.size()))
    throw std::invalid_argument("sweep_station_position: station index out of range");
  if (steps < 1) throw std::invalid_argument("sweep_station_position: steps must be >= 1");

  const DensityField density = build_density(sc);
  std::vector<Station> stations = build_stations(sc);
  const SolverConfig cfg = solver_config(sc);
  const int k = static_cast<int>(stations.size());
  const bool is_wardrop = sc.policy == PolicyKind::wardrop;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  std::string csv = "param_value";
  for (int i = 1; i < k; ++i) csv += ",threshold_" + std::to_string(i);
  csv += is_wardrop ? ",common_rate,classification" : ",total_cost,converged";
  csv += "\n";

  SweepResult result;
  for (int step = 0; step < steps; ++step) {
    const double pos = steps == 1 ? from : from + (to - from) * step / (steps - 1);
    stations[station_index].position.x = pos;

    std::vector<double> thresholds(k - 1, nan);
    double value = nan;
    bool row_ok = false;
    std::string classification = "unclassified";

    try {
      if (is_wardrop) {
        const EquilibriumModel model = make_rate_share_model(sc.radio, sc.total_users);
        const auto solutions = solve_equilibrium(sc.domain, density, stations, model,
                                                 sc.solver.scan_resolution, cfg);
        const EquilibriumSolution chosen = select_equilibrium(solutions, sc.solver.select);
        for (int i = 0; i < k - 1 && i < static_cast<int>(chosen.thresholds.size()); ++i)
          thresholds[i] = chosen.thresholds[i];
        value = chosen.common_rate;
        row_ok = chosen.converged;
        if (row_ok) classification = to_string(chosen.classification);
      } else {
        Partition part;
        switch (sc.policy) {
          case PolicyKind::round_robin: {
            auto [p, rep] =
                round_robin_solver(sc.domain, density, stations, sc.radio, sc.total_users, cfg);
            part = std::move(p);
            value = rep.total_cost;
            row_ok = rep.converged;
            break;
          }
          case PolicyKind::penalized: {
            auto [p, rep] = penalized_rate_fair_solver(sc.domain, density, stations, sc.radio,
                                                       sc.total_users, cfg);
            part = std::move(p);
            value = rep.total_cost;
            row_ok = rep.converged;
            break;
          }
          case PolicyKind::alpha_fair: {
            auto [p, rep] = alpha_fair_solver(sc.domain, density, stations, sc.radio,
                                              sc.total_users, sc.alpha, cfg);
            part = std::move(p);
            value = rep.total_cost;
            row_ok = rep.converged;
            break;
          }
          default: {
            part = rate_fair_solver(sc.domain, density, stations, sc.radio);
            value = total_cost(part, sc.domain, density, stations, zero_congestion_spec(sc));
            row_ok = true;
            break;
          }
        }
        const auto b = detail::boundaries_1d(sc.domain, part.assignment);
        for (int i = 0; i < k - 1 && i < static_cast<int>(b.size()); ++i) thresholds[i] = b[i];
      }
    } catch (const std::exception&) {
      row_ok = false;
    }

    csv += detail::format_g(pos);
    for (int i = 0; i < k - 1; ++i) csv += "," + detail::format_g(thresholds[i]);
    if (is_wardrop)
      csv += "," + detail::format_g(value) + "," + classification;
    else
      csv += "," + detail::format_g(value) + "," + (row_ok ? "1" : "0");
    csv += "\n";
    result.all_converged = result.all_converged && row_ok;
    ++result.rows;
  }

  result.csv_path = detail::join_path(out_dir, sc.name + ".sweep.csv");
  detail::write_text_file(result.csv_path, csv);
  result.summary = "sweep " + sc.name + "  station " + std::to_string(station_index + 1) +
                   "  rows " + std::to_string(result.rows) +
                   (result.all_converged ? "  all rows converged" : "  NON-CONVERGED rows present") +
                   "\n  wrote " + result.csv_path + "\n";
  return result;
}

struct CompareResult {
  nlohmann::json report;
  std::string json_path;
  std::string summary;
};

namespace detail {

inline PolicyKind parse_policy_name(const std::string& name) {
  if (name == "round-robin") return PolicyKind::round_robin;
  if (name == "rate-fair" || name == "voronoi") return PolicyKind::rate_fair;
  if (name == "penalized") return PolicyKind::penalized;
  if (name == "alpha-fair") return PolicyKind::alpha_fair;
  if (name == "wardrop") return PolicyKind::wardrop;
  throw std::invalid_argument(
      "unknown policy '" + name +
      "' (expected round-robin, rate-fair, voronoi, penalized, alpha-fair or wardrop)");
}

}  // namespace detail

// Runs several association policies on one scenario and prices every
// resulting partition under the scenario's own objective, so the ratios
// compare like with like.
inline CompareResult compare_policies(const Scenario& sc,
                                      const std::vector<std::string>& policy_names,
                                      const std::string& out_dir = ".") {
  if (policy_names.size() < 2)
    throw std::invalid_argument("compare_policies: need at least two policies");
  std::vector<PolicyKind> kinds;
  std::vector<std::string> names;
  for (const auto& raw : policy_names) {
    const PolicyKind kind = detail::parse_policy_name(raw);
    const std::string canonical = to_string(kind);
    for (const auto& seen : names)
      if (seen == canonical)
        throw std::invalid_argument("compare_policies: duplicate policy '" + canonical + "'");
    kinds.push_back(kind);
    names.push_back(canonical);
  }

  const DensityField density = build_density(sc);
  const std::vector<Station> stations = build_stations(sc);
  const SolverConfig cfg = solver_config(sc);
  const int k = static_cast<int>(stations.size());

  CongestionSpec reference;
  switch (sc.policy) {
    case PolicyKind::round_robin:
      reference = round_robin_spec(sc.radio, k, sc.total_users);
      break;
    case PolicyKind::penalized:
      reference = penalized_spec(sc.radio, stations, sc.total_users, cfg.tol);
      break;
    case PolicyKind::alpha_fair:
      reference = alpha_fair_spec(sc.radio, k, sc.total_users, sc.alpha);
      break;
    case PolicyKind::poa:
      reference = penalty_game_spec(sc);
      break;
    default:  // rate-fair and wardrop price partitions by raw service cost
      reference = zero_congestion_spec(sc);
      break;
  }

  nlohmann::json j;
  j["scenario"] = sc.name;
  j["scenario_hash"] = detail::hash_hex(sc.hash);
  j["reference_policy"] = to_string(sc.policy);

  std::vector<double> costs;
  std::string summary = "compare on " + sc.name + " (reference objective: " +
                        to_string(sc.policy) + ")\n";
  for (std::size_t idx = 0; idx < kinds.size(); ++idx) {
    Partition part;
    bool converged = true;
    switch (kinds[idx]) {
      case PolicyKind::round_robin: {
        auto [p, rep] =
            round_robin_solver(sc.domain, density, stations, sc.radio, sc.total_users, cfg);
        part = std::move(p);
        converged = rep.converged;
        break;
      }
      case PolicyKind::rate_fair:
        part = rate_fair_solver(sc.domain, density, stations, sc.radio);
        break;
      case PolicyKind::penalized: {
        auto [p, rep] = penalized_rate_fair_solver(sc.domain, density, stations, sc.radio,
                                                   sc.total_users, cfg);
        part = std::move(p);
        converged = rep.converged;
        break;
      }
      case PolicyKind::alpha_fair: {
        auto [p, rep] = alpha_fair_solver(sc.domain, density, stations, sc.radio, sc.total_users,
                                          sc.alpha, cfg);
        part = std::move(p);
        converged = rep.converged;
        break;
      }
      case PolicyKind::wardrop: {
        const EquilibriumModel model = make_rate_share_model(sc.radio, sc.total_users);
        const auto solutions = solve_equilibrium(sc.domain, density, stations, model,
                                                 sc.solver.scan_resolution, cfg);
        const EquilibriumSolution chosen = select_equilibrium(solutions, sc.solver.select);
        part = chosen.partition;
        converged = chosen.converged;
        break;
      }
      case PolicyKind::poa:
        throw std::invalid_argument("compare_policies: poa is not an association policy");
    }
    const double cost = total_cost(part, sc.domain, density, stations, reference);
    costs.push_back(cost);
    j["policies"][names[idx]] = {
        {"cost", cost}, {"masses", part.masses}, {"converged", converged}};
    summary += "  " + names[idx] + ": cost " + detail::format_g(cost) +
               (converged ? "" : "  (non-converged)") + "\n";
  }
  for (std::size_t a = 0; a < kinds.size(); ++a)
    for (std::size_t b = a + 1; b < kinds.size(); ++b) {
      const std::string key = names[a] + "/" + names[b];
      j["ratios"][key] = costs[a] / costs[b];
      summary += "  " + key + " = " + detail::format_g(costs[a] / costs[b]) + "\n";
    }

  CompareResult result;
  result.report = j;
  result.json_path = detail::join_path(out_dir, sc.name + ".compare.json");
  detail::write_text_file(result.json_path, j.dump(2) + "\n");
  result.summary = summary + "  wrote " + result.json_path + "\n";
  return result;
}

struct OracleCheck {
  double solver_cost = 0.0;
  double oracle_cost = 0.0;
  double rel_gap = 0.0;
  bool match = false;
  std::string summary;
};

// Cross-checks the iterative solver against the brute-force oracle on the
// scenario's own objective. Only meaningful for the optimizing policies and
// for instances small enough for the oracle's caps.
inline OracleCheck oracle_check(const Scenario& sc) {
  const DensityField density = build_density(sc);
  const std::vector<Station> stations = build_stations(sc);
  const SolverConfig cfg = solver_config(sc);
  const int k = static_cast<int>(stations.size());

  CongestionSpec spec;
  switch (sc.policy) {
    case PolicyKind::round_robin:
      spec = round_robin_spec(sc.radio, k, sc.total_users);
      break;
    case PolicyKind::rate_fair:
      spec = zero_congestion_spec(sc);
      break;
    case PolicyKind::penalized:
      spec = penalized_spec(sc.radio, stations, sc.total_users, cfg.tol);
      break;
    case PolicyKind::alpha_fair:
      spec = alpha_fair_spec(sc.radio, k, sc.total_users, sc.alpha);
      break;
    default:
      throw std::invalid_argument(
          "oracle_check: only the optimizing policies (round-robin, rate-fair, penalized, "
          "alpha-fair) can be cross-checked");
  }

  const auto solved = spec.kind == CongestionSpec::Kind::additive
                          ? solve_additive(sc.domain, density, stations, spec, cfg)
                          : solve_multiplicative(sc.domain, density, stations, spec, cfg);
  const OracleMode mode =
      sc.domain.dim == 1 ? OracleMode::threshold_scan : OracleMode::exhaustive;
  const auto oracle = brute_force_oracle(sc.domain, density, stations, spec, mode);

  OracleCheck check;
  check.solver_cost = solved.second.total_cost;
  check.oracle_cost = oracle.second;
  check.rel_gap =
      (check.solver_cost - check.oracle_cost) / std::max(1.0, std::fabs(check.oracle_cost));
  check.match = std::fabs(check.rel_gap) <= 1e-6;
  check.summary = "oracle check on " + sc.name + "\n  solver cost " +
                  detail::format_g(check.solver_cost) + "\n  oracle cost " +
                  detail::format_g(check.oracle_cost) + "\n  relative gap " +
                  detail::format_g(check.rel_gap) + "  " +
                  (check.match ? "MATCH" : "MISMATCH") + "\n";
  return check;
}

}  // namespace cellassoc

#pragma once
// Fixed-point solvers for the optimal congestion-augmented partitions.
//
// Both solvers run the same two-phase scheme.
//
// Phase 1, damped fixed point on the mass vector: starting from the Voronoi
// partition, every cell is reassigned by the first-variation rule
//   additive:        argmin_i  F(d_i(x)) + s_i(N_i) + N_i s_i'(N_i)
//   multiplicative:  argmin_i  m_i(N_i) F(d_i(x)) + m_i'(N_i) J_i
// (J_i is the integral of F(d_i) against the density over cell i; for the
// multiplicative rule the density value at x multiplies both terms of the
// variation and cancels, so the rule is density-free). The mass vector, and
// for the multiplicative case the J vector, are then relaxed toward the
// reassigned values with factor gamma. Convergence is declared on the
// undamped gap max_i |masses(assign(N)) - N_i| <= tol, which is independent
// of gamma and stricter than testing the damped step. Steep congestion makes
// the plain gamma = 0.5 iteration flip-flop globally, so gamma is halved
// (down to a floor of the configured value / 64) whenever the best gap stops
// improving over a 30-iteration window.
//
// Phase 2, exact refinement: single-cell moves are applied in index order
// whenever they strictly lower the exact discrete objective, using running
// per-station mass and integral state. A pass with no moves terminates the
// sweep; the result is then a local optimum of the discrete objective under
// single-cell moves, which clears the one-boundary-cell chatter the damped
// iteration cannot settle. Refinement runs even after phase-1 convergence so
// small instances land on the exact discrete optimum.
//
// Report semantics: `iterations` counts phase-1 iterations plus refinement
// passes; `residual` is the mass change of the final update step (the
// undamped gap when phase 1 converged, the mass displaced by the last sweep
// otherwise); `converged` means phase-1 gap <= tol or a clean refinement
// pass within the iteration budget. Reported masses are always the exact
// cell sums of the returned assignment.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cellassoc/congestion.hpp"
#include "cellassoc/partition.hpp"

namespace cellassoc {

struct SolverConfig {
  double tol = 1e-8;
  double damping = 0.5;
  int max_iter = 10000;
  enum class TieBreak { lowest_index } tie_break = TieBreak::lowest_index;
};

struct SolverReport {
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
  double total_cost = 0.0;
  std::vector<double> masses;
  std::vector<double> intracell_costs;
  double total_power = 0.0;         // filled by round_robin_solver
  double max_mass_sum_error = 0.0;  // worst |sum N_i - 1| seen over all iterations
};

namespace detail {

struct SolveInstance {
  const Domain* domain = nullptr;
  const DensityField* density = nullptr;
  int n = 0, k = 0;
  CongestionSpec::Kind kind = CongestionSpec::Kind::additive;
  const std::vector<MassFn>* g = nullptr;        // s or m
  const std::vector<MassFn>* g_prime = nullptr;  // s' or m'
  std::vector<double> w;                // cell masses
  std::vector<std::vector<double>> f;   // f[i][c] = F(d_i(center c))
};

inline SolveInstance build_instance(const Domain& domain, const DensityField& density,
                                    const std::vector<Station>& stations,
                                    const CongestionSpec& spec) {
  if (stations.empty()) throw std::invalid_argument("solver: no stations");
  const bool add = spec.kind == CongestionSpec::Kind::additive;
  const auto& g = add ? spec.s : spec.m;
  const auto& gp = add ? spec.s_prime : spec.m_prime;
  if (g.size() != stations.size())
    throw std::invalid_argument("solver: spec covers " + std::to_string(g.size()) +
                                " stations, instance has " + std::to_string(stations.size()));
  if (!spec.base_cost) throw std::invalid_argument("solver: spec has no base cost");
  SolveInstance inst;
  inst.domain = &domain;
  inst.density = &density;
  inst.n = domain.cell_count();
  inst.k = static_cast<int>(stations.size());
  inst.kind = spec.kind;
  inst.g = &g;
  inst.g_prime = &gp;
  inst.w.resize(inst.n);
  const double meas = domain.cell_measure();
  for (int c = 0; c < inst.n; ++c) inst.w[c] = density.weight[c] * meas;
  inst.f.assign(inst.k, std::vector<double>(inst.n));
  for (int i = 0; i < inst.k; ++i)
    for (int c = 0; c < inst.n; ++c)
      inst.f[i][c] = spec.base_cost(stations[i], domain.cell_center(c));
  return inst;
}

inline void sums_of(const SolveInstance& inst, const std::vector<int>& a,
                    std::vector<double>& masses, std::vector<double>& integrals) {
  masses.assign(inst.k, 0.0);
  integrals.assign(inst.k, 0.0);
  for (int c = 0; c < inst.n; ++c) {
    const int i = a[c];
    masses[i] += inst.w[c];
    integrals[i] += inst.f[i][c] * inst.w[c];
  }
}

inline double station_cost_of(const SolveInstance& inst, int i, double mass_i, double j_i) {
  if (mass_i <= 0.0) return 0.0;
  if (inst.kind == CongestionSpec::Kind::additive) return j_i + mass_i * (*inst.g)[i](mass_i);
  return (*inst.g)[i](mass_i) * j_i;
}

inline double cost_of(const SolveInstance& inst, const std::vector<double>& masses,
                      const std::vector<double>& integrals) {
  double total = 0.0;
  for (int i = 0; i < inst.k; ++i) {
    const double c = station_cost_of(inst, i, masses[i], integrals[i]);
    if (!std::isfinite(c)) return std::numeric_limits<double>::infinity();
    total += c;
  }
  return total;
}

// Per-station pieces of the first-variation score at the state (N, J):
// additive score = f[i][c] + offset_i, multiplicative = factor_i * f[i][c]
// + offset_i. Non-finite pieces mark the station as unenterable.
inline void score_terms(const SolveInstance& inst, const std::vector<double>& n_state,
                        const std::vector<double>& j_state, std::vector<double>& factors,
                        std::vector<double>& offsets) {
  factors.assign(inst.k, 1.0);
  offsets.assign(inst.k, 0.0);
  for (int i = 0; i < inst.k; ++i) {
    if (inst.kind == CongestionSpec::Kind::additive) {
      offsets[i] = (*inst.g)[i](n_state[i]) + n_state[i] * (*inst.g_prime)[i](n_state[i]);
    } else {
      factors[i] = (*inst.g)[i](n_state[i]);
      offsets[i] = (*inst.g_prime)[i](n_state[i]) * j_state[i];
    }
  }
}

inline void assign_cells(const SolveInstance& inst, const std::vector<double>& factors,
                         const std::vector<double>& offsets, std::vector<int>& a) {
  for (int c = 0; c < inst.n; ++c) {
    int best = -1;
    double best_score = std::numeric_limits<double>::infinity();
    for (int i = 0; i < inst.k; ++i) {
      const double score = factors[i] * inst.f[i][c] + offsets[i];
      if (std::isfinite(score) && score < best_score) {
        best = i;
        best_score = score;
      }
    }
    if (best < 0)
      throw std::runtime_error("solver: no station offers a finite score at cell " +
                               std::to_string(c));
    a[c] = best;
  }
}

inline std::pair<Partition, SolverReport> solve_fixed_point(
    const Domain& domain, const DensityField& density, const std::vector<Station>& stations,
    const CongestionSpec& spec, const SolverConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("solver: tol must be > 0");
  if (!(cfg.damping > 0.0 && cfg.damping <= 1.0))
    throw std::invalid_argument("solver: damping must be in (0, 1]");
  if (cfg.max_iter < 1) throw std::invalid_argument("solver: max_iter must be >= 1");

  const SolveInstance inst = build_instance(domain, density, stations, spec);
  SolverReport report;

  std::vector<int> a = voronoi_partition(domain, density, stations).assignment;
  std::vector<double> n_state, j_state, m_next, j_next, factors, offsets;
  sums_of(inst, a, n_state, j_state);

  std::vector<int> best_a = a;
  double best_cost = cost_of(inst, n_state, j_state);
  double best_gap = std::numeric_limits<double>::infinity();
  bool phase1_converged = false;

  double gamma = cfg.damping;
  const double gamma_floor = cfg.damping / 64.0;
  constexpr int kWindow = 30;
  constexpr double kStallFactor = 0.98;
  double window_best = std::numeric_limits<double>::infinity();
  double prev_window_best = std::numeric_limits<double>::infinity();
  int window_pos = 0, stalled_at_floor = 0;

  std::vector<int> next_a(inst.n);
  while (report.iterations < cfg.max_iter) {
    ++report.iterations;
    score_terms(inst, n_state, j_state, factors, offsets);
    assign_cells(inst, factors, offsets, next_a);
    sums_of(inst, next_a, m_next, j_next);

    double mass_sum = 0.0, gap = 0.0;
    for (int i = 0; i < inst.k; ++i) {
      mass_sum += m_next[i];
      gap = std::max(gap, std::fabs(m_next[i] - n_state[i]));
    }
    report.max_mass_sum_error = std::max(report.max_mass_sum_error, std::fabs(mass_sum - 1.0));

    const double cost = cost_of(inst, m_next, j_next);
    if (cost < best_cost) {
      best_cost = cost;
      best_a = next_a;
    }
    best_gap = std::min(best_gap, gap);

    if (gap <= cfg.tol) {
      a = next_a;
      report.residual = gap;
      phase1_converged = true;
      break;
    }

    window_best = std::min(window_best, gap);
    if (++window_pos == kWindow) {
      if (window_best >= kStallFactor * prev_window_best) {
        if (gamma <= gamma_floor) {
          if (++stalled_at_floor >= 2) break;  // hand over to refinement
        } else {
          gamma = std::max(gamma / 2.0, gamma_floor);
        }
      } else {
        stalled_at_floor = 0;
      }
      prev_window_best = window_best;
      window_best = std::numeric_limits<double>::infinity();
      window_pos = 0;
    }

    for (int i = 0; i < inst.k; ++i) {
      n_state[i] += gamma * (m_next[i] - n_state[i]);
      j_state[i] += gamma * (j_next[i] - j_state[i]);
    }
  }

  if (!phase1_converged) a = best_a;

  // Phase 2: exact single-cell refinement from the best iterate.
  std::vector<double> masses, integrals;
  sums_of(inst, a, masses, integrals);
  bool clean_pass = false;
  double last_pass_moved = 0.0;
  const int pass_budget = std::max(0, std::min(50, cfg.max_iter - report.iterations));
  for (int pass = 0; pass < pass_budget; ++pass) {
    ++report.iterations;
    sums_of(inst, a, masses, integrals);  // resync to kill incremental drift
    int moves = 0;
    last_pass_moved = 0.0;
    for (int c = 0; c < inst.n; ++c) {
      const double wc = inst.w[c];
      if (wc <= 0.0) continue;
      const int i = a[c];
      const double old_i = station_cost_of(inst, i, masses[i], integrals[i]);
      const double new_i =
          station_cost_of(inst, i, masses[i] - wc, integrals[i] - inst.f[i][c] * wc);
      int best_j = -1;
      double best_delta = 0.0;
      for (int j = 0; j < inst.k; ++j) {
        if (j == i) continue;
        const double old_j = station_cost_of(inst, j, masses[j], integrals[j]);
        const double new_j =
            station_cost_of(inst, j, masses[j] + wc, integrals[j] + inst.f[j][c] * wc);
        const double delta = (new_i + new_j) - (old_i + old_j);
        if (std::isfinite(delta) && delta < best_delta) {
          best_delta = delta;
          best_j = j;
        }
      }
      if (best_j >= 0) {
        masses[i] -= wc;
        integrals[i] -= inst.f[i][c] * wc;
        masses[best_j] += wc;
        integrals[best_j] += inst.f[best_j][c] * wc;
        a[c] = best_j;
        ++moves;
        last_pass_moved += wc;
      }
    }
    double mass_sum = 0.0;
    for (int i = 0; i < inst.k; ++i) mass_sum += masses[i];
    report.max_mass_sum_error = std::max(report.max_mass_sum_error, std::fabs(mass_sum - 1.0));
    if (moves == 0) {
      clean_pass = true;
      break;
    }
  }

  if (!phase1_converged) {
    report.converged = clean_pass;
    report.residual = clean_pass ? last_pass_moved : best_gap;
  } else {
    report.converged = true;
    if (last_pass_moved > 0.0) report.residual = last_pass_moved;
  }

  Partition part = make_partition(domain, density, inst.k, std::move(a));
  report.masses = part.masses;
  sums_of(inst, part.assignment, masses, integrals);
  report.intracell_costs.resize(inst.k);
  report.total_cost = 0.0;
  for (int i = 0; i < inst.k; ++i) {
    report.intracell_costs[i] = station_cost_of(inst, i, masses[i], integrals[i]);
    report.total_cost += report.intracell_costs[i];
  }
  return {std::move(part), std::move(report)};
}

}  // namespace detail

inline std::pair<Partition, SolverReport> solve_additive(const Domain& domain,
                                                         const DensityField& density,
                                                         const std::vector<Station>& stations,
                                                         const CongestionSpec& spec,
                                                         const SolverConfig& cfg = {}) {
  if (spec.kind != CongestionSpec::Kind::additive)
    throw std::invalid_argument("solve_additive: spec is not additive");
  return detail::solve_fixed_point(domain, density, stations, spec, cfg);
}

inline std::pair<Partition, SolverReport> solve_multiplicative(
    const Domain& domain, const DensityField& density, const std::vector<Station>& stations,
    const CongestionSpec& spec, const SolverConfig& cfg = {}) {
  if (spec.kind != CongestionSpec::Kind::multiplicative)
    throw std::invalid_argument("solve_multiplicative: spec is not multiplicative");
  return detail::solve_fixed_point(domain, density, stations, spec, cfg);
}

// Max amount by which a cell's assigned first-variation score exceeds the
// best alternative, at the partition's exact masses and integrals. Zero means
// the optimality rule holds exactly at cell granularity; refinement-converged
// runs can carry a one-cell quantization excess.
inline double first_order_gap(const Domain& domain, const DensityField& density,
                              const std::vector<Station>& stations, const CongestionSpec& spec,
                              const Partition& partition) {
  const detail::SolveInstance inst = detail::build_instance(domain, density, stations, spec);
  std::vector<double> masses, integrals, factors, offsets;
  detail::sums_of(inst, partition.assignment, masses, integrals);
  detail::score_terms(inst, masses, integrals, factors, offsets);
  double worst = 0.0;
  for (int c = 0; c < inst.n; ++c) {
    if (inst.w[c] <= 0.0) continue;
    const int i = partition.assignment[c];
    const double mine = factors[i] * inst.f[i][c] + offsets[i];
    double best = mine;
    for (int j = 0; j < inst.k; ++j) {
      const double score = factors[j] * inst.f[j][c] + offsets[j];
      if (std::isfinite(score)) best = std::min(best, score);
    }
    worst = std::max(worst, mine - best);
  }
  return worst;
}

inline Partition rate_fair_solver(const Domain& domain, const DensityField& density,
                                  const std::vector<Station>& stations,
                                  const RadioParams& params) {
  validate_radio(params);
  if (stations.empty()) throw std::invalid_argument("rate_fair_solver: no stations");
  const BaseCostFn f = rate_fair_base_cost(params);
  const int k = static_cast<int>(stations.size());
  std::vector<int> assignment(domain.cell_count());
  for (int c = 0; c < domain.cell_count(); ++c) {
    const Point p = domain.cell_center(c);
    int best = 0;
    double best_cost = f(stations[0], p);
    for (int i = 1; i < k; ++i) {
      const double cost = f(stations[i], p);
      if (cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    assignment[c] = best;
  }
  return make_partition(domain, density, k, std::move(assignment));
}

inline std::pair<Partition, SolverReport> round_robin_solver(
    const Domain& domain, const DensityField& density, const std::vector<Station>& stations,
    const RadioParams& params, double total_users, const SolverConfig& cfg = {}) {
  const CongestionSpec spec =
      round_robin_spec(params, static_cast<int>(stations.size()), total_users);
  auto [part, report] = solve_multiplicative(domain, density, stations, spec, cfg);
  for (auto& u : part.user_counts) u *= total_users;
  report.total_power = total_users * report.total_cost;
  return {std::move(part), std::move(report)};
}

inline std::pair<Partition, SolverReport> penalized_rate_fair_solver(
    const Domain& domain, const DensityField& density, const std::vector<Station>& stations,
    const RadioParams& params, double total_users, const SolverConfig& cfg = {}) {
  const CongestionSpec spec = penalized_spec(params, stations, total_users, cfg.tol);
  auto [part, report] = solve_additive(domain, density, stations, spec, cfg);
  for (auto& u : part.user_counts) u *= total_users;
  return {std::move(part), std::move(report)};
}

inline std::pair<Partition, SolverReport> alpha_fair_solver(
    const Domain& domain, const DensityField& density, const std::vector<Station>& stations,
    const RadioParams& params, double total_users, double alpha, const SolverConfig& cfg = {}) {
  const CongestionSpec spec =
      alpha_fair_spec(params, static_cast<int>(stations.size()), total_users, alpha);
  auto [part, report] = solve_multiplicative(domain, density, stations, spec, cfg);
  for (auto& u : part.user_counts) u *= total_users;
  return {std::move(part), std::move(report)};
}

}  // namespace cellassoc

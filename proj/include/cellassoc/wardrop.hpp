#pragma once
// Decentralized (user-optimal) associations: Wardrop equilibria, equilibrium
// selection, and the price of anarchy.
//
// The equilibrium concept is pointwise best response under an offered-rate
// model: every user picks the station offering the highest rate given the
// current cell masses. In 1D the cells are intervals (rates are single-peaked
// per station), so equilibria are threshold vectors; thresholds are found by
// sign-change scanning plus bisection of the pairwise indifference condition
// and are continuous quantities, while the returned partitions snap cells by
// center. The reported common_rate is the offer at the first interior
// threshold (for boundary-pinned solutions, the occupied side's offer at the
// pinned end; in 2D, the mean winning offer over interface cells). The 1D
// residual is the worst indifference imbalance across thresholds plus any
// empty-cell join violation; the 2D residual is the largest rate improvement
// any cell could still gain by deviating. With the built-in rate-share model the offer
// depends on the user's own location, so only pairwise indifference at the
// thresholds is enforceable; a single rate common to all boundaries exists
// for two stations and in symmetric layouts.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cellassoc/congestion.hpp"
#include "cellassoc/oracle.hpp"
#include "cellassoc/partition.hpp"
#include "cellassoc/solver.hpp"

namespace cellassoc {

struct EquilibriumModel {
  // Offered rate seen by a user at `point` if it joins `station` carrying
  // total mass `n_i`. The built-in model returns +inf at mass 0 (join
  // sentinel for best response); equilibrium checks use a one-user mass.
  std::function<double(const Station&, const Point&, double)> offer;
  double total_users = 2500.0;
};

inline EquilibriumModel make_rate_share_model(const RadioParams& params, double total_users) {
  validate_radio(params);
  if (!(total_users >= 1.0))
    throw std::invalid_argument("make_rate_share_model: total_users must be >= 1");
  EquilibriumModel model;
  model.total_users = total_users;
  model.offer = [params, total_users](const Station& st, const Point& p, double n_i) {
    if (n_i <= 0.0) return std::numeric_limits<double>::infinity();
    const double rate = throughput(snr(params, st.tx_power, channel_gain(params, st, p)));
    return rate / (n_i * total_users);
  };
  return model;
}

// Cost-game offers for price-of-anarchy instances: the "rate" is the negated
// user cost F(d_i) + s_i(mass), so best response minimizes individual cost.
inline EquilibriumModel make_cost_offer_model(const CongestionSpec& spec, double total_users) {
  if (spec.kind != CongestionSpec::Kind::additive)
    throw std::invalid_argument("make_cost_offer_model: additive spec required");
  EquilibriumModel model;
  model.total_users = total_users;
  model.offer = [spec](const Station& st, const Point& p, double n_i) {
    const int i = st.index;
    if (i < 0 || i >= static_cast<int>(spec.s.size()))
      throw std::invalid_argument("make_cost_offer_model: station index " + std::to_string(i) +
                                  " outside the spec");
    return -(spec.base_cost(st, p) + spec.s[i](std::max(n_i, 0.0)));
  };
  return model;
}

inline double offered_rate(const EquilibriumModel& model, const Station& station,
                           const Point& point, double n_i) {
  if (!(n_i >= 0.0)) throw std::invalid_argument("offered_rate: n_i must be >= 0");
  if (!model.offer) throw std::invalid_argument("offered_rate: model has no offer function");
  return model.offer(station, point, n_i);
}

enum class EquilibriumClass { best, worst, unclassified };
enum class SelectCriterion { best, worst };

inline std::string to_string(EquilibriumClass c) {
  switch (c) {
    case EquilibriumClass::best: return "best";
    case EquilibriumClass::worst: return "worst";
    case EquilibriumClass::unclassified: return "unclassified";
  }
  return "unclassified";
}

struct EquilibriumSolution {
  Partition partition;
  double common_rate = 0.0;
  double residual = 0.0;
  EquilibriumClass classification = EquilibriumClass::unclassified;
  std::vector<double> thresholds;  // interior boundaries, 1D solvers only
  bool converged = true;
};

namespace detail {

// Continuous mass profile of a 1D density: piecewise-linear interpolation of
// the cell-mass prefix sums, so thresholds are not quantized to cells.
struct MassProfile {
  double ax = 0.0, dx = 0.0;
  std::vector<double> pm;  // pm[c] = mass of cells strictly before c

  explicit MassProfile(const DensityField& density) {
    const Domain& d = density.domain;
    ax = d.ax;
    dx = d.dx();
    pm.resize(d.cell_count() + 1);
    pm[0] = 0.0;
    for (int c = 0; c < d.cell_count(); ++c) pm[c + 1] = pm[c] + density.cell_mass(c);
  }

  double mass_left(double t) const {
    const int n = static_cast<int>(pm.size()) - 1;
    const double u = (t - ax) / dx;
    if (u <= 0.0) return 0.0;
    if (u >= n) return pm[n];
    const int c = static_cast<int>(u);
    return pm[c] + (u - c) * (pm[c + 1] - pm[c]);
  }

  double mass_between(double t1, double t2) const {
    return std::max(0.0, mass_left(t2) - mass_left(t1));
  }
};

inline int sign_of(double v) {
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

// Bisection of a continuous indifference function to |g| <= 1e-10, falling
// back to the midpoint once the bracket is exhausted.
inline double bisect_root(const std::function<double(double)>& g, double lo, double hi,
                          double g_lo) {
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    t = 0.5 * (lo + hi);
    const double v = g(t);
    if (std::fabs(v) <= 1e-10) return t;
    if (sign_of(v) == sign_of(g_lo))
      lo = t;
    else
      hi = t;
    if (hi - lo < 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(hi)))
      break;
  }
  return t;
}

}  // namespace detail

inline std::vector<EquilibriumSolution> solve_equilibrium_1d_two_stations(
    const Domain& domain, const DensityField& density, const Station& s1, const Station& s2,
    const EquilibriumModel& model, int scan_resolution = 2000) {
  if (domain.dim != 1)
    throw std::invalid_argument("solve_equilibrium_1d_two_stations: 1D domains only");
  if (s1.position.x == s2.position.x)
    throw std::invalid_argument("solve_equilibrium_1d_two_stations: distinct positions required");
  if (scan_resolution < 2)
    throw std::invalid_argument("solve_equilibrium_1d_two_stations: scan_resolution must be >= 2");

  const bool s1_left = s1.position.x < s2.position.x;
  const Station& left = s1_left ? s1 : s2;
  const Station& right = s1_left ? s2 : s1;
  const int left_slot = s1_left ? 0 : 1;
  const int right_slot = 1 - left_slot;

  const detail::MassProfile profile(density);
  const auto g = [&](double t) {
    const Point p{t, 0.0};
    const double mu = profile.mass_left(t);
    return model.offer(left, p, mu) - model.offer(right, p, 1.0 - mu);
  };

  std::vector<EquilibriumSolution> solutions;
  const auto push_threshold_solution = [&](double t) {
    EquilibriumSolution sol;
    std::vector<int> assignment(domain.cell_count());
    for (int c = 0; c < domain.cell_count(); ++c)
      assignment[c] = domain.cell_center(c).x < t ? left_slot : right_slot;
    sol.partition = make_partition(domain, density, 2, std::move(assignment));
    const Point p{t, 0.0};
    const double mu = profile.mass_left(t);
    const double r_left = model.offer(left, p, mu);
    const double r_right = model.offer(right, p, 1.0 - mu);
    sol.common_rate = 0.5 * (r_left + r_right);
    sol.residual = std::fabs(r_left - r_right);
    sol.thresholds = {t};
    solutions.push_back(std::move(sol));
  };

  // Boundary-pinned candidate with one empty cell: valid iff no user prefers
  // joining the empty station alone over its current rate (the empty-cell
  // inequality, checked on the scan grid with a one-user join mass).
  const auto try_pinned = [&](bool empty_left) {
    const Station& empty = empty_left ? left : right;
    const Station& full = empty_left ? right : left;
    const double join_mass = 1.0 / model.total_users;
    double violation = -std::numeric_limits<double>::infinity();
    double scale = 1.0;
    for (int j = 0; j <= scan_resolution; ++j) {
      const double x = domain.ax + (domain.bx - domain.ax) * j / scan_resolution;
      const Point p{x, 0.0};
      const double incumbent = model.offer(full, p, 1.0);
      const double join = model.offer(empty, p, join_mass);
      violation = std::max(violation, join - incumbent);
      scale = std::max(scale, std::fabs(incumbent));
    }
    if (violation > 1e-12 * scale) return;
    EquilibriumSolution sol;
    const int full_slot = empty_left ? right_slot : left_slot;
    sol.partition = make_partition(domain, density, 2,
                                   std::vector<int>(domain.cell_count(), full_slot));
    const double pinned_x = empty_left ? domain.ax : domain.bx;
    sol.common_rate = model.offer(full, Point{pinned_x, 0.0}, 1.0);
    sol.residual = std::max(0.0, violation);
    sol.thresholds = {pinned_x};
    solutions.push_back(std::move(sol));
  };

  try_pinned(true);

  std::vector<double> gv(scan_resolution + 1);
  for (int j = 0; j <= scan_resolution; ++j)
    gv[j] = g(domain.ax + (domain.bx - domain.ax) * j / scan_resolution);
  for (int j = 0; j < scan_resolution; ++j) {
    const double t0 = domain.ax + (domain.bx - domain.ax) * j / scan_resolution;
    const double t1 = domain.ax + (domain.bx - domain.ax) * (j + 1) / scan_resolution;
    if (std::isnan(gv[j]) || std::isnan(gv[j + 1])) continue;
    if (gv[j] == 0.0) {
      push_threshold_solution(t0);
      continue;
    }
    if (detail::sign_of(gv[j]) * detail::sign_of(gv[j + 1]) < 0)
      push_threshold_solution(detail::bisect_root(g, t0, t1, gv[j]));
  }
  if (gv[scan_resolution] == 0.0) push_threshold_solution(domain.bx);

  try_pinned(false);
  return solutions;
}

inline std::vector<EquilibriumSolution> solve_equilibrium_1d_multi(
    const Domain& domain, const DensityField& density, const std::vector<Station>& stations,
    const EquilibriumModel& model, int scan_resolution = 2000) {
  if (domain.dim != 1)
    throw std::invalid_argument("solve_equilibrium_1d_multi: 1D domains only");
  const int k = static_cast<int>(stations.size());
  if (k < 2) throw std::invalid_argument("solve_equilibrium_1d_multi: need >= 2 stations");
  for (int i = 0; i + 1 < k; ++i)
    if (!(stations[i].position.x < stations[i + 1].position.x))
      throw std::invalid_argument(
          "solve_equilibrium_1d_multi: stations must be strictly sorted by position");
  if (k == 2)
    return solve_equilibrium_1d_two_stations(domain, density, stations[0], stations[1], model,
                                             scan_resolution);

  const detail::MassProfile profile(density);
  std::vector<double> t(k - 1);
  for (int i = 0; i + 1 < k; ++i)
    t[i] = 0.5 * (stations[i].position.x + stations[i + 1].position.x);

  const auto pair_g = [&](int i, double lo, double hi, double x) {
    const Point p{x, 0.0};
    return model.offer(stations[i], p, profile.mass_between(lo, x)) -
           model.offer(stations[i + 1], p, profile.mass_between(x, hi));
  };

  const double span = domain.bx - domain.ax;
  bool converged = false;
  for (int sweep = 0; sweep < 500; ++sweep) {
    double max_move = 0.0;
    for (int i = 0; i < k - 1; ++i) {
      const double lo = i == 0 ? domain.ax : t[i - 1];
      const double hi = i == k - 2 ? domain.bx : t[i + 1];
      const auto g1 = [&](double x) { return pair_g(i, lo, hi, x); };
      const double g_lo = g1(lo + 1e-12 * span);
      const double g_hi = g1(hi - 1e-12 * span);
      double root;
      if (g_lo <= 0.0)
        root = lo;
      else if (g_hi >= 0.0)
        root = hi;
      else
        root = detail::bisect_root(g1, lo, hi, g_lo);
      const double step = 0.5 * (root - t[i]);
      t[i] += step;
      max_move = std::max(max_move, std::fabs(step));
    }
    if (max_move <= 1e-12 * span) {
      converged = true;
      break;
    }
  }

  EquilibriumSolution sol;
  sol.converged = converged;
  sol.thresholds = t;
  std::vector<int> assignment(domain.cell_count());
  for (int c = 0; c < domain.cell_count(); ++c) {
    const double x = domain.cell_center(c).x;
    int slot = 0;
    while (slot < k - 1 && x >= t[slot]) ++slot;
    assignment[c] = slot;
  }
  sol.partition = make_partition(domain, density, k, std::move(assignment));

  double residual = 0.0;
  for (int i = 0; i < k - 1; ++i) {
    const double lo = i == 0 ? domain.ax : t[i - 1];
    const double hi = i == k - 2 ? domain.bx : t[i + 1];
    const double left_mass = profile.mass_between(lo, t[i]);
    const double right_mass = profile.mass_between(t[i], hi);
    if (left_mass > 0.0 && right_mass > 0.0)
      residual = std::max(residual, std::fabs(pair_g(i, lo, hi, t[i])));
    if (i == 0) {
      const Point p{t[i], 0.0};
      sol.common_rate = 0.5 * (model.offer(stations[0], p, left_mass) +
                               model.offer(stations[1], p, right_mass));
    }
  }

  // Empty-cell inequality for stations whose snapped cell has no users: a
  // one-user join must not beat any incumbent's current rate.
  const double join_mass = 1.0 / model.total_users;
  for (int i = 0; i < k; ++i) {
    if (sol.partition.masses[i] > 0.0) continue;
    double violation = -std::numeric_limits<double>::infinity();
    for (int j = 0; j <= scan_resolution; ++j) {
      const double x = domain.ax + span * j / scan_resolution;
      const Point p{x, 0.0};
      int slot = 0;
      while (slot < k - 1 && x >= t[slot]) ++slot;
      if (sol.partition.masses[slot] <= 0.0) continue;
      const double incumbent = model.offer(stations[slot], p, sol.partition.masses[slot]);
      violation = std::max(violation, model.offer(stations[i], p, join_mass) - incumbent);
    }
    if (violation > 0.0) residual = std::max(residual, violation);
  }
  sol.residual = residual;

  std::vector<EquilibriumSolution> out;
  out.push_back(std::move(sol));
  return out;
}

inline EquilibriumSolution solve_equilibrium_2d(const Domain& domain,
                                                const DensityField& density,
                                                const std::vector<Station>& stations,
                                                const EquilibriumModel& model,
                                                const SolverConfig& cfg = {}) {
  if (domain.dim != 2)
    throw std::invalid_argument("solve_equilibrium_2d: 2D domains only");
  if (stations.empty()) throw std::invalid_argument("solve_equilibrium_2d: no stations");
  const int k = static_cast<int>(stations.size());
  const int n = domain.cell_count();
  std::vector<double> w(n);
  for (int c = 0; c < n; ++c) w[c] = density.cell_mass(c);

  // Candidate offers are evaluated at the station's mass plus one joining
  // user. That is the granular deviation test users actually face, and it
  // keeps the map finite at empty stations (an undamped map with the
  // zero-mass join sentinel can collapse the whole grid onto one station).
  const double join_mass = 1.0 / model.total_users;
  const auto assign_join = [&](const std::vector<double>& masses, std::vector<int>& a) {
    for (int c = 0; c < n; ++c) {
      const Point p = domain.cell_center(c);
      int best = 0;
      double best_rate = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < k; ++i) {
        const double r = model.offer(stations[i], p, masses[i] + join_mass);
        if (r > best_rate) {
          best_rate = r;
          best = i;
        }
      }
      a[c] = best;
    }
  };
  const auto masses_of = [&](const std::vector<int>& a) {
    std::vector<double> m(k, 0.0);
    for (int c = 0; c < n; ++c) m[a[c]] += w[c];
    return m;
  };

  std::vector<double> n_state = voronoi_partition(domain, density, stations).masses;
  std::vector<int> a(n);
  double gamma = cfg.damping;
  const double gamma_floor = cfg.damping / 64.0;
  constexpr int kWindow = 30;
  double window_best = std::numeric_limits<double>::infinity();
  double prev_window_best = std::numeric_limits<double>::infinity();
  int window_pos = 0, stalled = 0;
  bool converged = false;
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    assign_join(n_state, a);
    const std::vector<double> m = masses_of(a);
    double gap = 0.0;
    for (int i = 0; i < k; ++i) gap = std::max(gap, std::fabs(m[i] - n_state[i]));
    if (gap <= cfg.tol) {
      n_state = m;
      converged = true;
      break;
    }
    window_best = std::min(window_best, gap);
    if (++window_pos == kWindow) {
      if (window_best >= 0.98 * prev_window_best) {
        if (gamma <= gamma_floor) {
          if (++stalled >= 2) break;
        } else {
          gamma = std::max(gamma / 2.0, gamma_floor);
        }
      } else {
        stalled = 0;
      }
      prev_window_best = window_best;
      window_best = std::numeric_limits<double>::infinity();
      window_pos = 0;
    }
    for (int i = 0; i < k; ++i) n_state[i] += gamma * (m[i] - n_state[i]);
  }

  // Sequential improvement passes: move one cell at a time whenever a single
  // joining user would strictly beat its current rate, updating masses as we
  // go. The one-user join mass acts as a switching margin, so the dynamics
  // settle instead of oscillating; a pass with no moves means no cell has a
  // profitable deviation left.
  std::vector<double> m = masses_of(a);
  bool clean = false;
  for (int pass = 0; pass < 40 && !clean; ++pass) {
    clean = true;
    for (int c = 0; c < n; ++c) {
      const int cur = a[c];
      const Point p = domain.cell_center(c);
      const double incumbent = model.offer(stations[cur], p, m[cur]);
      int best = cur;
      double best_rate = incumbent + 1e-12 * (1.0 + std::fabs(incumbent));
      for (int i = 0; i < k; ++i) {
        if (i == cur) continue;
        const double r = model.offer(stations[i], p, m[i] + join_mass);
        if (r > best_rate) {
          best_rate = r;
          best = i;
        }
      }
      if (best != cur) {
        m[cur] = std::max(0.0, m[cur] - w[c]);
        m[best] += w[c];
        a[c] = best;
        clean = false;
      }
    }
    m = masses_of(a);  // resync accumulated rounding
  }

  double residual = 0.0;
  for (int c = 0; c < n; ++c) {
    const Point p = domain.cell_center(c);
    const double incumbent = model.offer(stations[a[c]], p, m[a[c]]);
    for (int i = 0; i < k; ++i) {
      if (i == a[c]) continue;
      residual = std::max(residual, model.offer(stations[i], p, m[i] + join_mass) - incumbent);
    }
  }
  residual = std::max(0.0, residual);

  EquilibriumSolution sol;
  sol.converged = converged || clean;
  sol.residual = residual;
  sol.partition = make_partition(domain, density, k, std::move(a));

  // Mean winning offer over interface cells; falls back to the whole grid
  // when a single cell covers everything.
  double rate_sum = 0.0;
  int rate_cells = 0;
  for (int c = 0; c < n; ++c) {
    const int iy = c / domain.nx, ix = c - iy * domain.nx;
    const int me = sol.partition.assignment[c];
    bool interface_cell = false;
    if (ix + 1 < domain.nx && sol.partition.assignment[c + 1] != me) interface_cell = true;
    if (ix > 0 && sol.partition.assignment[c - 1] != me) interface_cell = true;
    if (iy + 1 < domain.ny && sol.partition.assignment[c + domain.nx] != me)
      interface_cell = true;
    if (iy > 0 && sol.partition.assignment[c - domain.nx] != me) interface_cell = true;
    if (interface_cell) {
      rate_sum += model.offer(stations[me], domain.cell_center(c), sol.partition.masses[me]);
      ++rate_cells;
    }
  }
  if (rate_cells == 0) {
    for (int c = 0; c < n; ++c) {
      const int me = sol.partition.assignment[c];
      rate_sum += model.offer(stations[me], domain.cell_center(c), sol.partition.masses[me]);
    }
    rate_cells = n;
  }
  sol.common_rate = rate_sum / rate_cells;
  return sol;
}

inline EquilibriumSolution select_equilibrium(const std::vector<EquilibriumSolution>& solutions,
                                              SelectCriterion criterion) {
  if (solutions.empty())
    throw std::invalid_argument("select_equilibrium: empty solution list");
  const auto first_threshold = [](const EquilibriumSolution& s) {
    return s.thresholds.empty() ? -std::numeric_limits<double>::infinity() : s.thresholds[0];
  };
  std::size_t pick = 0;
  for (std::size_t i = 1; i < solutions.size(); ++i) {
    const double a = solutions[i].common_rate, b = solutions[pick].common_rate;
    const bool better = criterion == SelectCriterion::best ? a > b : a < b;
    if (better || (a == b && first_threshold(solutions[i]) < first_threshold(solutions[pick])))
      pick = i;
  }
  EquilibriumSolution chosen = solutions[pick];
  chosen.classification = criterion == SelectCriterion::best ? EquilibriumClass::best
                                                             : EquilibriumClass::worst;
  return chosen;
}

inline std::vector<EquilibriumSolution> solve_equilibrium(const Domain& domain,
                                                          const DensityField& density,
                                                          const std::vector<Station>& stations,
                                                          const EquilibriumModel& model,
                                                          int scan_resolution = 2000,
                                                          const SolverConfig& cfg = {}) {
  if (domain.dim == 1 && stations.size() == 2)
    return solve_equilibrium_1d_two_stations(domain, density, stations[0], stations[1], model,
                                             scan_resolution);
  if (domain.dim == 1)
    return solve_equilibrium_1d_multi(domain, density, stations, model, scan_resolution);
  std::vector<EquilibriumSolution> out;
  out.push_back(solve_equilibrium_2d(domain, density, stations, model, cfg));
  return out;
}

inline double price_of_anarchy(const Domain& domain, const DensityField& density,
                               const std::vector<Station>& stations, const RadioParams& params,
                               const CongestionSpec& spec, const EquilibriumModel& model) {
  validate_radio(params);
  const auto solutions = solve_equilibrium(domain, density, stations, model);
  if (solutions.empty())
    throw std::runtime_error("price_of_anarchy: no equilibrium found");
  const EquilibriumSolution worst = select_equilibrium(solutions, SelectCriterion::worst);
  const double eq_cost = total_cost(worst.partition, domain, density, stations, spec);

  double opt_cost;
  if (domain.dim == 1 && stations.size() <= 3) {
    opt_cost = detail::scan_contiguous(domain, density, stations, spec).cost;
  } else {
    const auto solved = spec.kind == CongestionSpec::Kind::additive
                            ? solve_additive(domain, density, stations, spec)
                            : solve_multiplicative(domain, density, stations, spec);
    opt_cost = solved.second.total_cost;
  }
  if (opt_cost == 0.0)
    throw std::runtime_error("price_of_anarchy: optimum cost is zero");
  return eq_cost / opt_cost;
}

// Fixed two-station instance on [0,1] with a prohibitive flat penalty on
// station 1 and a capacity step on station 2: the unique equilibrium parks
// everyone on station 2, while the optimum diverts a 0.001 sliver to station
// 1 just before the step. The step fires strictly above mass 0.999 with a
// 1e-9 guard so prefix-sum rounding at the optimal split cannot trip it.
struct PoaToyReport {
  std::vector<EquilibriumSolution> equilibria;
  EquilibriumSolution equilibrium;  // worst equilibrium (unique here)
  Partition optimum;
  double equilibrium_cost = 0.0;
  double optimum_cost = 0.0;
  double optimum_boundary = 0.0;
  double ratio = 0.0;
};

inline PoaToyReport poa_toy_example(int resolution = 100000) {
  const Domain domain = make_interval_domain(0.0, 1.0, resolution);
  const DensityField density = build_uniform_density(domain);
  std::vector<Station> stations(2);
  stations[0].index = 0;
  stations[0].position = {0.0, 0.0};
  stations[1].index = 1;
  stations[1].position = {1.0, 0.0};

  const MassFn step = [](double mass) { return mass > 0.999 + 1e-9 ? 1.0 : 0.0; };
  const CongestionSpec spec = make_additive_spec(
      distance_cost(1.0), {constant_fn(100.0), step}, {constant_fn(0.0), constant_fn(0.0)});
  const EquilibriumModel model = make_cost_offer_model(spec, 2500.0);

  PoaToyReport report;
  report.equilibria =
      solve_equilibrium_1d_two_stations(domain, density, stations[0], stations[1], model);
  if (report.equilibria.empty())
    throw std::runtime_error("poa_toy_example: no equilibrium found");
  report.equilibrium = select_equilibrium(report.equilibria, SelectCriterion::worst);
  report.equilibrium_cost =
      total_cost(report.equilibrium.partition, domain, density, stations, spec);

  detail::SearchResult scan = detail::scan_contiguous(domain, density, stations, spec);
  report.optimum_cost = scan.cost;
  report.optimum_boundary = scan.boundaries.empty() ? domain.ax : scan.boundaries[0];
  report.optimum = make_partition(domain, density, 2, std::move(scan.assignment));
  report.ratio = report.equilibrium_cost / report.optimum_cost;
  return report;
}

}  // namespace cellassoc

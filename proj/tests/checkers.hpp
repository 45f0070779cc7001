#pragma once
// Helpers shared between the unit suites and the acceptance runner.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "cellassoc/cellassoc.hpp"

namespace testutil {

// Deterministic PRNG so generated instances are identical on every run and
// platform; no seeding from time anywhere in the suite.
struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed * 2654435761ULL + 1) {}
  double uniform() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(state >> 11) * 0x1.0p-53;
  }
  double range(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) {
    return lo + static_cast<int>(uniform() * (hi - lo + 1));
  }
};

// The solver proves optimality only up to moving one grid cell between
// stations. This bounds how much any assignment score can change when one
// cell's worth of mass changes hands, by finite differences of the
// congestion terms around the converged masses; first_order_gap at a
// converged solution should sit below twice this plus rounding.
inline double one_cell_score_slack(const cellassoc::Domain& domain,
                                   const cellassoc::DensityField& density,
                                   const std::vector<cellassoc::Station>& stations,
                                   const cellassoc::CongestionSpec& spec,
                                   const cellassoc::Partition& part) {
  using cellassoc::CongestionSpec;
  const int k = static_cast<int>(stations.size());
  double w_max = 0.0;
  for (int c = 0; c < domain.cell_count(); ++c)
    w_max = std::max(w_max, density.cell_mass(c));

  double f_max = 0.0;
  std::vector<double> j(k, 0.0);
  for (int c = 0; c < domain.cell_count(); ++c) {
    const cellassoc::Point p = domain.cell_center(c);
    for (int i = 0; i < k; ++i) f_max = std::max(f_max, spec.base_cost(stations[i], p));
    j[part.assignment[c]] +=
        spec.base_cost(stations[part.assignment[c]], p) * density.cell_mass(c);
  }

  double slack = 0.0;
  double scale = f_max;
  for (int i = 0; i < k; ++i) {
    const double m0 = part.masses[i];
    const auto shifted = [&](double m1) {
      m1 = std::max(0.0, m1);
      if (spec.kind == CongestionSpec::Kind::additive) {
        const double t0 = spec.s[i](m0) + m0 * spec.s_prime[i](m0);
        const double t1 = spec.s[i](m1) + m1 * spec.s_prime[i](m1);
        return std::fabs(t1 - t0);
      }
      const double df = std::fabs(spec.m[i](m1) - spec.m[i](m0)) * f_max;
      const double doff = std::fabs(spec.m_prime[i](m1) - spec.m_prime[i](m0)) * j[i] +
                          std::fabs(spec.m_prime[i](m1)) * w_max * f_max;
      return df + doff;
    };
    slack = std::max(slack, std::max(shifted(m0 + w_max), shifted(m0 - w_max)));
    if (spec.kind == CongestionSpec::Kind::additive)
      scale = std::max(scale, std::fabs(spec.s[i](m0) + m0 * spec.s_prime[i](m0)));
    else
      scale = std::max(scale, std::fabs(spec.m[i](m0)) * f_max +
                                  std::fabs(spec.m_prime[i](m0)) * j[i]);
  }
  return 2.0 * slack + 1e-9 * (1.0 + scale);
}

// Single-user deviation margin of a wardrop outcome: positive means some
// cell's users would gain that much rate by switching stations, with the
// joining user's own mass counted at the target.
inline double worst_deviation_gain(const cellassoc::Domain& domain,
                                   const std::vector<cellassoc::Station>& stations,
                                   const cellassoc::EquilibriumModel& model,
                                   const cellassoc::Partition& part) {
  const int k = static_cast<int>(stations.size());
  const double join_mass = 1.0 / model.total_users;
  double worst = -std::numeric_limits<double>::infinity();
  for (int c = 0; c < domain.cell_count(); ++c) {
    const cellassoc::Point p = domain.cell_center(c);
    const int cur = part.assignment[c];
    if (part.masses[cur] <= 0.0) continue;
    const double incumbent = model.offer(stations[cur], p, part.masses[cur]);
    for (int i = 0; i < k; ++i) {
      if (i == cur) continue;
      worst =
          std::max(worst, model.offer(stations[i], p, part.masses[i] + join_mass) - incumbent);
    }
  }
  return worst;
}

}  // namespace testutil

#pragma once
// Brute-force search oracles used to verify the fixed-point solvers.
//
// threshold_scan enumerates every contiguous split of a 1D grid with the
// cells ordered left to right and the stations ordered by position;
// exhaustive enumerates every assignment of cells to stations, contiguous or
// not. Both return the exact global minimum over their search family. The
// public operation enforces the documented size caps; the uncapped engines
// live in detail for internal callers that need finer scans.

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cellassoc/congestion.hpp"
#include "cellassoc/partition.hpp"

namespace cellassoc {

enum class OracleMode { threshold_scan, exhaustive };

namespace detail {

struct SearchResult {
  std::vector<int> assignment;
  double cost = std::numeric_limits<double>::infinity();
  std::vector<double> boundaries;  // split positions (cell edges), threshold scans only
};

inline double station_term(const CongestionSpec& spec, int i, double mass_i, double j_i) {
  if (mass_i <= 0.0) return 0.0;
  if (spec.kind == CongestionSpec::Kind::additive) return j_i + mass_i * spec.s[i](mass_i);
  return spec.m[i](mass_i) * j_i;
}

inline SearchResult scan_contiguous(const Domain& domain, const DensityField& density,
                                    const std::vector<Station>& stations,
                                    const CongestionSpec& spec) {
  if (domain.dim != 1)
    throw std::invalid_argument("threshold scan: 1D domains only");
  const int k = static_cast<int>(stations.size());
  if (k < 1 || k > 3)
    throw std::invalid_argument("threshold scan: 1 to 3 stations supported");
  const int n = domain.cell_count();

  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return stations[a].position.x < stations[b].position.x;
  });

  // Prefix sums of cell mass and of F_i * cell mass for each station.
  const double meas = domain.cell_measure();
  std::vector<double> pm(n + 1, 0.0);
  std::vector<std::vector<double>> pc(k, std::vector<double>(n + 1, 0.0));
  for (int c = 0; c < n; ++c) {
    const double w = density.weight[c] * meas;
    pm[c + 1] = pm[c] + w;
    const Point p = domain.cell_center(c);
    for (int slot = 0; slot < k; ++slot)
      pc[slot][c + 1] = pc[slot][c] + spec.base_cost(stations[order[slot]], p) * w;
  }

  SearchResult best;
  std::vector<int> splits;
  auto consider = [&](double cost, const std::vector<int>& cuts) {
    if (cost < best.cost) {
      best.cost = cost;
      splits = cuts;
    }
  };

  if (k == 1) {
    consider(station_term(spec, order[0], pm[n], pc[0][n]), {});
  } else if (k == 2) {
    for (int c1 = 0; c1 <= n; ++c1) {
      const double t1 = station_term(spec, order[0], pm[c1], pc[0][c1]);
      const double t2 = station_term(spec, order[1], pm[n] - pm[c1], pc[1][n] - pc[1][c1]);
      consider(t1 + t2, {c1});
    }
  } else {
    for (int c1 = 0; c1 <= n; ++c1) {
      const double t1 = station_term(spec, order[0], pm[c1], pc[0][c1]);
      for (int c2 = c1; c2 <= n; ++c2) {
        const double t2 = station_term(spec, order[1], pm[c2] - pm[c1], pc[1][c2] - pc[1][c1]);
        const double t3 = station_term(spec, order[2], pm[n] - pm[c2], pc[2][n] - pc[2][c2]);
        consider(t1 + t2 + t3, {c1, c2});
      }
    }
  }

  best.assignment.assign(n, order[k - 1]);
  int from = 0;
  for (std::size_t slot = 0; slot < splits.size(); ++slot) {
    for (int c = from; c < splits[slot]; ++c) best.assignment[c] = order[slot];
    from = splits[slot];
    best.boundaries.push_back(domain.ax + splits[slot] * domain.dx());
  }
  return best;
}

inline SearchResult exhaustive_search(const Domain& domain, const DensityField& density,
                                      const std::vector<Station>& stations,
                                      const CongestionSpec& spec) {
  const int k = static_cast<int>(stations.size());
  const int n = domain.cell_count();
  if (k < 1 || k > 3)
    throw std::invalid_argument("exhaustive search: 1 to 3 stations supported");
  if (n > 20) throw std::invalid_argument("exhaustive search: grid too large");

  const double meas = domain.cell_measure();
  std::vector<double> w(n);
  std::vector<std::vector<double>> f(k, std::vector<double>(n));
  for (int c = 0; c < n; ++c) {
    w[c] = density.weight[c] * meas;
    for (int i = 0; i < k; ++i)
      f[i][c] = spec.base_cost(stations[i], domain.cell_center(c));
  }

  SearchResult best;
  std::vector<int> a(n, 0);
  std::vector<double> masses(k, 0.0), integrals(k, 0.0);
  // Depth-first over cells in index order enumerates assignments in
  // lexicographic order, so the strict comparison below keeps the
  // lexicographically smallest assignment among cost ties.
  auto recurse = [&](auto&& self, int c) -> void {
    if (c == n) {
      double cost = 0.0;
      for (int i = 0; i < k; ++i) cost += station_term(spec, i, masses[i], integrals[i]);
      if (cost < best.cost) {
        best.cost = cost;
        best.assignment = a;
      }
      return;
    }
    for (int i = 0; i < k; ++i) {
      a[c] = i;
      masses[i] += w[c];
      integrals[i] += f[i][c] * w[c];
      self(self, c + 1);
      masses[i] -= w[c];
      integrals[i] -= f[i][c] * w[c];
    }
  };
  recurse(recurse, 0);
  return best;
}

}  // namespace detail

inline std::pair<Partition, double> brute_force_oracle(const Domain& domain,
                                                       const DensityField& density,
                                                       const std::vector<Station>& stations,
                                                       const CongestionSpec& spec,
                                                       OracleMode mode) {
  detail::SearchResult result;
  if (mode == OracleMode::threshold_scan) {
    if (domain.dim != 1 || static_cast<int>(stations.size()) > 3 ||
        domain.cell_count() > 10000)
      throw std::invalid_argument(
          "brute_force_oracle: instance too large for threshold-scan mode (1D, <= 3 stations, "
          "<= 10^4 cells)");
    result = detail::scan_contiguous(domain, density, stations, spec);
  } else {
    if (domain.cell_count() > 16 || static_cast<int>(stations.size()) > 3)
      throw std::invalid_argument(
          "brute_force_oracle: instance too large for exhaustive mode (<= 16 cells, <= 3 "
          "stations)");
    result = detail::exhaustive_search(domain, density, stations, spec);
  }
  Partition part = make_partition(domain, density, static_cast<int>(stations.size()),
                                  std::move(result.assignment));
  return {std::move(part), result.cost};
}

}  // namespace cellassoc

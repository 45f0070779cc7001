#pragma once
// Cell partitions: per-cell station assignment with exact per-station masses,
// plus the Voronoi baseline, cost evaluation, and CSV export.

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cellassoc/congestion.hpp"
#include "cellassoc/grid.hpp"

namespace cellassoc {

struct Partition {
  std::vector<int> assignment;     // station index per quadrature cell
  std::vector<double> masses;      // N_i as a proportion, exact cell sums
  std::vector<double> user_counts; // masses scaled by the population size
};

// Recomputes the exact masses for an assignment. Ops that take no totalUsers
// parameter fill user_counts with totalUsers = 1; policy wrappers rescale.
inline Partition make_partition(const Domain& domain, const DensityField& density,
                                int station_count, std::vector<int> assignment,
                                double total_users = 1.0) {
  if (static_cast<int>(assignment.size()) != domain.cell_count())
    throw std::invalid_argument("make_partition: assignment size does not match the grid");
  Partition part;
  part.masses.assign(station_count, 0.0);
  const double meas = domain.cell_measure();
  for (int c = 0; c < domain.cell_count(); ++c) {
    const int i = assignment[c];
    if (i < 0 || i >= station_count)
      throw std::invalid_argument("make_partition: station index out of range at cell " +
                                  std::to_string(c));
    part.masses[i] += density.weight[c] * meas;
  }
  part.assignment = std::move(assignment);
  part.user_counts.resize(station_count);
  for (int i = 0; i < station_count; ++i) part.user_counts[i] = part.masses[i] * total_users;
  return part;
}

inline void check_distinct_positions(const std::vector<Station>& stations) {
  for (std::size_t i = 0; i < stations.size(); ++i)
    for (std::size_t j = i + 1; j < stations.size(); ++j)
      if (stations[i].position.x == stations[j].position.x &&
          stations[i].position.y == stations[j].position.y)
        throw std::invalid_argument("duplicate station positions at indices " +
                                    std::to_string(i) + " and " + std::to_string(j));
}

inline Partition voronoi_partition(const Domain& domain, const DensityField& density,
                                   const std::vector<Station>& stations) {
  if (stations.empty()) throw std::invalid_argument("voronoi_partition: no stations");
  check_distinct_positions(stations);
  const int k = static_cast<int>(stations.size());
  std::vector<int> assignment(domain.cell_count());
  for (int c = 0; c < domain.cell_count(); ++c) {
    const Point p = domain.cell_center(c);
    int best = 0;
    double best_d2 = 0.0;
    for (int i = 0; i < k; ++i) {
      const double ddx = stations[i].position.x - p.x;
      const double ddy = stations[i].position.y - p.y;
      const double d2 = ddx * ddx + ddy * ddy;
      if (i == 0 || d2 < best_d2) {  // ties keep the lowest index
        best = i;
        best_d2 = d2;
      }
    }
    assignment[c] = best;
  }
  return make_partition(domain, density, k, std::move(assignment));
}

namespace detail {

// Per-station J_i = integral of F(d_i) over cell i, plus the exact masses.
struct CellSums {
  std::vector<double> masses;
  std::vector<double> base_integrals;
};

inline CellSums partition_sums(const Partition& partition, const Domain& domain,
                               const DensityField& density,
                               const std::vector<Station>& stations,
                               const BaseCostFn& base_cost) {
  CellSums sums;
  const int k = static_cast<int>(stations.size());
  sums.masses.assign(k, 0.0);
  sums.base_integrals.assign(k, 0.0);
  const double meas = domain.cell_measure();
  for (int c = 0; c < domain.cell_count(); ++c) {
    const int i = partition.assignment[c];
    const double w = density.weight[c] * meas;
    sums.masses[i] += w;
    sums.base_integrals[i] += base_cost(stations[i], domain.cell_center(c)) * w;
  }
  return sums;
}

// Station i's share of the total cost; empty cells contribute zero (for the
// multiplicative form the m_i(0) * 0 product is taken as its mass limit 0).
inline double station_cost(const CongestionSpec& spec, int i, double mass_i, double j_i) {
  if (spec.kind == CongestionSpec::Kind::additive)
    return mass_i > 0.0 ? j_i + mass_i * spec.s[i](mass_i) : 0.0;
  return mass_i > 0.0 ? spec.m[i](mass_i) * j_i : 0.0;
}

}  // namespace detail

inline std::vector<double> intracell_costs(const Partition& partition, const Domain& domain,
                                           const DensityField& density,
                                           const std::vector<Station>& stations,
                                           const CongestionSpec& spec) {
  const int k = static_cast<int>(stations.size());
  const auto need = spec.kind == CongestionSpec::Kind::additive ? spec.s.size() : spec.m.size();
  if (static_cast<int>(need) != k)
    throw std::invalid_argument("intracell_costs: spec has " + std::to_string(need) +
                                " stations, instance has " + std::to_string(k));
  const auto sums = detail::partition_sums(partition, domain, density, stations, spec.base_cost);
  std::vector<double> costs(k);
  for (int i = 0; i < k; ++i)
    costs[i] = detail::station_cost(spec, i, sums.masses[i], sums.base_integrals[i]);
  return costs;
}

inline double total_cost(const Partition& partition, const Domain& domain,
                         const DensityField& density, const std::vector<Station>& stations,
                         const CongestionSpec& spec) {
  double total = 0.0;
  for (double c : intracell_costs(partition, domain, density, stations, spec)) total += c;
  return total;
}

// CSV format: `cell_index,x[,y],station_index`, one row per cell.
inline void write_partition_csv(const Partition& partition, const Domain& domain,
                                std::ostream& out) {
  char buf[96];
  out << (domain.dim == 2 ? "cell_index,x,y,station_index\n" : "cell_index,x,station_index\n");
  for (int c = 0; c < domain.cell_count(); ++c) {
    const Point p = domain.cell_center(c);
    if (domain.dim == 2)
      std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%d\n", c, p.x, p.y,
                    partition.assignment[c]);
    else
      std::snprintf(buf, sizeof buf, "%d,%.17g,%d\n", c, p.x, partition.assignment[c]);
    out << buf;
  }
}

inline void write_partition_csv(const Partition& partition, const Domain& domain,
                                const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_partition_csv: cannot open " + path);
  write_partition_csv(partition, domain, out);
}

}  // namespace cellassoc

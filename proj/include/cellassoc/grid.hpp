#pragma once
// Quadrature domains, regions, and discretized user-density fields.
//
// A Domain is a regular midpoint grid over an interval or an axis-aligned
// rectangle. A DensityField stores one density value per quadrature cell,
// normalized so that the cell masses (value times cell measure) sum to one.
// All integration in the library goes through these cells in index order,
// which keeps results deterministic.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellassoc {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Domain {
  int dim = 1;
  double ax = 0.0, bx = 1.0;
  double ay = 0.0, by = 0.0;
  int nx = 2, ny = 1;

  int cell_count() const { return nx * ny; }
  double dx() const { return (bx - ax) / nx; }
  double dy() const { return dim == 2 ? (by - ay) / ny : 1.0; }
  double cell_measure() const { return dim == 2 ? dx() * dy() : dx(); }
  double measure() const { return dim == 2 ? (bx - ax) * (by - ay) : (bx - ax); }

  // Cells are numbered row-major: index = iy * nx + ix.
  Point cell_center(int c) const {
    if (dim == 1) return {ax + (c + 0.5) * dx(), 0.0};
    const int iy = c / nx;
    const int ix = c - iy * nx;
    return {ax + (ix + 0.5) * dx(), ay + (iy + 0.5) * dy()};
  }

  bool contains(const Point& p) const {
    if (p.x < ax || p.x > bx) return false;
    if (dim == 2 && (p.y < ay || p.y > by)) return false;
    return true;
  }
};

inline Domain make_interval_domain(double a, double b, int resolution) {
  if (!(std::isfinite(a) && std::isfinite(b) && b > a))
    throw std::invalid_argument("make_interval_domain: require finite b > a");
  if (resolution < 2)
    throw std::invalid_argument("make_interval_domain: resolution must be >= 2");
  Domain d;
  d.dim = 1;
  d.ax = a;
  d.bx = b;
  d.nx = resolution;
  d.ny = 1;
  return d;
}

inline Domain make_rect_domain(double ax, double bx, double ay, double by,
                               int resolution_x, int resolution_y) {
  if (!(std::isfinite(ax) && std::isfinite(bx) && bx > ax))
    throw std::invalid_argument("make_rect_domain: require finite bx > ax");
  if (!(std::isfinite(ay) && std::isfinite(by) && by > ay))
    throw std::invalid_argument("make_rect_domain: require finite by > ay");
  if (resolution_x < 2 || resolution_y < 2)
    throw std::invalid_argument("make_rect_domain: resolution must be >= 2 per axis");
  Domain d;
  d.dim = 2;
  d.ax = ax;
  d.bx = bx;
  d.ay = ay;
  d.by = by;
  d.nx = resolution_x;
  d.ny = resolution_y;
  return d;
}

// A Region is either an axis-aligned box or an explicit set of cell indices.
// Boxes snap to whole cells: a cell belongs to the region iff its center
// does. Box membership is half-open, [lo, hi) per axis, so adjacent boxes
// partition cells without double counting; cell centers never lie on the
// domain's upper edge, so [a, b) covers the whole domain.
struct Region {
  enum class Kind { box, cells };
  Kind kind = Kind::box;
  double lo_x = 0.0, hi_x = 0.0;
  double lo_y = 0.0, hi_y = 0.0;
  std::vector<int> cell_indices;
};

inline Region make_interval_region(double lo, double hi) {
  if (!(hi > lo)) throw std::invalid_argument("make_interval_region: require hi > lo");
  Region r;
  r.lo_x = lo;
  r.hi_x = hi;
  return r;
}

inline Region make_rect_region(double lo_x, double hi_x, double lo_y, double hi_y) {
  if (!(hi_x > lo_x && hi_y > lo_y))
    throw std::invalid_argument("make_rect_region: require hi > lo per axis");
  Region r;
  r.lo_x = lo_x;
  r.hi_x = hi_x;
  r.lo_y = lo_y;
  r.hi_y = hi_y;
  return r;
}

inline Region make_cells_region(std::vector<int> cells) {
  Region r;
  r.kind = Region::Kind::cells;
  r.cell_indices = std::move(cells);
  return r;
}

inline void check_region_in_domain(const Domain& domain, const Region& region) {
  if (region.kind == Region::Kind::cells) {
    for (int c : region.cell_indices)
      if (c < 0 || c >= domain.cell_count())
        throw std::invalid_argument("region cell index " + std::to_string(c) +
                                    " outside the domain grid");
    return;
  }
  const double slack_x = 1e-12 * (domain.bx - domain.ax);
  if (region.lo_x < domain.ax - slack_x || region.hi_x > domain.bx + slack_x)
    throw std::invalid_argument("region exceeds the domain along x");
  if (domain.dim == 2) {
    const double slack_y = 1e-12 * (domain.by - domain.ay);
    if (region.lo_y < domain.ay - slack_y || region.hi_y > domain.by + slack_y)
      throw std::invalid_argument("region exceeds the domain along y");
  }
}

inline bool region_contains_cell(const Domain& domain, const Region& region, int cell) {
  if (region.kind == Region::Kind::cells) {
    for (int c : region.cell_indices)
      if (c == cell) return true;
    return false;
  }
  const Point p = domain.cell_center(cell);
  if (p.x < region.lo_x || p.x >= region.hi_x) return false;
  if (domain.dim == 2 && (p.y < region.lo_y || p.y >= region.hi_y)) return false;
  return true;
}

struct DensityField {
  Domain domain;
  std::vector<double> weight;  // density value per cell, users per unit measure

  double cell_mass(int c) const { return weight[c] * domain.cell_measure(); }
  double total_mass() const {
    double s = 0.0;
    for (double w : weight) s += w;
    return s * domain.cell_measure();
  }
};

namespace detail {

inline void normalize_density(DensityField& field, const char* who) {
  double total = 0.0;
  for (double w : field.weight) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw std::invalid_argument(std::string(who) + ": density weights must be finite and >= 0");
    total += w;
  }
  total *= field.domain.cell_measure();
  if (!(total > 0.0))
    throw std::invalid_argument(std::string(who) + ": density has zero total mass");
  for (double& w : field.weight) w /= total;
}

}  // namespace detail

inline DensityField build_uniform_density(const Domain& domain) {
  DensityField f;
  f.domain = domain;
  f.weight.assign(domain.cell_count(), 1.0 / domain.measure());
  return f;
}

struct PiecewisePiece {
  Region region;
  double level = 1.0;
};

inline DensityField build_piecewise_density(const Domain& domain,
                                            const std::vector<PiecewisePiece>& pieces) {
  if (pieces.empty())
    throw std::invalid_argument("build_piecewise_density: no pieces given");
  for (const auto& p : pieces) {
    if (!(p.level > 0.0) || !std::isfinite(p.level))
      throw std::invalid_argument("build_piecewise_density: piece levels must be finite and > 0");
    check_region_in_domain(domain, p.region);
  }
  DensityField f;
  f.domain = domain;
  f.weight.assign(domain.cell_count(), 0.0);
  for (int c = 0; c < domain.cell_count(); ++c) {
    int hits = 0;
    for (const auto& p : pieces) {
      if (region_contains_cell(domain, p.region, c)) {
        ++hits;
        f.weight[c] = p.level;
      }
    }
    if (hits == 0)
      throw std::invalid_argument("build_piecewise_density: coverage gap at cell " +
                                  std::to_string(c));
    if (hits > 1)
      throw std::invalid_argument("build_piecewise_density: overlapping pieces at cell " +
                                  std::to_string(c));
  }
  detail::normalize_density(f, "build_piecewise_density");
  return f;
}

inline DensityField build_radial_density(const Domain& domain, double r_d) {
  if (!(r_d > 0.0) || !std::isfinite(r_d))
    throw std::invalid_argument("build_radial_density: require finite R_D > 0");
  const double cx = std::max(std::fabs(domain.ax), std::fabs(domain.bx));
  const double cy = domain.dim == 2 ? std::max(std::fabs(domain.ay), std::fabs(domain.by)) : 0.0;
  const double max_r2 = cx * cx + cy * cy;
  const double rd2 = r_d * r_d;
  if (rd2 < max_r2 * (1.0 - 1e-12))
    throw std::invalid_argument(
        "build_radial_density: R_D^2 < max squared radius over the domain, density would go negative");
  DensityField f;
  f.domain = domain;
  f.weight.resize(domain.cell_count());
  for (int c = 0; c < domain.cell_count(); ++c) {
    const Point p = domain.cell_center(c);
    const double w = rd2 - (p.x * p.x + p.y * p.y);
    if (w < 0.0)
      throw std::invalid_argument("build_radial_density: negative density at cell " +
                                  std::to_string(c));
    f.weight[c] = w;
  }
  detail::normalize_density(f, "build_radial_density");
  return f;
}

// General sampled builder used by the scenario frontend and by tests; the
// samples are normalized numerically so the field integrates to one.
inline DensityField build_density_from_samples(const Domain& domain,
                                               const std::function<double(const Point&)>& fn) {
  DensityField f;
  f.domain = domain;
  f.weight.resize(domain.cell_count());
  for (int c = 0; c < domain.cell_count(); ++c) f.weight[c] = fn(domain.cell_center(c));
  detail::normalize_density(f, "build_density_from_samples");
  return f;
}

inline double mass(const DensityField& density, const Region& region) {
  check_region_in_domain(density.domain, region);
  const Domain& d = density.domain;
  double s = 0.0;
  if (region.kind == Region::Kind::cells) {
    for (int c : region.cell_indices) s += density.weight[c];
  } else {
    for (int c = 0; c < d.cell_count(); ++c)
      if (region_contains_cell(d, region, c)) s += density.weight[c];
  }
  return s * d.cell_measure();
}

inline double integrate(const DensityField& density,
                        const std::function<double(const Point&)>& integrand) {
  const Domain& d = density.domain;
  const double meas = d.cell_measure();
  double s = 0.0;
  for (int c = 0; c < d.cell_count(); ++c) {
    const double v = integrand(d.cell_center(c));
    if (!std::isfinite(v))
      throw std::runtime_error("integrate: non-finite integrand value at cell " +
                               std::to_string(c));
    s += v * density.weight[c] * meas;
  }
  return s;
}

// CSV format: header `x,weight` (1D) or `x,y,weight` (2D), one row per cell
// center in row-major order.
inline void write_density_csv(const DensityField& density, std::ostream& out) {
  const Domain& d = density.domain;
  char buf[96];
  out << (d.dim == 2 ? "x,y,weight\n" : "x,weight\n");
  for (int c = 0; c < d.cell_count(); ++c) {
    const Point p = d.cell_center(c);
    if (d.dim == 2)
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.x, p.y, density.weight[c]);
    else
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.x, density.weight[c]);
    out << buf;
  }
}

inline void write_density_csv(const DensityField& density, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_density_csv: cannot open " + path);
  write_density_csv(density, out);
}

inline DensityField read_density_csv(const Domain& domain, std::istream& in,
                                     const std::string& name) {
  DensityField f;
  f.domain = domain;
  f.weight.reserve(domain.cell_count());
  std::string line;
  int lineno = 0;
  const double tol_x = 1e-9 * (domain.bx - domain.ax);
  const double tol_y = domain.dim == 2 ? 1e-9 * (domain.by - domain.ay) : 0.0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1) continue;  // header
    if (line.empty()) continue;
    std::vector<double> cols;
    std::stringstream row(line);
    std::string tok;
    while (std::getline(row, tok, ',')) {
      char* end = nullptr;
      const double v = std::strtod(tok.c_str(), &end);
      while (end && *end == ' ') ++end;
      if (!end || *end != '\0')
        throw std::runtime_error(name + ":" + std::to_string(lineno) + ": invalid number '" +
                                 tok + "'");
      cols.push_back(v);
    }
    const std::size_t want = domain.dim == 2 ? 3 : 2;
    if (cols.size() != want)
      throw std::runtime_error(name + ":" + std::to_string(lineno) + ": expected " +
                               std::to_string(want) + " columns, got " +
                               std::to_string(cols.size()));
    const int c = static_cast<int>(f.weight.size());
    if (c >= domain.cell_count())
      throw std::runtime_error(name + ":" + std::to_string(lineno) +
                               ": more rows than grid cells");
    const Point want_p = domain.cell_center(c);
    if (std::fabs(cols[0] - want_p.x) > tol_x ||
        (domain.dim == 2 && std::fabs(cols[1] - want_p.y) > tol_y))
      throw std::runtime_error(name + ":" + std::to_string(lineno) +
                               ": cell center does not match the domain grid (row-major order)");
    f.weight.push_back(cols.back());
  }
  if (static_cast<int>(f.weight.size()) != domain.cell_count())
    throw std::runtime_error(name + ": expected " + std::to_string(domain.cell_count()) +
                             " rows, got " + std::to_string(f.weight.size()));
  detail::normalize_density(f, "read_density_csv");
  return f;
}

inline DensityField read_density_csv(const Domain& domain, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_density_csv: cannot open " + path);
  return read_density_csv(domain, in, path);
}

}  // namespace cellassoc

#pragma once
// Scenario files: a flat key = value grammar describing one experiment
// (domain, density, stations, radio constants, policy, solver knobs).
// Parsing is strict: every key must be known and well formed, and all
// problems are collected with line numbers before a single exception is
// thrown, so a bad file reports everything wrong with it at once.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cellassoc/grid.hpp"
#include "cellassoc/radio.hpp"
#include "cellassoc/wardrop.hpp"

namespace cellassoc {

enum class PolicyKind { round_robin, rate_fair, penalized, alpha_fair, wardrop, poa };

inline std::string to_string(PolicyKind policy) {
  switch (policy) {
    case PolicyKind::round_robin: return "round-robin";
    case PolicyKind::rate_fair: return "rate-fair";
    case PolicyKind::penalized: return "penalized";
    case PolicyKind::alpha_fair: return "alpha-fair";
    case PolicyKind::wardrop: return "wardrop";
    case PolicyKind::poa: return "poa";
  }
  return "unknown";
}

struct PenaltyDef {
  enum class Kind { none, constant, step, linear };
  Kind kind = Kind::none;
  double value = 0.0;      // constant / step height, or linear slope
  double threshold = 0.0;  // step threshold, in mass units
};

struct StationDef {
  Point position{};
  double tx_power = 1.0;
  std::optional<double> max_carriers;
  std::optional<double> kappa_bar;
  PenaltyDef penalty;
};

struct PieceDef {
  double x0 = 0.0, x1 = 0.0;  // interval bounds in 1D, x-range in 2D
  double y0 = 0.0, y1 = 0.0;
  double level = 0.0;
};

struct DensityDef {
  enum class Kind { uniform, linear, piecewise, radial, csv };
  Kind kind = Kind::uniform;
  double at_a = 1.0, at_b = 1.0;  // linear endpoint weights
  double r_d = 0.0;               // radial support radius
  std::string file;               // csv source
  std::vector<PieceDef> pieces;
};

struct CostDef {
  enum class Kind { radio, distance };
  Kind kind = Kind::radio;
  double exponent = 1.0;
};

struct SolverDef {
  double tol = 1e-8;
  double damping = 0.5;
  int max_iter = 10000;
  int scan_resolution = 2000;
  SelectCriterion select = SelectCriterion::best;
};

struct OutputDef {
  std::string partition;
  std::string report;
};

struct Scenario {
  std::string name;
  std::string source;
  std::uint64_t hash = 0;
  Domain domain;
  DensityDef density;
  std::vector<StationDef> stations;
  RadioParams radio;
  double total_users = 2500.0;
  PolicyKind policy = PolicyKind::rate_fair;
  double alpha = 2.0;
  SolverDef solver;
  CostDef cost;
  OutputDef output;
};

struct ScenarioValidationError : public std::runtime_error {
  std::vector<std::string> errors;

  explicit ScenarioValidationError(std::vector<std::string> errs)
      : std::runtime_error(format_message(errs)), errors(std::move(errs)) {}

 private:
  static std::string format_message(const std::vector<std::string>& errs) {
    std::string msg = "scenario validation failed:";
    for (const auto& e : errs) {
      msg += "\n  - ";
      msg += e;
    }
    return msg;
  }
};

namespace detail {

inline std::string normalize_newlines(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

inline std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

inline bool parse_number(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && std::isfinite(out);
}

inline bool parse_integer(const std::string& s, int& out) {
  double v = 0.0;
  if (!parse_number(s, v)) return false;
  if (v < -2e9 || v > 2e9 || v != static_cast<double>(static_cast<long long>(v))) return false;
  out = static_cast<int>(v);
  return true;
}

// Key store with consumption tracking: whatever is left unconsumed after the
// typed reads is an unknown key and reported as such.
class ScenarioReader {
 public:
  std::vector<std::string> errors;

  void add_line(int line_no, const std::string& key, const std::string& value) {
    auto it = entries_.find(key);
    if (it != entries_.end()) {
      errors.push_back("line " + std::to_string(line_no) + ": duplicate key '" + key +
                       "' (first on line " + std::to_string(it->second.line) + ")");
      return;
    }
    entries_[key] = Entry{value, line_no, false};
  }

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  void fail(const std::string& key, const std::string& msg) {
    auto it = entries_.find(key);
    if (it != entries_.end())
      errors.push_back("line " + std::to_string(it->second.line) + ": " + key + ": " + msg);
    else
      errors.push_back(key + ": " + msg);
  }

  std::optional<std::string> take(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    it->second.consumed = true;
    return it->second.value;
  }

  std::string take_string(const std::string& key, const std::string& fallback) {
    auto v = take(key);
    return v ? *v : fallback;
  }

  std::string take_required_string(const std::string& key) {
    auto v = take(key);
    if (!v) {
      fail(key, "missing required key");
      return "";
    }
    if (v->empty()) fail(key, "value must not be empty");
    return *v;
  }

  std::optional<double> take_opt_number(const std::string& key) {
    auto v = take(key);
    if (!v) return std::nullopt;
    double out = 0.0;
    if (!parse_number(*v, out)) {
      fail(key, "expected a finite number, got '" + *v + "'");
      return std::nullopt;
    }
    return out;
  }

  double take_number(const std::string& key, double fallback) {
    auto v = take_opt_number(key);
    return v ? *v : fallback;
  }

  double take_required_number(const std::string& key) {
    if (!has(key)) {
      fail(key, "missing required key");
      return 0.0;
    }
    auto v = take_opt_number(key);
    return v ? *v : 0.0;
  }

  std::optional<int> take_opt_integer(const std::string& key) {
    auto v = take(key);
    if (!v) return std::nullopt;
    int out = 0;
    if (!parse_integer(*v, out)) {
      fail(key, "expected an integer, got '" + *v + "'");
      return std::nullopt;
    }
    return out;
  }

  int take_integer(const std::string& key, int fallback) {
    auto v = take_opt_integer(key);
    return v ? *v : fallback;
  }

  int take_required_integer(const std::string& key) {
    if (!has(key)) {
      fail(key, "missing required key");
      return 0;
    }
    auto v = take_opt_integer(key);
    return v ? *v : 0;
  }

  // Keys that belong to a known section but the wrong variant get a pointed
  // message instead of a generic unknown-key report.
  void reject_if_present(const std::string& key, const std::string& reason) {
    if (!has(key)) return;
    take(key);
    fail(key, reason);
  }

  void report_unknown_keys() {
    for (const auto& [key, entry] : entries_) {
      if (!entry.consumed)
        errors.push_back("line " + std::to_string(entry.line) + ": unknown key '" + key + "'");
    }
  }

 private:
  struct Entry {
    std::string value;
    int line = 0;
    bool consumed = false;
  };
  std::map<std::string, Entry> entries_;
};

inline std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline PenaltyDef parse_penalty(ScenarioReader& r, const std::string& key,
                                const std::string& text) {
  PenaltyDef p;
  const auto parts = split_on(text, ':');
  const auto numeric = [&](const std::string& s, double& out) {
    if (!parse_number(s, out) || out < 0.0) {
      r.fail(key, "expected a nonnegative number, got '" + s + "'");
      return false;
    }
    return true;
  };
  if (parts[0] == "none" && parts.size() == 1) return p;
  if (parts[0] == "constant" && parts.size() == 2) {
    p.kind = PenaltyDef::Kind::constant;
    numeric(parts[1], p.value);
    return p;
  }
  if (parts[0] == "step" && parts.size() == 3) {
    p.kind = PenaltyDef::Kind::step;
    numeric(parts[1], p.threshold);
    numeric(parts[2], p.value);
    return p;
  }
  if (parts[0] == "linear" && parts.size() == 2) {
    p.kind = PenaltyDef::Kind::linear;
    numeric(parts[1], p.value);
    return p;
  }
  r.fail(key, "expected none, constant:V, step:T:V or linear:C, got '" + text + "'");
  return p;
}

}  // namespace detail

// Parses and validates scenario text. Throws ScenarioValidationError with
// every problem found; on success the returned Scenario is fully usable.
inline Scenario parse_scenario(const std::string& source, const std::string& name) {
  Scenario sc;
  sc.name = name;
  sc.source = detail::normalize_newlines(source);
  sc.hash = detail::fnv1a64(sc.source);

  detail::ScenarioReader r;
  {
    int line_no = 0;
    std::size_t start = 0;
    const std::string& text = sc.source;
    while (start <= text.size()) {
      std::size_t eol = text.find('\n', start);
      if (eol == std::string::npos) eol = text.size();
      std::string line = text.substr(start, eol - start);
      start = eol + 1;
      ++line_no;
      const std::size_t hash_pos = line.find('#');
      if (hash_pos != std::string::npos) line.erase(hash_pos);
      line = detail::trim(line);
      if (line.empty()) continue;
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos) {
        r.errors.push_back("line " + std::to_string(line_no) + ": expected key = value");
        continue;
      }
      const std::string key = detail::trim(line.substr(0, eq));
      const std::string value = detail::trim(line.substr(eq + 1));
      if (key.empty()) {
        r.errors.push_back("line " + std::to_string(line_no) + ": empty key");
        continue;
      }
      r.add_line(line_no, key, value);
    }
  }

  // Domain. Dimension steers which station and density keys are legal, so a
  // broken domain block falls back to 1D to keep later messages sensible.
  int dim = 1;
  {
    const std::size_t errs_before = r.errors.size();
    const std::string kind = r.take_required_string("domain.kind");
    if (kind == "rect") dim = 2;
    else if (!kind.empty() && kind != "interval")
      r.fail("domain.kind", "expected interval or rect, got '" + kind + "'");
    if (dim == 1) {
      const double a = r.take_required_number("domain.a");
      const double b = r.take_required_number("domain.b");
      const int res = r.take_required_integer("domain.resolution");
      if (r.has("domain.b") && r.has("domain.a") && !(b > a))
        r.fail("domain.b", "must exceed domain.a");
      if (r.has("domain.resolution") && res < 2) r.fail("domain.resolution", "must be >= 2");
      r.reject_if_present("domain.ax", "only valid for domain.kind = rect");
      r.reject_if_present("domain.bx", "only valid for domain.kind = rect");
      r.reject_if_present("domain.ay", "only valid for domain.kind = rect");
      r.reject_if_present("domain.by", "only valid for domain.kind = rect");
      r.reject_if_present("domain.resolution_x", "only valid for domain.kind = rect");
      r.reject_if_present("domain.resolution_y", "only valid for domain.kind = rect");
      if (r.errors.size() == errs_before) sc.domain = make_interval_domain(a, b, res);
    } else {
      const double ax = r.take_required_number("domain.ax");
      const double bx = r.take_required_number("domain.bx");
      const double ay = r.take_required_number("domain.ay");
      const double by = r.take_required_number("domain.by");
      const auto res = r.take_opt_integer("domain.resolution");
      const auto rx = r.take_opt_integer("domain.resolution_x");
      const auto ry = r.take_opt_integer("domain.resolution_y");
      int nx = 0, ny = 0;
      if (res && (rx || ry)) {
        r.fail("domain.resolution", "conflicts with domain.resolution_x/resolution_y");
      } else if (res) {
        nx = ny = *res;
      } else if (rx && ry) {
        nx = *rx;
        ny = *ry;
      } else {
        r.fail("domain.kind",
               "rect domains need domain.resolution or both domain.resolution_x and "
               "domain.resolution_y");
      }
      if (r.has("domain.bx") && r.has("domain.ax") && !(bx > ax))
        r.fail("domain.bx", "must exceed domain.ax");
      if (r.has("domain.by") && r.has("domain.ay") && !(by > ay))
        r.fail("domain.by", "must exceed domain.ay");
      if (nx != 0 && (nx < 2 || ny < 2))
        r.fail("domain.resolution", "each axis needs at least 2 cells");
      r.reject_if_present("domain.a", "only valid for domain.kind = interval");
      r.reject_if_present("domain.b", "only valid for domain.kind = interval");
      if (r.errors.size() == errs_before)
        sc.domain = make_rect_domain(ax, bx, ay, by, nx, ny);
    }
  }

  // Density.
  {
    const std::string kind = r.take_string("density.kind", "uniform");
    if (kind == "uniform") {
      sc.density.kind = DensityDef::Kind::uniform;
    } else if (kind == "linear") {
      sc.density.kind = DensityDef::Kind::linear;
      if (dim != 1) r.fail("density.kind", "linear density requires an interval domain");
      sc.density.at_a = r.take_required_number("density.at_a");
      sc.density.at_b = r.take_required_number("density.at_b");
      if (sc.density.at_a < 0.0) r.fail("density.at_a", "must be >= 0");
      if (sc.density.at_b < 0.0) r.fail("density.at_b", "must be >= 0");
      if (sc.density.at_a == 0.0 && sc.density.at_b == 0.0)
        r.fail("density.at_b", "endpoint weights must not both be zero");
    } else if (kind == "piecewise") {
      sc.density.kind = DensityDef::Kind::piecewise;
      const int n = r.take_required_integer("density.pieces");
      if (r.has("density.pieces") && (n < 1 || n > 10000))
        r.fail("density.pieces", "must be between 1 and 10000");
      for (int k = 1; k <= n && n <= 10000; ++k) {
        const std::string prefix = "density.piece." + std::to_string(k) + ".";
        PieceDef piece;
        piece.level = r.take_required_number(prefix + "level");
        if (r.has(prefix + "level") && !(piece.level > 0.0))
          r.fail(prefix + "level", "must be positive");
        if (dim == 1) {
          piece.x0 = r.take_required_number(prefix + "from");
          piece.x1 = r.take_required_number(prefix + "to");
          if (r.has(prefix + "from") && r.has(prefix + "to") && !(piece.x1 > piece.x0))
            r.fail(prefix + "to", "must exceed " + prefix + "from");
          r.reject_if_present(prefix + "x0", "only valid for rect domains");
          r.reject_if_present(prefix + "x1", "only valid for rect domains");
          r.reject_if_present(prefix + "y0", "only valid for rect domains");
          r.reject_if_present(prefix + "y1", "only valid for rect domains");
        } else {
          piece.x0 = r.take_required_number(prefix + "x0");
          piece.x1 = r.take_required_number(prefix + "x1");
          piece.y0 = r.take_required_number(prefix + "y0");
          piece.y1 = r.take_required_number(prefix + "y1");
          if (r.has(prefix + "x0") && r.has(prefix + "x1") && !(piece.x1 > piece.x0))
            r.fail(prefix + "x1", "must exceed " + prefix + "x0");
          if (r.has(prefix + "y0") && r.has(prefix + "y1") && !(piece.y1 > piece.y0))
            r.fail(prefix + "y1", "must exceed " + prefix + "y0");
          r.reject_if_present(prefix + "from", "only valid for interval domains");
          r.reject_if_present(prefix + "to", "only valid for interval domains");
        }
        sc.density.pieces.push_back(piece);
      }
    } else if (kind == "radial") {
      sc.density.kind = DensityDef::Kind::radial;
      sc.density.r_d = r.take_required_number("density.r_d");
      if (r.has("density.r_d") && !(sc.density.r_d > 0.0))
        r.fail("density.r_d", "must be positive");
    } else if (kind == "csv") {
      sc.density.kind = DensityDef::Kind::csv;
      sc.density.file = r.take_required_string("density.file");
    } else {
      r.fail("density.kind",
             "expected uniform, linear, piecewise, radial or csv, got '" + kind + "'");
    }
    if (sc.density.kind != DensityDef::Kind::linear) {
      r.reject_if_present("density.at_a", "only valid for density.kind = linear");
      r.reject_if_present("density.at_b", "only valid for density.kind = linear");
    }
    if (sc.density.kind != DensityDef::Kind::radial)
      r.reject_if_present("density.r_d", "only valid for density.kind = radial");
    if (sc.density.kind != DensityDef::Kind::csv)
      r.reject_if_present("density.file", "only valid for density.kind = csv");
  }

  // Stations.
  {
    const int count = r.take_required_integer("stations.count");
    if (r.has("stations.count") && (count < 1 || count > 64))
      r.fail("stations.count", "must be between 1 and 64");
    for (int i = 1; i <= count && count <= 64; ++i) {
      const std::string prefix = "station." + std::to_string(i) + ".";
      StationDef st;
      st.position.x = r.take_required_number(prefix + "x");
      if (dim == 2)
        st.position.y = r.take_required_number(prefix + "y");
      else
        r.reject_if_present(prefix + "y", "only valid for rect domains");
      st.tx_power = r.take_number(prefix + "power", 1.0);
      if (!(st.tx_power > 0.0)) r.fail(prefix + "power", "must be positive");
      st.max_carriers = r.take_opt_number(prefix + "max_carriers");
      if (st.max_carriers && *st.max_carriers < 0.0)
        r.fail(prefix + "max_carriers", "must be >= 0");
      st.kappa_bar = r.take_opt_number(prefix + "kappa_bar");
      if (st.kappa_bar && *st.kappa_bar < 0.0) r.fail(prefix + "kappa_bar", "must be >= 0");
      if (auto pen = r.take(prefix + "penalty"))
        st.penalty = detail::parse_penalty(r, prefix + "penalty", *pen);
      sc.stations.push_back(st);
    }
    for (std::size_t i = 0; i < sc.stations.size(); ++i)
      for (std::size_t j = i + 1; j < sc.stations.size(); ++j)
        if (sc.stations[i].position.x == sc.stations[j].position.x &&
            sc.stations[i].position.y == sc.stations[j].position.y)
          r.errors.push_back("stations " + std::to_string(i + 1) + " and " +
                             std::to_string(j + 1) + " share a position");
  }

  // Radio constants. sigma is the noise amplitude; it is squared into the
  // noise power used by the rate formulas.
  {
    const double sigma = r.take_number("radio.sigma", 1.0);
    if (!(sigma > 0.0)) r.fail("radio.sigma", "must be positive");
    sc.radio.sigma2 = sigma * sigma;
    sc.radio.xi = r.take_number("radio.xi", 2.0);
    if (!(sc.radio.xi > 0.0)) r.fail("radio.xi", "must be positive");
    sc.radio.height = r.take_number("radio.height", 1.0);
    if (!(sc.radio.height > 0.0)) r.fail("radio.height", "must be positive");
    sc.radio.theta_bar = r.take_number("radio.theta_bar", 1e-3);
    if (!(sc.radio.theta_bar > 0.0)) r.fail("radio.theta_bar", "must be positive");
  }

  sc.total_users = r.take_number("total_users", 2500.0);
  if (!(sc.total_users >= 1.0)) r.fail("total_users", "must be >= 1");

  // Policy.
  {
    const std::string policy = r.take_required_string("policy");
    if (policy == "round-robin") sc.policy = PolicyKind::round_robin;
    else if (policy == "rate-fair" || policy == "voronoi") sc.policy = PolicyKind::rate_fair;
    else if (policy == "penalized") sc.policy = PolicyKind::penalized;
    else if (policy == "alpha-fair") sc.policy = PolicyKind::alpha_fair;
    else if (policy == "wardrop") sc.policy = PolicyKind::wardrop;
    else if (policy == "poa") sc.policy = PolicyKind::poa;
    else if (!policy.empty())
      r.fail("policy",
             "expected round-robin, rate-fair, penalized, alpha-fair, wardrop or poa, got '" +
                 policy + "'");

    if (sc.policy == PolicyKind::alpha_fair) {
      sc.alpha = r.take_required_number("policy.alpha");
      if (r.has("policy.alpha")) {
        if (!(sc.alpha > 0.0)) r.fail("policy.alpha", "must be positive");
        else if (sc.alpha == 1.0) r.fail("policy.alpha", "alpha = 1 is unsupported");
      }
    } else {
      r.reject_if_present("policy.alpha", "only valid for policy = alpha-fair");
    }

    if (sc.policy == PolicyKind::penalized) {
      for (std::size_t i = 0; i < sc.stations.size(); ++i)
        if (!sc.stations[i].max_carriers || !sc.stations[i].kappa_bar)
          r.errors.push_back("station " + std::to_string(i + 1) +
                             ": penalized policy requires max_carriers and kappa_bar");
    }
    if (sc.policy == PolicyKind::wardrop && dim == 1 && sc.stations.size() > 2) {
      for (std::size_t i = 0; i + 1 < sc.stations.size(); ++i)
        if (!(sc.stations[i].position.x < sc.stations[i + 1].position.x)) {
          r.errors.push_back(
              "wardrop with three or more stations requires strictly increasing station "
              "positions");
          break;
        }
    }
  }

  // Solver knobs.
  {
    sc.solver.tol = r.take_number("solver.tol", 1e-8);
    if (!(sc.solver.tol > 0.0)) r.fail("solver.tol", "must be positive");
    sc.solver.damping = r.take_number("solver.damping", 0.5);
    if (!(sc.solver.damping > 0.0 && sc.solver.damping <= 1.0))
      r.fail("solver.damping", "must be in (0, 1]");
    sc.solver.max_iter = r.take_integer("solver.max_iter", 10000);
    if (sc.solver.max_iter < 1) r.fail("solver.max_iter", "must be >= 1");
    sc.solver.scan_resolution = r.take_integer("solver.scan_resolution", 2000);
    if (sc.solver.scan_resolution < 2) r.fail("solver.scan_resolution", "must be >= 2");
    const std::string select = r.take_string("solver.select", "best");
    if (select == "best") sc.solver.select = SelectCriterion::best;
    else if (select == "worst") sc.solver.select = SelectCriterion::worst;
    else r.fail("solver.select", "expected best or worst, got '" + select + "'");
  }

  // Base cost.
  {
    const std::string kind = r.take_string("cost.kind", "radio");
    if (kind == "radio") sc.cost.kind = CostDef::Kind::radio;
    else if (kind == "distance") sc.cost.kind = CostDef::Kind::distance;
    else r.fail("cost.kind", "expected radio or distance, got '" + kind + "'");
    if (sc.cost.kind == CostDef::Kind::distance) {
      sc.cost.exponent = r.take_number("cost.exponent", 1.0);
      if (!(sc.cost.exponent > 0.0)) r.fail("cost.exponent", "must be positive");
    } else {
      r.reject_if_present("cost.exponent", "only valid for cost.kind = distance");
    }
  }

  sc.output.partition = r.take_string("output.partition", "");
  sc.output.report = r.take_string("output.report", "");

  r.report_unknown_keys();
  if (!r.errors.empty()) throw ScenarioValidationError(std::move(r.errors));
  return sc;
}

namespace detail {

struct PresetEntry {
  const char* name;
  const char* source;
};

inline const std::vector<PresetEntry>& preset_table() {
  static const std::vector<PresetEntry> presets = {
      {"example1-uniform",
       R"(# Two stations at the ends of a calibrated interval, uniform demand.
# With matched stations the optimal boundary sits at the midpoint and the
# load splits evenly.
domain.kind = interval
domain.a = 0
domain.b = 5.6
domain.resolution = 100000
density.kind = uniform
stations.count = 2
station.1.x = 0
station.2.x = 5.6
radio.sigma = 1
radio.xi = 2
radio.height = 1
radio.theta_bar = 8.077992e-4
total_users = 2500
policy = round-robin
)"},
      {"example1-2x",
       R"(# Same interval as example1-uniform but demand grows linearly toward the
# right end, so the optimal boundary shifts right of the midpoint and the
# right station carries the larger share.
domain.kind = interval
domain.a = 0
domain.b = 5.6
domain.resolution = 100000
density.kind = linear
density.at_a = 0
density.at_b = 2
stations.count = 2
station.1.x = 0
station.2.x = 5.6
radio.sigma = 1
radio.xi = 2
radio.height = 1
radio.theta_bar = 8.077992e-4
total_users = 2500
policy = round-robin
)"},
      {"wardrop-1d-two-stations",
       R"(# Decentralized association between two stations on a line: users split at
# the point where both stations offer the same per-user rate.
domain.kind = interval
domain.a = -10
domain.b = 10
domain.resolution = 2000
density.kind = uniform
stations.count = 2
station.1.x = 0
station.2.x = 5
radio.sigma = 0.3
radio.xi = 2
radio.height = 1
total_users = 2500
policy = wardrop
)"},
      {"wardrop-1d-three-stations",
       R"(# Three stations spanning the interval; thresholds settle where adjacent
# stations offer equal rates.
domain.kind = interval
domain.a = -10
domain.b = 10
domain.resolution = 2000
density.kind = uniform
stations.count = 3
station.1.x = -10
station.2.x = 0
station.3.x = 10
radio.sigma = 0.3
radio.xi = 2
radio.height = 1
total_users = 2500
policy = wardrop
)"},
      {"wardrop-1d-ramp",
       R"(# Demand ramps down from left to right, pulling the equilibrium threshold
# toward the thin end.
domain.kind = interval
domain.a = -10
domain.b = 10
domain.resolution = 2000
density.kind = linear
density.at_a = 0.1
density.at_b = 0
stations.count = 2
station.1.x = 0
station.2.x = 5
radio.sigma = 0.3
radio.xi = 2
radio.height = 1
total_users = 2500
policy = wardrop
)"},
      {"2d-five-stations",
       R"(# Four corner stations plus one in the middle of a square under uniform
# demand.
domain.kind = rect
domain.ax = -4
domain.bx = 4
domain.ay = -4
domain.by = 4
domain.resolution = 256
density.kind = uniform
stations.count = 5
station.1.x = -2
station.1.y = -2
station.2.x = 2
station.2.y = -2
station.3.x = -2
station.3.y = 2
station.4.x = 2
station.4.y = 2
station.5.x = 0
station.5.y = 0
radio.sigma = 0.3
radio.xi = 2
radio.height = 1
total_users = 2500
policy = wardrop
)"},
      {"2d-five-stations-radial",
       R"(# Same layout as 2d-five-stations but demand concentrates at the center,
# which congests the middle station and shrinks its cell.
domain.kind = rect
domain.ax = -4
domain.bx = 4
domain.ay = -4
domain.by = 4
domain.resolution = 256
density.kind = radial
density.r_d = 5.656854249492381
stations.count = 5
station.1.x = -2
station.1.y = -2
station.2.x = 2
station.2.y = -2
station.3.x = -2
station.3.y = 2
station.4.x = 2
station.4.y = 2
station.5.x = 0
station.5.y = 0
radio.sigma = 0.3
radio.xi = 2
radio.height = 1
total_users = 2500
policy = wardrop
)"},
      {"poa-toy",
       R"(# Selfish users all crowd onto station 2 because station 1 carries a flat
# penalty, while the optimum diverts a small sliver to station 1 just before
# station 2's capacity step fires.
domain.kind = interval
domain.a = 0
domain.b = 1
domain.resolution = 100000
density.kind = uniform
stations.count = 2
station.1.x = 0
station.1.penalty = constant:100
station.2.x = 1
station.2.penalty = step:0.999:1
total_users = 2500
policy = poa
cost.kind = distance
cost.exponent = 1
)"},
      {"penalized-two-stations",
       R"(# Station 1 is capped at 750 carriers with a stiff overload price, so the
# optimal split parks the remaining users on station 2.
domain.kind = interval
domain.a = 0
domain.b = 1
domain.resolution = 10000
density.kind = uniform
stations.count = 2
station.1.x = 0.2
station.1.max_carriers = 750
station.1.kappa_bar = 10
station.2.x = 0.8
station.2.max_carriers = 2500
station.2.kappa_bar = 10
total_users = 2500
policy = penalized
)"},
      {"alpha-fair-two-stations",
       R"(# Proportional-fairness family with alpha = 2, which matches round-robin's
# partition on a linearly growing demand profile.
domain.kind = interval
domain.a = 0
domain.b = 1
domain.resolution = 10000
density.kind = linear
density.at_a = 0.2
density.at_b = 1.8
stations.count = 2
station.1.x = 0.1
station.2.x = 0.9
radio.sigma = 1
radio.xi = 2
radio.height = 1
radio.theta_bar = 0.001
total_users = 2500
policy = alpha-fair
policy.alpha = 2
)"}};
  return presets;
}

}  // namespace detail

inline std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& p : detail::preset_table()) names.push_back(p.name);
  return names;
}

inline const char* preset_source(const std::string& name) {
  for (const auto& p : detail::preset_table())
    if (name == p.name) return p.source;
  return nullptr;
}

// Resolves a preset name or a file path. Files are read whole; the name is
// the basename without its extension.
inline Scenario load_scenario(const std::string& name_or_path) {
  if (const char* src = preset_source(name_or_path)) return parse_scenario(src, name_or_path);

  std::FILE* f = std::fopen(name_or_path.c_str(), "rb");
  if (!f)
    throw ScenarioValidationError(
        {"cannot open scenario '" + name_or_path + "' (not a preset name or readable file)"});
  std::string text;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, got);
  std::fclose(f);

  std::string stem = name_or_path;
  const std::size_t slash = stem.find_last_of("/\\");
  if (slash != std::string::npos) stem = stem.substr(slash + 1);
  const std::size_t dot = stem.find_last_of('.');
  if (dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
  return parse_scenario(text, stem);
}

}  // namespace cellassoc

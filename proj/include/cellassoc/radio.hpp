#pragma once
// Physical-layer formulas: path-loss channel gain, SNR, Shannon throughput,
// and the per-user power a round-robin station needs to hold its cell at the
// target average throughput.
//
// Throughput is log base 2, so theta_bar is in bits per channel use and
// 2^(N*theta_bar) is the exact inverse of the rate formula.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "cellassoc/grid.hpp"

namespace cellassoc {

struct RadioParams {
  double sigma2 = 1.0;     // noise power (W)
  double xi = 2.0;         // path-loss exponent
  double height = 1.0;     // antenna height R (km)
  double theta_bar = 1e-3; // target average throughput (bits per channel use)
};

inline void validate_radio(const RadioParams& p) {
  if (!(p.sigma2 > 0.0)) throw std::invalid_argument("RadioParams: sigma2 must be > 0");
  if (!(p.xi > 0.0)) throw std::invalid_argument("RadioParams: xi must be > 0");
  if (!(p.height >= 0.0)) throw std::invalid_argument("RadioParams: height must be >= 0");
  if (!(p.theta_bar > 0.0)) throw std::invalid_argument("RadioParams: theta_bar must be > 0");
}

struct Station {
  int index = 0;
  Point position{};
  double tx_power = 1.0;                // constant power P_i, rate-fair policy
  std::optional<double> max_carriers;   // MAX_i carrier budget
  std::optional<double> kappa_bar;      // penalty slope past the budget
};

inline double distance(const Station& station, const Point& point) {
  const double ddx = station.position.x - point.x;
  const double ddy = station.position.y - point.y;
  return std::sqrt(ddx * ddx + ddy * ddy);
}

inline double channel_gain(const RadioParams& params, const Station& station,
                           const Point& point) {
  const double d = distance(station, point);
  return std::pow(params.height * params.height + d * d, -params.xi / 2.0);
}

inline double snr(const RadioParams& params, double power, double gain) {
  if (!(power >= 0.0)) throw std::invalid_argument("snr: power must be >= 0");
  return power * gain / params.sigma2;
}

inline double throughput(double snr_value) {
  if (!(snr_value >= 0.0)) throw std::invalid_argument("throughput: snr must be >= 0");
  return std::log2(1.0 + snr_value);
}

// Exponent guard shared with the congestion specs: fixed-point iterations can
// transiently propose huge masses, and 2^e overflows silently past ~1024.
inline void check_rate_exponent(double e, const char* who) {
  if (!(e <= 1000.0))
    throw std::runtime_error(std::string(who) + ": N*theta_bar = " + std::to_string(e) +
                             " bits exceeds the overflow guard (1000)");
}

// Per-user power that exactly meets theta_bar when n_i users time-share the
// station. n_i is an absolute user count (mass times the total population).
inline double required_power_round_robin(const RadioParams& params, const Station& station,
                                         const Point& point, double n_i) {
  if (!(n_i >= 0.0)) throw std::invalid_argument("required_power_round_robin: n_i must be >= 0");
  const double e = n_i * params.theta_bar;
  check_rate_exponent(e, "required_power_round_robin");
  const double d = distance(station, point);
  return params.sigma2 * (std::exp2(e) - 1.0) *
         std::pow(params.height * params.height + d * d, params.xi / 2.0);
}

}  // namespace cellassoc

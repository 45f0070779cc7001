#pragma once
// Congestion-augmented transport costs.
//
// A CongestionSpec couples a base cost F(d_i(x)) with either per-station
// additive terms s_i(mass) or multiplicative factors m_i(mass), each with its
// derivative. The total cost of a partition is
//   additive:        sum_i [ J_i + N_i * s_i(N_i) ]
//   multiplicative:  sum_i m_i(N_i) * J_i
// with J_i the integral of F(d_i) against the density over cell i. The solver
// assignment rules in solver.hpp are the first variations of these sums.

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cellassoc/radio.hpp"

namespace cellassoc {

using BaseCostFn = std::function<double(const Station&, const Point&)>;
using MassFn = std::function<double(double)>;

struct CongestionSpec {
  enum class Kind { additive, multiplicative };
  Kind kind = Kind::additive;
  BaseCostFn base_cost;
  std::vector<MassFn> s, s_prime;  // additive terms, one per station
  std::vector<MassFn> m, m_prime;  // multiplicative factors, one per station
};

inline CongestionSpec make_additive_spec(BaseCostFn base, std::vector<MassFn> s,
                                         std::vector<MassFn> s_prime) {
  if (s.size() != s_prime.size() || s.empty())
    throw std::invalid_argument("make_additive_spec: s and s_prime must be nonempty and equal-sized");
  CongestionSpec spec;
  spec.kind = CongestionSpec::Kind::additive;
  spec.base_cost = std::move(base);
  spec.s = std::move(s);
  spec.s_prime = std::move(s_prime);
  return spec;
}

inline CongestionSpec make_multiplicative_spec(BaseCostFn base, std::vector<MassFn> m,
                                               std::vector<MassFn> m_prime) {
  if (m.size() != m_prime.size() || m.empty())
    throw std::invalid_argument(
        "make_multiplicative_spec: m and m_prime must be nonempty and equal-sized");
  CongestionSpec spec;
  spec.kind = CongestionSpec::Kind::multiplicative;
  spec.base_cost = std::move(base);
  spec.m = std::move(m);
  spec.m_prime = std::move(m_prime);
  return spec;
}

inline BaseCostFn distance_cost(double exponent = 1.0) {
  return [exponent](const Station& st, const Point& p) {
    return std::pow(distance(st, p), exponent);
  };
}

// Rate-fair transmit cost sigma^2 (R^2 + d^2)^(xi/2): the power a station
// must spend to serve a user at distance d at unit spectral efficiency.
inline BaseCostFn rate_fair_base_cost(const RadioParams& params) {
  return [params](const Station& st, const Point& p) {
    const double d = distance(st, p);
    return params.sigma2 * std::pow(params.height * params.height + d * d, params.xi / 2.0);
  };
}

inline MassFn constant_fn(double v) {
  return [v](double) { return v; };
}

// Round-robin power: multiplicative factor 2^(mass * totalUsers * theta) - 1
// applied to the rate-fair base cost. Total cost times totalUsers is the
// network transmit power.
inline CongestionSpec round_robin_spec(const RadioParams& params, int station_count,
                                       double total_users) {
  validate_radio(params);
  if (!(total_users >= 1.0))
    throw std::invalid_argument("round_robin_spec: total_users must be >= 1");
  const double c = total_users * params.theta_bar;
  MassFn m = [c](double mass) {
    const double e = mass * c;
    check_rate_exponent(e, "round_robin_spec");
    return std::exp2(e) - 1.0;
  };
  MassFn mp = [c](double mass) {
    const double e = mass * c;
    check_rate_exponent(e, "round_robin_spec");
    return std::numbers::ln2_v<double> * c * std::exp2(e);
  };
  return make_multiplicative_spec(rate_fair_base_cost(params),
                                  std::vector<MassFn>(station_count, m),
                                  std::vector<MassFn>(station_count, mp));
}

// Capacity penalty kappa_i(N): zero below the carrier budget MAX_i, slope
// kappa_bar_i per excess user above it. The derivative uses the right-hand
// value away from the kink and the average of the one-sided values within
// +-kink_band of it (in mass units), keeping the fixed-point update defined.
inline CongestionSpec penalized_spec(const RadioParams& params,
                                     const std::vector<Station>& stations, double total_users,
                                     double kink_band = 1e-8) {
  validate_radio(params);
  if (!(total_users >= 1.0))
    throw std::invalid_argument("penalized_spec: total_users must be >= 1");
  std::vector<MassFn> s, sp;
  for (const auto& st : stations) {
    if (!st.max_carriers || !st.kappa_bar)
      throw std::invalid_argument("penalized_spec: station " + std::to_string(st.index) +
                                  " lacks max_carriers or kappa_bar");
    const double cap_mass = *st.max_carriers / total_users;
    const double slope = *st.kappa_bar * total_users;  // cost per unit mass past the cap
    s.push_back([cap_mass, slope](double mass) {
      return mass > cap_mass ? slope * (mass - cap_mass) : 0.0;
    });
    sp.push_back([cap_mass, slope, kink_band](double mass) {
      if (std::fabs(mass - cap_mass) <= kink_band) return slope / 2.0;
      return mass > cap_mass ? slope : 0.0;
    });
  }
  return make_additive_spec(rate_fair_base_cost(params), std::move(s), std::move(sp));
}

// Generalized alpha-fair cost: base (1/(alpha-1)) (sigma^2 (R^2+d^2)^(xi/2))^(alpha-1)
// with multiplicative factor (2^(N theta) - 1)^(alpha-1). alpha = 2 recovers
// total-power minimization (the round-robin objective); alpha = 1 is the
// proportional-fairness limit and is rejected.
inline CongestionSpec alpha_fair_spec(const RadioParams& params, int station_count,
                                      double total_users, double alpha) {
  validate_radio(params);
  if (alpha == 1.0)
    throw std::invalid_argument("alpha_fair_spec: alpha = 1 is unsupported");
  if (!(total_users >= 1.0))
    throw std::invalid_argument("alpha_fair_spec: total_users must be >= 1");
  const double a1 = alpha - 1.0;
  const double c = total_users * params.theta_bar;
  BaseCostFn base = [params, a1](const Station& st, const Point& p) {
    const double d = distance(st, p);
    const double f = params.sigma2 * std::pow(params.height * params.height + d * d,
                                              params.xi / 2.0);
    return std::pow(f, a1) / a1;
  };
  MassFn m = [c, a1](double mass) {
    const double e = mass * c;
    check_rate_exponent(e, "alpha_fair_spec");
    return std::pow(std::exp2(e) - 1.0, a1);
  };
  MassFn mp = [c, a1](double mass) {
    const double e = mass * c;
    check_rate_exponent(e, "alpha_fair_spec");
    return a1 * std::pow(std::exp2(e) - 1.0, a1 - 1.0) * std::numbers::ln2_v<double> * c *
           std::exp2(e);
  };
  return make_multiplicative_spec(std::move(base), std::vector<MassFn>(station_count, m),
                                  std::vector<MassFn>(station_count, mp));
}

}  // namespace cellassoc

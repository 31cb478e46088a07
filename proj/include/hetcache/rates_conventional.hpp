#pragma once

#include <optional>

#include "hetcache/geometry.hpp"
#include "hetcache/model.hpp"

namespace hetcache {

enum class Method { integral, closed_form, monte_carlo };

const char* method_name(Method m);

// Rates are nats/s/Hz.  In conventional mode the tier fields are per-user
// mean rates; in cached mode tier 1 carries the per-active-cell throughput
// (antenna multiplier included) and tier 2 the per-user helper rate, matching
// how the two ASE combinations weigh them.
struct RateReport {
  double mean_rate_tier1 = 0.0;
  double mean_rate_tier2 = 0.0;
  double ase_nats = 0.0;  // nats/s/Hz/m^2
  Method method = Method::integral;
  std::optional<double> std_error;  // Monte Carlo only
};

// Mean per-user rate integrals for the backhaul-limited network.  The pico
// rate is capped at the backhaul capacity; zero pico density yields 0.
double mean_rate_macro_integral(const NetworkConfig& cfg, const TierStats& st);
double mean_rate_pico_integral(const NetworkConfig& cfg, const TierStats& st);

// Closed-form approximations; require zero noise and equal pathloss
// exponents.
double mean_rate_macro_closed(const NetworkConfig& cfg, const TierStats& st);
double mean_rate_pico_closed(const NetworkConfig& cfg, const TierStats& st);

// ASE = sum_k p_active,k * lambda_k * M_k * mean_rate_k.  Method must be
// integral or closed_form (Monte Carlo lives in the simulator).
RateReport ase_conventional(const NetworkConfig& cfg,
                            Method method = Method::integral);

}  // namespace hetcache

#include "hetcache/rates_conventional.hpp"

#include <cmath>
#include <stdexcept>

#include "rate_common.hpp"

namespace hetcache {

namespace {
constexpr double kLn2 = 0.69314718055994530942;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::integral: return "integral";
    case Method::closed_form: return "closed_form";
    case Method::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

double mean_rate_macro_integral(const NetworkConfig& cfg,
                                const TierStats& st) {
  const detail::RateKernel kernel = detail::standard_rate_kernel(
      cfg, 1, st.active, st.assoc[0],
      std::numeric_limits<double>::infinity());
  return detail::evaluate_rate(kernel);
}

double mean_rate_pico_integral(const NetworkConfig& cfg, const TierStats& st) {
  if (cfg.tier2.density <= 0.0 || cfg.backhaul_nats <= 0.0) return 0.0;
  const detail::RateKernel kernel = detail::standard_rate_kernel(
      cfg, 2, st.active, st.assoc[1], cfg.backhaul_nats);
  return detail::evaluate_rate(kernel);
}

double mean_rate_macro_closed(const NetworkConfig& cfg, const TierStats& st) {
  detail::require_closed_form_preconditions(cfg);
  const detail::ClosedConstants c = detail::closed_constants(cfg, st.active);
  return detail::low_regime_term(c.alpha, cfg.tier1.antennas, c, kLn2) +
         detail::high_regime_term(c.alpha, c.sum_w, c.big_d, c.big_e[0]);
}

double mean_rate_pico_closed(const NetworkConfig& cfg, const TierStats& st) {
  detail::require_closed_form_preconditions(cfg);
  if (cfg.tier2.density <= 0.0 || cfg.backhaul_nats <= 0.0) return 0.0;
  const detail::ClosedConstants c = detail::closed_constants(cfg, st.active);
  return detail::low_regime_term(c.alpha, cfg.tier2.antennas, c,
                                 cfg.backhaul_nats);
}

RateReport ase_conventional(const NetworkConfig& cfg, Method method) {
  require_valid(cfg);
  if (method == Method::monte_carlo)
    throw std::invalid_argument(
        "ase_conventional computes analytic paths; use the simulator for "
        "monte_carlo");
  const TierStats st = conventional_stats(cfg);
  RateReport rep;
  rep.method = method;
  if (method == Method::integral) {
    rep.mean_rate_tier1 = mean_rate_macro_integral(cfg, st);
    rep.mean_rate_tier2 = mean_rate_pico_integral(cfg, st);
  } else {
    rep.mean_rate_tier1 = mean_rate_macro_closed(cfg, st);
    rep.mean_rate_tier2 = mean_rate_pico_closed(cfg, st);
  }
  rep.ase_nats = st.active[0] * cfg.tier1.density * cfg.tier1.antennas *
                     rep.mean_rate_tier1 +
                 st.active[1] * cfg.tier2.density * cfg.tier2.antennas *
                     rep.mean_rate_tier2;
  return rep;
}

}  // namespace hetcache

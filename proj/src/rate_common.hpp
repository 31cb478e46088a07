#pragma once

#include <array>

#include "hetcache/model.hpp"
#include "rate_engine.hpp"

namespace hetcache::detail {

// Rate kernel for a user served by tier `serving` at max-power association:
// per-tier terms pi lambda_j (P_j/P_k)^(2/a_j) (1 + pa_j Z_j(x)) v^(a_k/a_j)
// plus a thermal-noise term when configured.  `assoc` is the probability the
// kernel's serving-distance law is conditioned on.
RateKernel standard_rate_kernel(const NetworkConfig& cfg, int serving,
                                const std::array<double, 2>& active,
                                double assoc, double x_cap);

// Constants of the equal-pathloss zero-noise closed forms.  Tier weights are
// expressed relative to tier 1; every use is scale-invariant.
struct ClosedConstants {
  double alpha = 0.0;
  double sum_w = 0.0;              // sum_j lambda_j (P_j/P_1)^(2/alpha)
  double sum_paw = 0.0;            // sum_j pa_j w_j
  double big_d = 0.0;              // sum_j (1 - pa_j) w_j
  std::array<double, 2> big_e{};   // sum_j pa_j w_j M_j, per serving tier
  double c1() const { return sum_w / sum_paw; }
};

ClosedConstants closed_constants(const NetworkConfig& cfg,
                                 const std::array<double, 2>& active);

// ((alpha-2)/(2 m_k)) C1 ln(1 + (2 m_k/(alpha-2)) x_cap / C1), stable as the
// active probabilities vanish (limit equals x_cap).
double low_regime_term(double alpha, double m_serving, const ClosedConstants& c,
                       double x_cap);

// (alpha/2) (sum_w / D) ln(1 + (D/E) 4^(-1/alpha)) with the removable D -> 0
// limit; prefactor_w replaces sum_w for kernels normalized differently.
double high_regime_term(double alpha, double prefactor_w, double big_d,
                        double big_e);

void require_closed_form_preconditions(const NetworkConfig& cfg);

}  // namespace hetcache::detail

#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace hetcache::detail {

// Ergodic-rate integral shared by every analytic rate path:
//
//   rate = prefactor * Int_0^x_cap J(x) dx,
//   J(x) = Int_0^inf exp(-sum_i c_i(x) v^(e_i)) dv,   v = r^2,
//
// where the c_i collect the serving-distance law, the per-tier interference
// shape factors, and (optionally) thermal noise.  All c_i(x) >= 0 and at
// least one must be positive at every x.
struct RateKernel {
  std::vector<double> exps;                                 // e_i > 0
  std::function<void(double, std::vector<double>&)> coefs;  // fills c_i(x)
  double prefactor = 1.0;
  double x_cap = std::numeric_limits<double>::infinity();   // nats
};

// Inner integral J for fixed coefficients.
double decay_integral(const std::vector<double>& coefs,
                      const std::vector<double>& exps);

// Full rate integral.  An infinite x_cap is truncated where J falls below
// 1e-12 of J(0), then extended by doubling windows until the added mass is
// below 1e-10 of the running total.  Throws std::domain_error when J never
// decays (no interference and no noise: the rate diverges).
double evaluate_rate(const RateKernel& kernel);

}  // namespace hetcache::detail

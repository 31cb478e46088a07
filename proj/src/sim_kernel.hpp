#pragma once

// Hot inner loop of the simulator, isolated so it can be compiled with
// aggressive math flags. Everything here is pure arithmetic on flat arrays;
// no error paths, no library calls beyond pow/log.

#include <cstdint>
#include <random>

namespace hetcache::detail {

struct KernelTier {
  const double* x = nullptr;
  const double* y = nullptr;
  std::int32_t count = 0;
  double power = 0.0;   // per-stream transmit power
  int fading_m = 1;     // interferer gain ~ Gamma(m, 1/m)
  double alpha = 0.0;
};

// Accumulates signal and interference powers for one user at (ux, uy).
// Every listed BS of both tiers is treated as transmitting except the one
// at (excl_tier, excl_slot), whose contribution is dropped; gains are still
// drawn for it so the consumed stream is independent of the exclusion.
// Returns the interference power; *signal_out gets the serving-link power
// with a fresh unit-exponential gain.
double sinr_components(double ux, double uy, const KernelTier tiers[2],
                       int excl_tier, std::int32_t excl_slot, double side,
                       std::mt19937_64& eng, double* signal_out);

}  // namespace hetcache::detail

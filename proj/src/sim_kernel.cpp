// Compiled with aggressive math flags (see CMakeLists); keep this file free
// of code that depends on strict IEEE semantics, error handling, or NaN
// propagation. Inputs are finite and positive by construction.

#include "sim_kernel.hpp"

#include <cmath>
#include <vector>

namespace hetcache::detail {

namespace {

inline double u01(std::mt19937_64& eng) {
  return double((eng() >> 11) + 1) * 0x1.0p-53;
}

inline double torus_d2(double ux, double uy, double bx, double by,
                       double side) {
  double dx = std::fabs(ux - bx);
  double dy = std::fabs(uy - by);
  if (dx > side - dx) dx = side - dx;
  if (dy > side - dy) dy = side - dy;
  double d2 = dx * dx + dy * dy;
  return d2 < 1e-12 ? 1e-12 : d2;  // co-located points: keep powers finite
}

}  // namespace

double sinr_components(double ux, double uy, const KernelTier tiers[2],
                       int excl_tier, std::int32_t excl_slot, double side,
                       std::mt19937_64& eng, double* signal_out) {
  thread_local std::vector<double> pathloss;
  thread_local std::vector<double> gain_u;

  // Serving link first so the draw order is signal, tier-1 gains, tier-2
  // gains regardless of geometry. A multi-antenna BS splits power evenly
  // across its streams, and beamforming leaves the served user a unit
  // exponential gain.
  {
    const KernelTier& t = tiers[excl_tier];
    double d2 = torus_d2(ux, uy, t.x[excl_slot], t.y[excl_slot], side);
    *signal_out = (t.power / double(t.fading_m)) * std::pow(d2, -0.5 * t.alpha) *
                  -std::log(u01(eng));
  }

  double interference = 0.0;
  for (int ti = 0; ti < 2; ++ti) {
    const KernelTier& t = tiers[ti];
    const std::int32_t n = t.count;
    if (n <= 0) continue;
    if (std::size_t(n) > pathloss.size()) {
      pathloss.resize(std::size_t(n));
      gain_u.resize(std::size_t(n));
    }

    const double exponent = -0.5 * t.alpha;
    for (std::int32_t i = 0; i < n; ++i)
      pathloss[std::size_t(i)] = torus_d2(ux, uy, t.x[i], t.y[i], side);
    for (std::int32_t i = 0; i < n; ++i)
      pathloss[std::size_t(i)] = std::pow(pathloss[std::size_t(i)], exponent);

    // Gains are drawn for every slot, the excluded one included, so the
    // stream position never depends on which BS serves the user.
    const int m = t.fading_m;
    for (std::int32_t i = 0; i < n; ++i) {
      double prod = u01(eng);
      for (int s = 1; s < m; ++s) prod *= u01(eng);
      gain_u[std::size_t(i)] = prod;
    }
    if (ti == excl_tier) pathloss[std::size_t(excl_slot)] = 0.0;

    double acc = 0.0;
    for (std::int32_t i = 0; i < n; ++i)
      acc += pathloss[std::size_t(i)] * std::log(gain_u[std::size_t(i)]);
    interference += acc * (-t.power / double(m));
  }
  return interference;
}

}  // namespace hetcache::detail

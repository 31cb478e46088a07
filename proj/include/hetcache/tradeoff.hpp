#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hetcache/model.hpp"
#include "hetcache/rates_conventional.hpp"

namespace hetcache {

// One-stop ASE evaluation: analytical methods dispatch on cfg.mode, the
// Monte Carlo method runs the drop simulator with the given budget.
RateReport evaluate_ase(const NetworkConfig& cfg, Method method,
                        int drops = 500, std::uint64_t seed = 1);

enum class SweepVar { lambda2, eta, backhaul, skew };

// lambda2 is in BSs per m^2, eta is the cached fraction of the catalog,
// backhaul in nats/s/Hz, skew is the popularity exponent.
void apply_sweep_var(NetworkConfig& cfg, SweepVar var, double value);

std::vector<double> make_grid(double lo, double hi, int n, bool log_spaced);

struct SweepSpec {
  SweepVar var = SweepVar::lambda2;
  std::vector<double> grid;
  Method method = Method::closed_form;
  int drops = 500;          // Monte Carlo only
  std::uint64_t seed = 1;   // Monte Carlo only
};

struct SweepPoint {
  double x = 0.0;
  double ase_nats = 0.0;  // nats/s/Hz/m^2
  double std_error = 0.0;
  bool failed = false;
  std::string error;
};

// Evaluates every grid point; a point that throws is reported as failed and
// the sweep continues.
std::vector<SweepPoint> sweep(const NetworkConfig& base, const SweepSpec& spec);

enum class SolveStatus {
  ok,
  target_below_range,   // target under the lowest achievable ASE
  target_above_range,   // target over the highest achievable ASE
  non_monotone_fallback  // scan found non-monotone ASE; grid search used
};
const char* solve_status_name(SolveStatus s);

struct EtaSolution {
  double eta = 0.0;
  double ase_nats = 0.0;
  int iterations = 0;
  double residual = 0.0;  // |ASE - target| / target at the solution
  SolveStatus status = SolveStatus::ok;
  double ase_lo = 0.0, ase_hi = 0.0;  // ASE at eta = 0 and eta = 1
  // Closed-form solves are re-checked with the integral method at the
  // solution; a relative gap above 5% sets the flag.
  double integral_gap = 0.0;
  bool flagged = false;
};

// Smallest cached fraction whose ASE reaches the target (cached mode only).
// An 8-point pre-scan checks monotonicity; bisection then runs at most 60
// iterations to a relative residual of 1e-4.
EtaSolution solve_eta_for_target(const NetworkConfig& cfg,
                                 double target_ase_nats,
                                 Method method = Method::closed_form);

struct DensitySolution {
  double lambda2 = 0.0;
  double ase_nats = 0.0;
  int iterations = 0;
  double residual = 0.0;
  SolveStatus status = SolveStatus::ok;
};

// Second-tier density whose ASE matches the target, found by bisection in
// log-density over [lambda2_lo, lambda2_hi] (ASE is increasing in density).
DensitySolution solve_density_for_target(const NetworkConfig& cfg,
                                         double target_ase_nats,
                                         double lambda2_lo, double lambda2_hi,
                                         Method method = Method::closed_form);

struct DensityOptimum {
  double lambda2 = 0.0;
  double ase_nats = 0.0;
  double cache_files = 0.0;  // per-helper cache size at the optimum
  bool boundary = false;     // argmax sat on an edge of the scanned range
  std::vector<SweepPoint> curve;  // the coarse scan, for reporting
};

// Best helper density when total cache memory per unit area is fixed:
// each density candidate gets cache_files = budget / lambda2 (clamped to the
// catalog). Coarse log-spaced scan, then golden-section refinement inside
// the cells bracketing the scan argmax.
DensityOptimum optimal_density_under_budget(const NetworkConfig& cfg,
                                            double budget_files_per_m2,
                                            double lambda2_lo,
                                            double lambda2_hi,
                                            Method method = Method::closed_form,
                                            int coarse_points = 48);

}  // namespace hetcache

#include "hetcache/tradeoff.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hetcache/rates_cached.hpp"
#include "hetcache/simulator.hpp"

namespace hetcache {

namespace {

double analytic_ase(const NetworkConfig& cfg, Method method) {
  return (cfg.mode == NetworkMode::cached ? ase_cached(cfg, method)
                                          : ase_conventional(cfg, method))
      .ase_nats;
}

void reject_monte_carlo(Method method, const char* what) {
  if (method == Method::monte_carlo)
    throw std::invalid_argument(std::string(what) +
                                " needs a deterministic method");
}

}  // namespace

RateReport evaluate_ase(const NetworkConfig& cfg, Method method, int drops,
                        std::uint64_t seed) {
  if (method != Method::monte_carlo)
    return cfg.mode == NetworkMode::cached ? ase_cached(cfg, method)
                                           : ase_conventional(cfg, method);
  SimOptions opt;
  opt.drops = drops;
  opt.seed = seed;
  const SimEstimate est = estimate(cfg, opt);
  RateReport rep;
  rep.method = Method::monte_carlo;
  rep.ase_nats = est.ase_nats;
  rep.std_error = est.ase_std_error;
  rep.mean_rate_tier1 = est.rate_tier1.mean;
  rep.mean_rate_tier2 = est.rate_tier2.mean;
  return rep;
}

void apply_sweep_var(NetworkConfig& cfg, SweepVar var, double value) {
  switch (var) {
    case SweepVar::lambda2:
      cfg.tier2.density = value;
      break;
    case SweepVar::eta:
      cfg.catalog.cache_files = value * double(cfg.catalog.catalog_size);
      break;
    case SweepVar::backhaul:
      cfg.backhaul_nats = value;
      break;
    case SweepVar::skew:
      cfg.catalog.skew = value;
      break;
  }
}

std::vector<double> make_grid(double lo, double hi, int n, bool log_spaced) {
  if (n < 1) throw std::invalid_argument("grid needs at least one point");
  if (n == 1) return {lo};
  if (!(hi >= lo)) throw std::invalid_argument("grid bounds are reversed");
  if (log_spaced && !(lo > 0.0))
    throw std::invalid_argument("log grid needs positive bounds");
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = double(i) / double(n - 1);
    g[std::size_t(i)] =
        log_spaced ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<SweepPoint> sweep(const NetworkConfig& base,
                              const SweepSpec& spec) {
  std::vector<SweepPoint> out;
  out.reserve(spec.grid.size());
  for (double x : spec.grid) {
    SweepPoint p;
    p.x = x;
    try {
      NetworkConfig cfg = base;
      apply_sweep_var(cfg, spec.var, x);
      const RateReport rep = evaluate_ase(cfg, spec.method, spec.drops,
                                          spec.seed);
      p.ase_nats = rep.ase_nats;
      p.std_error = rep.std_error.value_or(0.0);
    } catch (const std::exception& e) {
      p.failed = true;
      p.error = e.what();
    }
    out.push_back(std::move(p));
  }
  return out;
}

const char* solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::ok:
      return "ok";
    case SolveStatus::target_below_range:
      return "target_below_range";
    case SolveStatus::target_above_range:
      return "target_above_range";
    case SolveStatus::non_monotone_fallback:
      return "non_monotone_fallback";
  }
  return "unknown";
}

EtaSolution solve_eta_for_target(const NetworkConfig& base, double target,
                                 Method method) {
  if (base.mode != NetworkMode::cached)
    throw std::invalid_argument("eta solving requires cached mode");
  if (!(target > 0.0))
    throw std::invalid_argument("target ASE must be positive");
  reject_monte_carlo(method, "eta bisection");

  auto ase_at = [&](double eta) {
    NetworkConfig cfg = base;
    cfg.catalog.cache_files = eta * double(cfg.catalog.catalog_size);
    return analytic_ase(cfg, method);
  };

  constexpr int kScan = 8;
  std::array<double, kScan> etas{}, vals{};
  double scale = 0.0;
  for (int i = 0; i < kScan; ++i) {
    etas[std::size_t(i)] = double(i) / double(kScan - 1);
    vals[std::size_t(i)] = ase_at(etas[std::size_t(i)]);
    scale = std::max(scale, std::fabs(vals[std::size_t(i)]));
  }
  bool monotone = true;
  for (int i = 0; i + 1 < kScan; ++i)
    if (vals[std::size_t(i) + 1] < vals[std::size_t(i)] - 1e-9 * scale)
      monotone = false;

  EtaSolution sol;
  sol.ase_lo = vals.front();
  sol.ase_hi = vals.back();

  if (!monotone) {
    // ASE(eta) is not monotone here; pick the closest match on a fine grid.
    sol.status = SolveStatus::non_monotone_fallback;
    const std::vector<double> grid = make_grid(0.0, 1.0, 257, false);
    double best_gap = std::numeric_limits<double>::infinity();
    for (double eta : grid) {
      const double v = ase_at(eta);
      const double gap = std::fabs(v - target);
      if (gap < best_gap) {
        best_gap = gap;
        sol.eta = eta;
        sol.ase_nats = v;
      }
    }
    sol.residual = best_gap / target;
  } else if (target < vals.front()) {
    sol.status = SolveStatus::target_below_range;
    sol.eta = 0.0;
    sol.ase_nats = vals.front();
    sol.residual = std::fabs(vals.front() - target) / target;
  } else if (target > vals.back()) {
    sol.status = SolveStatus::target_above_range;
    sol.eta = 1.0;
    sol.ase_nats = vals.back();
    sol.residual = std::fabs(vals.back() - target) / target;
  } else {
    int i = 0;
    while (i + 2 < kScan && vals[std::size_t(i) + 1] < target) ++i;
    double lo = etas[std::size_t(i)], hi = etas[std::size_t(i) + 1];
    double eta = lo, val = vals[std::size_t(i)];
    int it = 0;
    while (it < 60) {
      ++it;
      eta = 0.5 * (lo + hi);
      val = ase_at(eta);
      if (std::fabs(val - target) <= 1e-4 * target) break;
      (val < target ? lo : hi) = eta;
    }
    sol.eta = eta;
    sol.ase_nats = val;
    sol.iterations = it;
    sol.residual = std::fabs(val - target) / target;
  }

  if (method == Method::closed_form) {
    NetworkConfig cfg = base;
    cfg.catalog.cache_files = sol.eta * double(cfg.catalog.catalog_size);
    try {
      const double vi = analytic_ase(cfg, Method::integral);
      sol.integral_gap = std::fabs(sol.ase_nats - vi) / std::fabs(vi);
    } catch (const std::exception&) {
      sol.integral_gap = std::numeric_limits<double>::infinity();
    }
    sol.flagged = !(sol.integral_gap <= 0.05);
  }
  return sol;
}

DensitySolution solve_density_for_target(const NetworkConfig& base,
                                         double target, double lambda2_lo,
                                         double lambda2_hi, Method method) {
  if (!(target > 0.0))
    throw std::invalid_argument("target ASE must be positive");
  if (!(lambda2_lo > 0.0) || !(lambda2_hi > lambda2_lo))
    throw std::invalid_argument("density bracket must satisfy 0 < lo < hi");
  reject_monte_carlo(method, "density bisection");

  auto ase_at = [&](double l2) {
    NetworkConfig cfg = base;
    cfg.tier2.density = l2;
    return analytic_ase(cfg, method);
  };

  DensitySolution sol;
  const double flo = ase_at(lambda2_lo);
  const double fhi = ase_at(lambda2_hi);
  if (target < flo) {
    sol.status = SolveStatus::target_below_range;
    sol.lambda2 = lambda2_lo;
    sol.ase_nats = flo;
    sol.residual = std::fabs(flo - target) / target;
    return sol;
  }
  if (target > fhi) {
    sol.status = SolveStatus::target_above_range;
    sol.lambda2 = lambda2_hi;
    sol.ase_nats = fhi;
    sol.residual = std::fabs(fhi - target) / target;
    return sol;
  }
  double lo = std::log(lambda2_lo), hi = std::log(lambda2_hi);
  double l2 = lambda2_lo, val = flo;
  int it = 0;
  while (it < 60) {
    ++it;
    l2 = std::exp(0.5 * (lo + hi));
    val = ase_at(l2);
    if (std::fabs(val - target) <= 1e-4 * target) break;
    (val < target ? lo : hi) = std::log(l2);
  }
  sol.lambda2 = l2;
  sol.ase_nats = val;
  sol.iterations = it;
  sol.residual = std::fabs(val - target) / target;
  return sol;
}

DensityOptimum optimal_density_under_budget(const NetworkConfig& base,
                                            double budget_files_per_m2,
                                            double lambda2_lo,
                                            double lambda2_hi, Method method,
                                            int coarse_points) {
  if (base.mode != NetworkMode::cached)
    throw std::invalid_argument("density optimization requires cached mode");
  if (!(budget_files_per_m2 >= 0.0))
    throw std::invalid_argument("budget must be non-negative");
  if (!(lambda2_lo > 0.0) || !(lambda2_hi > lambda2_lo))
    throw std::invalid_argument("density range must satisfy 0 < lo < hi");
  if (coarse_points < 4)
    throw std::invalid_argument("coarse scan needs at least 4 points");
  reject_monte_carlo(method, "density optimization");

  auto files_at = [&](double l2) {
    return std::clamp(budget_files_per_m2 / l2, 0.0,
                      double(base.catalog.catalog_size));
  };
  auto ase_at = [&](double l2) {
    NetworkConfig cfg = base;
    cfg.tier2.density = l2;
    cfg.catalog.cache_files = files_at(l2);
    return analytic_ase(cfg, method);
  };

  DensityOptimum opt;
  const std::vector<double> grid =
      make_grid(lambda2_lo, lambda2_hi, coarse_points, true);
  int argmax = -1;
  double best = -std::numeric_limits<double>::infinity();
  for (double x : grid) {
    SweepPoint p;
    p.x = x;
    try {
      p.ase_nats = ase_at(x);
      if (p.ase_nats > best) {
        best = p.ase_nats;
        argmax = int(opt.curve.size());
      }
    } catch (const std::exception& e) {
      p.failed = true;
      p.error = e.what();
    }
    opt.curve.push_back(std::move(p));
  }
  if (argmax < 0)
    throw std::runtime_error("density scan failed at every point: " +
                             opt.curve.front().error);
  opt.boundary = argmax == 0 || argmax + 1 == coarse_points;

  // Golden-section in log-density inside the cells around the scan argmax.
  double a = std::log(grid[std::size_t(std::max(argmax - 1, 0))]);
  double b = std::log(grid[std::size_t(std::min(argmax + 1, coarse_points - 1))]);
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = ase_at(std::exp(c));
  double fd = ase_at(std::exp(d));
  while (b - a > 1e-6) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = ase_at(std::exp(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = ase_at(std::exp(d));
    }
  }
  double xg = std::exp(0.5 * (a + b));
  double fg = ase_at(xg);
  if (best > fg) {  // a boundary argmax can beat the interior refinement
    xg = grid[std::size_t(argmax)];
    fg = best;
  }
  opt.lambda2 = xg;
  opt.ase_nats = fg;
  opt.cache_files = files_at(xg);
  return opt;
}

}  // namespace hetcache

#include "hetcache/rates_cached.hpp"

#include <cmath>
#include <stdexcept>

#include "hetcache/geometry.hpp"
#include "hetcache/parallel.hpp"
#include "hetcache/specfun.hpp"
#include "rate_common.hpp"

namespace hetcache {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;
}  // namespace

double hit_probability(const ZipfCatalog& catalog) {
  if (catalog.catalog_size < 1)
    throw std::invalid_argument("hit_probability: empty catalog");
  const double nc =
      std::min(catalog.cache_files, double(catalog.catalog_size));
  if (nc <= 0.0) return 0.0;
  const long long whole = (long long)nc;
  const double frac = nc - double(whole);
  const double skew = catalog.skew;

  // Fixed chunking keeps the summation order (and thus the result)
  // independent of the worker count.
  const long long n = catalog.catalog_size;
  const int chunks = n > 4096 ? 64 : 1;
  std::vector<long double> totals(chunks, 0.0L), cacheds(chunks, 0.0L);
  parallel_for(chunks, [&](int ci) {
    const long long lo = 1 + n * ci / chunks;
    const long long hi = n * (ci + 1) / chunks;
    long double total = 0.0L, cached = 0.0L;
    for (long long f = lo; f <= hi; ++f) {
      const double w = std::pow(double(f), -skew);
      total += w;
      if (f <= whole) cached += w;
      else if (f == whole + 1) cached += frac * w;
    }
    totals[ci] = total;
    cacheds[ci] = cached;
  });
  long double total = 0.0L, cached = 0.0L;
  for (int ci = 0; ci < chunks; ++ci) {
    total += totals[ci];
    cached += cacheds[ci];
  }
  return double(cached / total);
}

CacheSplit cache_split(const NetworkConfig& cfg) {
  CacheSplit s;
  s.hit_prob = hit_probability(cfg.catalog);
  for (int k = 1; k <= 2; ++k)
    s.hit_assoc[k - 1] = equal_pathloss(cfg)
                             ? association_prob_closed(cfg, k)
                             : association_prob(cfg, k);
  s.assoc[0] = s.hit_prob * s.hit_assoc[0] + (1.0 - s.hit_prob);
  s.assoc[1] = s.hit_prob * s.hit_assoc[1];
  s.macro_hit_share = s.hit_prob * s.hit_assoc[0] / s.assoc[0];
  return s;
}

CachedStats cached_stats(const NetworkConfig& cfg) {
  CachedStats st;
  st.split = cache_split(cfg);
  for (int k = 1; k <= 2; ++k)
    st.active[k - 1] = active_prob(cfg, k, st.split.assoc[k - 1]);
  return st;
}

double mean_rate_hit_integral(const NetworkConfig& cfg, const CachedStats& st,
                              int k) {
  const double hit_assoc = st.split.hit_assoc[k - 1];
  if (hit_assoc <= 0.0)
    throw std::domain_error(
        "mean_rate_hit_integral: tier never serves hit users");
  const detail::RateKernel kernel = detail::standard_rate_kernel(
      cfg, k, st.active, hit_assoc, std::numeric_limits<double>::infinity());
  return detail::evaluate_rate(kernel);
}

double mean_rate_miss_integral(const NetworkConfig& cfg,
                               const CachedStats& st) {
  const TierParams& t1 = cfg.tier1;
  const TierParams& t2 = cfg.tier2;
  const double pa1 = st.active[0];
  const double pa2 = st.active[1];

  detail::RateKernel kernel;
  kernel.exps.push_back(1.0);  // nearest-macro law + macro interference
  const bool helper_noise =
      t2.density > 0.0 && pa2 > 0.0;  // helpers interfere without exclusion
  double helper_base = 0.0;
  if (helper_noise) {
    const double a2 = t2.pathloss_exponent;
    const double m2 = double(t2.antennas);
    const double coef =
        gamma_fn(1.0 - 2.0 / a2) * gamma_fn(m2 + 2.0 / a2) / gamma_fn(m2);
    helper_base = kPi * pa2 * t2.density * coef *
                  std::pow(t1.antennas * (t2.tx_power_w / t1.tx_power_w) / m2,
                           2.0 / a2);
    kernel.exps.push_back(t1.pathloss_exponent / a2);
  }
  double noise_c = 0.0;
  if (cfg.noise_power_w > 0.0) {
    noise_c = t1.antennas * cfg.noise_power_w / t1.tx_power_w;
    kernel.exps.push_back(t1.pathloss_exponent / 2.0);
  }

  const double base1 = kPi * t1.density;
  const double a1 = t1.pathloss_exponent;
  const double m1 = double(t1.antennas);
  const double a2 = t2.pathloss_exponent;
  kernel.coefs = [=](double x, std::vector<double>& c) {
    std::size_t i = 0;
    const double z = pa1 > 0.0 ? pa1 * z_exact(x, a1, m1, 1.0) : 0.0;
    c[i++] = base1 * (1.0 + z);
    if (helper_noise) c[i++] = helper_base * std::pow(std::expm1(x), 2.0 / a2);
    if (noise_c > 0.0) c[i] = noise_c * std::expm1(x);
  };
  kernel.prefactor = kPi * t1.density;
  return detail::evaluate_rate(kernel);
}

double mean_rate_hit_closed(const NetworkConfig& cfg, const CachedStats& st,
                            int k) {
  detail::require_closed_form_preconditions(cfg);
  if (st.split.hit_assoc[k - 1] <= 0.0)
    throw std::domain_error(
        "mean_rate_hit_closed: tier never serves hit users");
  const detail::ClosedConstants c = detail::closed_constants(cfg, st.active);
  const double mk = tier(cfg, k).antennas;
  return detail::low_regime_term(c.alpha, mk, c, kLn2) +
         detail::high_regime_term(c.alpha, c.sum_w, c.big_d, c.big_e[k - 1]);
}

double mean_rate_miss_closed(const NetworkConfig& cfg, const CachedStats& st) {
  detail::require_closed_form_preconditions(cfg);
  const detail::ClosedConstants c = detail::closed_constants(cfg, st.active);
  const double pa1 = st.active[0];
  const double m1 = cfg.tier1.antennas;

  const double u1 = 2.0 * pa1 * m1 / (c.alpha - 2.0) * kLn2;
  const double low = u1 < 1e-8
                         ? kLn2 * (1.0 - 0.5 * u1)
                         : (c.alpha - 2.0) / (2.0 * pa1 * m1) * std::log1p(u1);
  // Weight lambda_1 (not the bare reciprocal of D): the nearest-macro law
  // contributes its own density factor to the above-crossover piece.
  const double high = detail::high_regime_term(c.alpha, cfg.tier1.density,
                                               c.big_d, c.big_e[0]);
  return low + high;
}

double macro_cell_throughput(const NetworkConfig& cfg, const CachedStats& st,
                             double rate_hit1, double rate_miss) {
  const double p = st.split.macro_hit_share;
  return cfg.tier1.antennas * (p * rate_hit1 + (1.0 - p) * rate_miss);
}

double macro_cell_throughput_binomial(const NetworkConfig& cfg,
                                      const CachedStats& st, double rate_hit1,
                                      double rate_miss) {
  const int m1 = cfg.tier1.antennas;
  const double p = st.split.macro_hit_share;
  double total = 0.0;
  double binom = 1.0;  // C(m1, n) built up iteratively
  for (int n = 0; n <= m1; ++n) {
    const double pmf =
        binom * std::pow(p, n) * std::pow(1.0 - p, m1 - n);
    total += pmf * (n * rate_hit1 + (m1 - n) * rate_miss);
    binom = binom * (m1 - n) / (n + 1.0);
  }
  return total;
}

RateReport ase_cached(const NetworkConfig& cfg, Method method) {
  require_valid(cfg);
  if (cfg.mode != NetworkMode::cached)
    throw std::invalid_argument("ase_cached requires cached mode");
  if (method == Method::monte_carlo)
    throw std::invalid_argument(
        "ase_cached computes analytic paths; use the simulator for "
        "monte_carlo");
  const CachedStats st = cached_stats(cfg);
  const bool integral = method == Method::integral;

  const double p1h = st.split.macro_hit_share;
  double rate_hit1 = 0.0, rate_hit2 = 0.0, rate_miss = 0.0;
  if (p1h > 0.0)
    rate_hit1 = integral ? mean_rate_hit_integral(cfg, st, 1)
                         : mean_rate_hit_closed(cfg, st, 1);
  if (p1h < 1.0)
    rate_miss = integral ? mean_rate_miss_integral(cfg, st)
                         : mean_rate_miss_closed(cfg, st);
  const double helper_weight =
      st.active[1] * cfg.tier2.density;  // idle helpers contribute nothing
  if (helper_weight > 0.0)
    rate_hit2 = integral ? mean_rate_hit_integral(cfg, st, 2)
                         : mean_rate_hit_closed(cfg, st, 2);

  RateReport rep;
  rep.method = method;
  rep.mean_rate_tier1 = macro_cell_throughput(cfg, st, rate_hit1, rate_miss);
  rep.mean_rate_tier2 = rate_hit2;
  rep.ase_nats = st.active[0] * cfg.tier1.density * rep.mean_rate_tier1 +
                 helper_weight * rate_hit2;
  return rep;
}

}  // namespace hetcache

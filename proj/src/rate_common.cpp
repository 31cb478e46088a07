#include "rate_common.hpp"

#include <cmath>
#include <stdexcept>

#include "hetcache/specfun.hpp"

namespace hetcache::detail {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

RateKernel standard_rate_kernel(const NetworkConfig& cfg, int serving,
                                const std::array<double, 2>& active,
                                double assoc, double x_cap) {
  const TierParams& ts = tier(cfg, serving);
  struct Term {
    double base, alpha, m, mhat, pa;
  };
  std::vector<Term> terms;
  RateKernel kernel;
  for (int j = 1; j <= 2; ++j) {
    const TierParams& tj = tier(cfg, j);
    if (tj.density <= 0.0) continue;
    Term t;
    t.alpha = tj.pathloss_exponent;
    t.m = double(tj.antennas);
    t.mhat = t.m / ts.antennas;
    t.pa = active[j - 1];
    t.base = kPi * tj.density *
             std::pow(tj.tx_power_w / ts.tx_power_w, 2.0 / t.alpha);
    kernel.exps.push_back(ts.pathloss_exponent / t.alpha);
    terms.push_back(t);
  }
  double noise_c = 0.0;
  if (cfg.noise_power_w > 0.0) {
    noise_c = ts.antennas * cfg.noise_power_w / ts.tx_power_w;
    kernel.exps.push_back(ts.pathloss_exponent / 2.0);
  }
  kernel.coefs = [terms, noise_c](double x, std::vector<double>& c) {
    std::size_t i = 0;
    for (const Term& t : terms) {
      const double z =
          t.pa > 0.0 ? t.pa * z_exact(x, t.alpha, t.m, t.mhat) : 0.0;
      c[i++] = t.base * (1.0 + z);
    }
    if (noise_c > 0.0) c[i] = noise_c * std::expm1(x);
  };
  kernel.prefactor = kPi * ts.density / assoc;
  kernel.x_cap = x_cap;
  return kernel;
}

void require_closed_form_preconditions(const NetworkConfig& cfg) {
  if (cfg.noise_power_w != 0.0)
    throw std::invalid_argument("closed-form rates require zero noise power");
  if (!equal_pathloss(cfg))
    throw std::invalid_argument(
        "closed-form rates require equal pathloss exponents");
}

ClosedConstants closed_constants(const NetworkConfig& cfg,
                                 const std::array<double, 2>& active) {
  ClosedConstants c;
  c.alpha = cfg.tier1.pathloss_exponent;
  std::array<double, 2> w{};
  for (int j = 1; j <= 2; ++j) {
    const TierParams& tj = tier(cfg, j);
    w[j - 1] = tj.density *
               std::pow(tj.tx_power_w / cfg.tier1.tx_power_w, 2.0 / c.alpha);
    c.sum_w += w[j - 1];
    c.sum_paw += active[j - 1] * w[j - 1];
    c.big_d += (1.0 - active[j - 1]) * w[j - 1];
  }
  for (int k = 1; k <= 2; ++k) {
    const TierParams& tk = tier(cfg, k);
    double e = 0.0;
    for (int j = 1; j <= 2; ++j) {
      const TierParams& tj = tier(cfg, j);
      if (tj.density <= 0.0 || active[j - 1] <= 0.0) continue;
      e += active[j - 1] * w[j - 1] *
           z_high_coef(c.alpha, double(tj.antennas),
                       double(tj.antennas) / tk.antennas);
    }
    c.big_e[k - 1] = e;
  }
  return c;
}

double low_regime_term(double alpha, double m_serving, const ClosedConstants& c,
                       double x_cap) {
  if (x_cap <= 0.0) return 0.0;
  const double u = 2.0 * m_serving / (alpha - 2.0) * x_cap * c.sum_paw / c.sum_w;
  if (u < 1e-8) return x_cap * (1.0 - 0.5 * u);  // no active interferers
  return (alpha - 2.0) / (2.0 * m_serving) * c.c1() * std::log1p(u);
}

double high_regime_term(double alpha, double prefactor_w, double big_d,
                        double big_e) {
  if (big_e <= 0.0)
    throw std::domain_error(
        "closed-form rate diverges: no active interferers above the "
        "crossover point");
  const double q = std::pow(4.0, -1.0 / alpha);
  const double u = big_d * q / big_e;
  if (u < 1e-8)  // removable 0*inf form as both tiers saturate
    return 0.5 * alpha * prefactor_w * q / big_e * (1.0 - 0.5 * u);
  return 0.5 * alpha * (prefactor_w / big_d) * std::log1p(u);
}

}  // namespace hetcache::detail

#include "hetcache/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hetcache/quadrature.hpp"
#include "hetcache/specfun.hpp"

namespace hetcache {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Coefficients and exponents of the association kernel for serving tier k:
// exp(-sum_j c_j v^(e_j)) with v = r^2, c_j = pi lambda_j (P_j/P_k)^(2/a_j),
// e_j = a_k/a_j.
struct AssocKernel {
  std::array<double, 2> c{};
  std::array<double, 2> e{};
};

AssocKernel assoc_kernel(const NetworkConfig& cfg, int k) {
  const TierParams& serving = tier(cfg, k);
  AssocKernel ker;
  for (int j = 1; j <= 2; ++j) {
    const TierParams& t = tier(cfg, j);
    const double phat = t.tx_power_w / serving.tx_power_w;
    ker.c[j - 1] =
        kPi * t.density * std::pow(phat, 2.0 / t.pathloss_exponent);
    ker.e[j - 1] = serving.pathloss_exponent / t.pathloss_exponent;
  }
  return ker;
}

double kernel_scale(const AssocKernel& ker) {
  double scale = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 2; ++i)
    if (ker.c[i] > 0.0)
      scale = std::min(scale, std::pow(ker.c[i], -1.0 / ker.e[i]));
  return std::isfinite(scale) ? scale : 1.0;
}

}  // namespace

double association_prob(const NetworkConfig& cfg, int k) {
  const TierParams& t = tier(cfg, k);
  if (t.density <= 0.0) return 0.0;
  const AssocKernel ker = assoc_kernel(cfg, k);
  auto f = [&ker](double v) {
    double expo = 0.0;
    for (int i = 0; i < 2; ++i)
      if (ker.c[i] > 0.0) expo += ker.c[i] * std::pow(v, ker.e[i]);
    return std::exp(-expo);
  };
  const QuadResult q = integrate_half_line(f, kernel_scale(ker));
  if (!q.converged)
    throw std::runtime_error("association_prob: quadrature did not converge");
  return kPi * t.density * q.value;
}

double association_prob_closed(const NetworkConfig& cfg, int k) {
  if (!equal_pathloss(cfg))
    throw std::invalid_argument(
        "association_prob_closed needs equal pathloss exponents");
  const TierParams& serving = tier(cfg, k);
  if (serving.density <= 0.0) return 0.0;
  const double alpha = serving.pathloss_exponent;
  double denom = 0.0;
  for (int j = 1; j <= 2; ++j) {
    const TierParams& t = tier(cfg, j);
    denom += t.density *
             std::pow(t.tx_power_w / serving.tx_power_w, 2.0 / alpha);
  }
  return serving.density / denom;
}

double serving_distance_pdf(const NetworkConfig& cfg, int k, double r) {
  if (r < 0.0) return 0.0;
  const TierParams& t = tier(cfg, k);
  if (t.density <= 0.0)
    throw std::domain_error("serving_distance_pdf: tier has zero density");
  const AssocKernel ker = assoc_kernel(cfg, k);
  const double v = r * r;
  double expo = 0.0;
  for (int i = 0; i < 2; ++i)
    if (ker.c[i] > 0.0) expo += ker.c[i] * std::pow(v, ker.e[i]);
  const double assoc = equal_pathloss(cfg) ? association_prob_closed(cfg, k)
                                           : association_prob(cfg, k);
  return 2.0 * kPi * t.density / assoc * r * std::exp(-expo);
}

double active_prob(const NetworkConfig& cfg, int k, double assoc_prob) {
  const TierParams& t = tier(cfg, k);
  if (t.density <= 0.0 || cfg.user_density <= 0.0 || assoc_prob <= 0.0)
    return 0.0;
  const double load = assoc_prob * cfg.user_density / (3.5 * t.density);
  const double p = 1.0 - std::pow(1.0 + load, -3.5);
  return std::min(std::max(p, 0.0), 1.0);
}

TierStats conventional_stats(const NetworkConfig& cfg) {
  TierStats st;
  for (int k = 1; k <= 2; ++k) {
    st.assoc[k - 1] = equal_pathloss(cfg) ? association_prob_closed(cfg, k)
                                          : association_prob(cfg, k);
    st.active[k - 1] = active_prob(cfg, k, st.assoc[k - 1]);
  }
  return st;
}

double max_power_exclusion_radius(const NetworkConfig& cfg, int serving,
                                  int interfering, double r) {
  if (r <= 0.0) return 0.0;
  const TierParams& ts = tier(cfg, serving);
  const TierParams& tj = tier(cfg, interfering);
  const double phat = tj.tx_power_w / ts.tx_power_w;
  return std::pow(phat, 1.0 / tj.pathloss_exponent) *
         std::pow(r, ts.pathloss_exponent / tj.pathloss_exponent);
}

double laplace_interference(const NetworkConfig& cfg, const LaplaceQuery& q) {
  const TierParams& tj = tier(cfg, q.interfering_tier);
  if (q.s <= 0.0 || tj.density <= 0.0 || q.active_prob <= 0.0) return 1.0;
  const double r0 = q.exclusion_radius;
  if (r0 <= 0.0)
    return laplace_no_exclusion(cfg, q.s, q.interfering_tier, q.active_prob);
  const double alpha = tj.pathloss_exponent;
  const double m = double(tj.antennas);
  const double arg = -q.s * tj.tx_power_w * std::pow(r0, -alpha) / m;
  double zv = hyp2f1(-2.0 / alpha, m, 1.0 - 2.0 / alpha, arg) - 1.0;
  if (zv < 0.0 && zv > -1e-14) zv = 0.0;
  return std::exp(-kPi * q.active_prob * tj.density * r0 * r0 * zv);
}

double laplace_no_exclusion(const NetworkConfig& cfg, double s, int j,
                            double active_prob) {
  const TierParams& tj = tier(cfg, j);
  if (s <= 0.0 || tj.density <= 0.0 || active_prob <= 0.0) return 1.0;
  const double alpha = tj.pathloss_exponent;
  const double m = double(tj.antennas);
  const double coef = gamma_fn(1.0 - 2.0 / alpha) * gamma_fn(m + 2.0 / alpha) /
                      gamma_fn(m);
  return std::exp(-kPi * active_prob * tj.density * coef *
                  std::pow(s * tj.tx_power_w / m, 2.0 / alpha));
}

double laplace_interference_cachemiss(const NetworkConfig& cfg, double s,
                                      int j, double r, double active_prob) {
  if (j == 2) return laplace_no_exclusion(cfg, s, 2, active_prob);
  LaplaceQuery q;
  q.s = s;
  q.serving_tier = 1;
  q.interfering_tier = 1;
  q.serving_distance = r;
  q.exclusion_radius = r;
  q.active_prob = active_prob;
  return laplace_interference(cfg, q);
}

}  // namespace hetcache

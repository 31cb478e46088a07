#include "hetcache/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace hetcache {

namespace {

constexpr double kZSwitch = 0.5;

bool is_nonpos_int(double x) {
  return x <= 0.0 && x == std::nearbyint(x);
}

// 1/Gamma(x), zero at the poles so transformation terms drop out cleanly.
double inv_gamma(double x) {
  if (is_nonpos_int(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

}  // namespace

double gamma_fn(double x) {
  if (is_nonpos_int(x))
    throw std::domain_error("gamma_fn: pole at nonpositive integer");
  return std::tgamma(x);
}

double pochhammer(double a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative order");
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + k;
  return p;
}

double hyp2f1_series(double a, double b, double c, double z) {
  if (is_nonpos_int(c))
    throw std::domain_error("hyp2f1: c is a nonpositive integer");
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < 10000; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    sum += term;
    if (std::fabs(term) <= 1e-16 * std::fabs(sum)) return sum;
  }
  throw std::runtime_error("hyp2f1: series did not converge");
}

double hyp2f1_transformed(double a, double b, double c, double z) {
  if (!(z < 0.0))
    throw std::domain_error("hyp2f1: 1/z expansion needs z < 0");
  // Split a degenerate pair (a - b integral makes both terms singular).
  const double ab = a - b;
  if (std::fabs(ab - std::nearbyint(ab)) < 1e-9) b += 1e-9;

  const double w = 1.0 / z;
  auto inner = [w](double aa, double bb, double cc) {
    if (std::fabs(w) <= kZSwitch) return hyp2f1_series(aa, bb, cc, w);
    // Pfaff map pulls w in (-2, -0.5) back into the series disk.
    return std::pow(1.0 - w, -aa) *
           hyp2f1_series(aa, cc - bb, cc, w / (w - 1.0));
  };

  const double t1 = gamma_fn(c) * std::tgamma(b - a) * inv_gamma(b) *
                    inv_gamma(c - a) * std::pow(-z, -a) *
                    inner(a, a - c + 1.0, a - b + 1.0);
  const double t2 = gamma_fn(c) * std::tgamma(a - b) * inv_gamma(a) *
                    inv_gamma(c - b) * std::pow(-z, -b) *
                    inner(b, b - c + 1.0, b - a + 1.0);
  return t1 + t2;
}

double hyp2f1(double a, double b, double c, double z) {
  if (is_nonpos_int(c))
    throw std::domain_error("hyp2f1: c is a nonpositive integer");
  if (z == 0.0) return 1.0;
  if (is_nonpos_int(a) || is_nonpos_int(b))
    return hyp2f1_series(a, b, c, z);  // terminating polynomial, any z
  if (std::fabs(z) <= kZSwitch) return hyp2f1_series(a, b, c, z);
  if (z < 0.0) return hyp2f1_transformed(a, b, c, z);
  throw std::domain_error("hyp2f1: argument outside supported range");
}

double z_exact(double x, double alpha, double m, double mhat) {
  if (x == 0.0) return 0.0;
  const double arg = -std::expm1(x) / mhat;
  const double zv = hyp2f1(-2.0 / alpha, m, 1.0 - 2.0 / alpha, arg) - 1.0;
  if (zv < 0.0 && zv > -1e-14) return 0.0;  // roundoff at tiny x
  return zv;
}

double z_low(double x, double alpha, double m, double mhat) {
  return 2.0 * (m / mhat) * x / (alpha - 2.0);
}

double z_high_coef(double alpha, double m, double mhat) {
  return gamma_fn(1.0 - 2.0 / alpha) * gamma_fn(m + 2.0 / alpha) /
         (gamma_fn(m) * std::pow(mhat, 2.0 / alpha));
}

double z_high(double x, double alpha, double m, double mhat) {
  return z_high_coef(alpha, m, mhat) * std::exp(2.0 * x / alpha) - 1.0;
}

}  // namespace hetcache

#include "rate_engine.hpp"

#include <cmath>
#include <stdexcept>

#include "hetcache/quadrature.hpp"

namespace hetcache::detail {

double decay_integral(const std::vector<double>& coefs,
                      const std::vector<double>& exps) {
  double scale = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < coefs.size(); ++i)
    if (coefs[i] > 0.0 && std::isfinite(coefs[i]))
      scale = std::min(scale, std::pow(coefs[i], -1.0 / exps[i]));
  if (!std::isfinite(scale))
    throw std::domain_error("decay_integral: integrand does not decay");

  auto f = [&coefs, &exps](double v) {
    double expo = 0.0;
    for (std::size_t i = 0; i < coefs.size(); ++i) {
      if (coefs[i] <= 0.0) continue;
      const double p = std::pow(v, exps[i]);
      if (p > 0.0) expo += coefs[i] * p;
    }
    return std::exp(-expo);
  };
  const QuadResult q = integrate_half_line(f, scale);
  if (!q.converged)
    throw std::runtime_error("decay_integral: quadrature did not converge");
  return q.value;
}

double evaluate_rate(const RateKernel& kernel) {
  std::vector<double> c(kernel.exps.size());
  auto J = [&kernel, &c](double x) {
    kernel.coefs(x, c);
    return decay_integral(c, kernel.exps);
  };

  if (kernel.x_cap <= 0.0) return 0.0;
  if (std::isfinite(kernel.x_cap)) {
    const QuadResult q = integrate(J, 0.0, kernel.x_cap);
    if (!q.converged)
      throw std::runtime_error("evaluate_rate: quadrature did not converge");
    return kernel.prefactor * q.value;
  }

  // Exponent arguments stay below expm1 overflow at this hard ceiling, and
  // every physical kernel has decayed to nothing long before it.
  constexpr double kMaxX = 700.0;
  const double j0 = J(0.0);
  double upper = 4.0;
  while (upper < kMaxX && J(upper) > 1e-12 * j0)
    upper = std::min(upper * 2.0, kMaxX);
  if (J(upper) > 1e-12 * j0)
    throw std::domain_error(
        "evaluate_rate: integrand does not decay (no interference or noise)");

  const QuadResult head = integrate(J, 0.0, upper);
  if (!head.converged)
    throw std::runtime_error("evaluate_rate: quadrature did not converge");
  double total = head.value;
  while (upper < kMaxX) {  // tail windows until negligible
    const double hi = std::min(2.0 * upper, kMaxX);
    const double w = integrate(J, upper, hi).value;
    total += w;
    upper = hi;
    if (w <= 1e-10 * total) break;
  }
  return kernel.prefactor * total;
}

}  // namespace hetcache::detail

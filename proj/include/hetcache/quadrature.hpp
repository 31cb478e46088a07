#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace hetcache {

struct QuadOptions {
  double rel_tol = 1e-8;
  double abs_tol = 1e-14;
  int max_intervals = 4000;
};

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

namespace detail {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK dqk15 constants).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk15(F& f, double a, double b) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  double fv1[7], fv2[7];
  const double fc = f(centr);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::fabs(resk);
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const double absc = hlgth * kXgk[jtw];
    fv1[jtw] = f(centr - absc);
    fv2[jtw] = f(centr + absc);
    const double fsum = fv1[jtw] + fv2[jtw];
    resg += kWg[j] * fsum;
    resk += kWgk[jtw] * fsum;
    resabs += kWgk[jtw] * (std::fabs(fv1[jtw]) + std::fabs(fv2[jtw]));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double absc = hlgth * kXgk[jtwm1];
    fv1[jtwm1] = f(centr - absc);
    fv2[jtwm1] = f(centr + absc);
    const double fsum = fv1[jtwm1] + fv2[jtwm1];
    resk += kWgk[jtwm1] * fsum;
    resabs += kWgk[jtwm1] * (std::fabs(fv1[jtwm1]) + std::fabs(fv2[jtwm1]));
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));
  const double value = resk * hlgth;
  resabs *= std::fabs(hlgth);
  resasc *= std::fabs(hlgth);
  double err = std::fabs((resk - resg) * hlgth);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  err = std::max(err, 50.0 * eps * resabs);
  return {a, b, value, err};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration of f over [a, b]: split the
// worst panel until the summed error estimate meets max(abs_tol, rel_tol * |I|).
template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadOptions& opt = {}) {
  QuadResult out;
  if (a == b) { out.converged = true; return out; }
  std::priority_queue<detail::Panel> panels;
  detail::Panel first = detail::gk15(f, a, b);
  out.evaluations = 15;
  double total = first.value;
  double err = first.error;
  panels.push(first);
  int n = 1;
  while (err > std::max(opt.abs_tol, opt.rel_tol * std::fabs(total)) &&
         n < opt.max_intervals) {
    const detail::Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) {  // interval at machine resolution
      panels.push(worst);
      break;
    }
    const detail::Panel left = detail::gk15(f, worst.a, mid);
    const detail::Panel right = detail::gk15(f, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++n;
  }
  out.value = total;
  out.error_estimate = err;
  out.converged = err <= std::max(opt.abs_tol, opt.rel_tol * std::fabs(total));
  return out;
}

// Integrates f over [0, inf) via v = scale * t/(1-t). `scale` should be the
// characteristic decay length of f so the mapped integrand is well resolved.
template <class F>
QuadResult integrate_half_line(F&& f, double scale, const QuadOptions& opt = {}) {
  if (!(scale > 0.0) || !std::isfinite(scale)) scale = 1.0;
  auto mapped = [&f, scale](double t) {
    const double om = 1.0 - t;
    const double v = scale * t / om;
    if (!std::isfinite(v)) return 0.0;
    const double fv = f(v);
    return fv == 0.0 ? 0.0 : fv * scale / (om * om);
  };
  return integrate(mapped, 0.0, 1.0, opt);
}

}  // namespace hetcache

#pragma once

namespace hetcache {

// Gamma function; throws std::domain_error at the poles (x = 0, -1, -2, ...).
double gamma_fn(double x);

// Rising factorial (a)_n.
double pochhammer(double a, int n);

// Gauss hypergeometric 2F1(a, b; c; z) for z <= 0.5 (any z when a or b is a
// nonpositive integer, where the series terminates).  Accuracy target 1e-10
// relative over the parameter ranges used by the interference kernels.
double hyp2f1(double a, double b, double c, double z);

// Building blocks of hyp2f1, exposed so tests can check their overlap region:
// the direct power series (converges for |z| < 1, used for |z| <= 0.5) and the
// two-term 1/z expansion (used for z < -0.5).
double hyp2f1_series(double a, double b, double c, double z);
double hyp2f1_transformed(double a, double b, double c, double z);

// Interference shape factor Z(x) appearing in the ergodic-rate integrand and
// its two regime approximations.  Arguments: x is the rate variable in nats,
// alpha the interfering tier's pathloss exponent, m its antenna count, and
// mhat the ratio of interferer to serving-tier antenna counts.
double z_exact(double x, double alpha, double m, double mhat);
double z_low(double x, double alpha, double m, double mhat);
double z_high(double x, double alpha, double m, double mhat);

// Coefficient of e^{2x/alpha} in the high-rate regime of Z.
double z_high_coef(double alpha, double m, double mhat);

}  // namespace hetcache

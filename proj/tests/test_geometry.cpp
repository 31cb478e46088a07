#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hetcache/geometry.hpp"
#include "hetcache/quadrature.hpp"
#include "hetcache/specfun.hpp"
#include "reference_values.hpp"

using namespace hetcache;
namespace ref = hetcache::testref;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("association probabilities: quadrature agrees with the closed ratio") {
  NetworkConfig cfg = default_config();
  for (double ratio : {1.0, 10.0, 50.0, 100.0}) {
    cfg.tier2.density = ratio * cfg.tier1.density;
    for (int k = 1; k <= 2; ++k) {
      const double closed = association_prob_closed(cfg, k);
      const double quad = association_prob(cfg, k);
      CHECK(quad == doctest::Approx(closed).epsilon(1e-9));
    }
  }
}

TEST_CASE("association reference value and completeness") {
  const NetworkConfig cfg = default_config();
  CHECK(association_prob_closed(cfg, 1) ==
        doctest::Approx(ref::kAssoc1Ratio50).epsilon(1e-12));
  CHECK(association_prob_closed(cfg, 1) + association_prob_closed(cfg, 2) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(association_prob(cfg, 1) + association_prob(cfg, 2) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("association with unequal pathloss exponents") {
  NetworkConfig cfg = default_config();
  cfg.tier2.pathloss_exponent = 4.2;
  CHECK_THROWS_AS(association_prob_closed(cfg, 1), std::invalid_argument);
  const double p1 = association_prob(cfg, 1);
  const double p2 = association_prob(cfg, 2);
  CHECK(p1 > 0.0);
  CHECK(p2 > 0.0);
  CHECK(p1 + p2 == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("degenerate tiers") {
  NetworkConfig cfg = default_config();
  cfg.tier2.density = 0.0;
  CHECK(association_prob_closed(cfg, 2) == 0.0);
  CHECK(association_prob(cfg, 2) == 0.0);
  CHECK(association_prob_closed(cfg, 1) == doctest::Approx(1.0));
  CHECK(association_prob(cfg, 1) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("serving distance pdf integrates to one") {
  NetworkConfig cfg = default_config();
  auto total = [&cfg](int k) {
    auto f = [&cfg, k](double r) { return serving_distance_pdf(cfg, k, r); };
    const double scale =
        1.0 / std::sqrt(kPi * (cfg.tier1.density + cfg.tier2.density));
    return integrate_half_line(f, scale).value;
  };
  CHECK(total(1) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(total(2) == doctest::Approx(1.0).epsilon(1e-6));
  cfg.tier2.pathloss_exponent = 4.2;
  CHECK(total(1) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(total(2) == doctest::Approx(1.0).epsilon(1e-6));

  CHECK(serving_distance_pdf(cfg, 1, -1.0) == 0.0);
  cfg.tier2.density = 0.0;
  CHECK_THROWS_AS(serving_distance_pdf(cfg, 2, 100.0), std::domain_error);
}

TEST_CASE("activity probability follows the 3.5-parameter load model") {
  NetworkConfig cfg = default_config();
  cfg.user_density = 10.0 * cfg.tier1.density;
  CHECK(active_prob(cfg, 1, 0.5) ==
        doctest::Approx(ref::kActiveProbHalf10).epsilon(1e-12));
  CHECK(active_prob(cfg, 1, 0.0) == 0.0);
  cfg.user_density = 0.0;
  CHECK(active_prob(cfg, 1, 0.5) == 0.0);
  cfg = default_config();
  cfg.tier2.density = 0.0;
  CHECK(active_prob(cfg, 2, 0.5) == 0.0);
  // Heavier load means more active nodes, capped at one.
  cfg = default_config();
  const double light = active_prob(cfg, 1, 0.2);
  const double heavy = active_prob(cfg, 1, 0.9);
  CHECK(light < heavy);
  CHECK(heavy < 1.0);
}

TEST_CASE("conventional-mode tier statistics at the baseline density ratio") {
  const TierStats st = conventional_stats(default_config());
  CHECK(st.assoc[0] == doctest::Approx(ref::kAssoc1Ratio50).epsilon(1e-12));
  CHECK(st.assoc[1] ==
        doctest::Approx(1.0 - ref::kAssoc1Ratio50).epsilon(1e-12));
  CHECK(st.active[0] ==
        doctest::Approx(ref::kConvActive1Ratio50).epsilon(1e-10));
  CHECK(st.active[1] ==
        doctest::Approx(ref::kConvActive2Ratio50).epsilon(1e-10));
}

TEST_CASE("max-power exclusion radius") {
  const NetworkConfig cfg = default_config();
  // Same tier: the serving node itself is the closest possible member.
  CHECK(max_power_exclusion_radius(cfg, 1, 1, 137.0) == doctest::Approx(137.0));
  CHECK(max_power_exclusion_radius(cfg, 2, 2, 55.0) == doctest::Approx(55.0));
  // Cross tier with equal exponents: scaled by the power ratio.
  const double phat21 =
      cfg.tier2.tx_power_w / cfg.tier1.tx_power_w;  // < 1
  CHECK(max_power_exclusion_radius(cfg, 1, 2, 100.0) ==
        doctest::Approx(std::pow(phat21, 1.0 / 3.7) * 100.0).epsilon(1e-12));
  CHECK(max_power_exclusion_radius(cfg, 1, 2, 100.0) < 100.0);
  CHECK(max_power_exclusion_radius(cfg, 2, 1, 100.0) > 100.0);
  CHECK(max_power_exclusion_radius(cfg, 1, 2, 0.0) == 0.0);

  NetworkConfig uneq = default_config();
  uneq.tier2.pathloss_exponent = 4.2;
  const double r = 80.0;
  const double want = std::pow(phat21, 1.0 / 4.2) * std::pow(r, 3.7 / 4.2);
  CHECK(max_power_exclusion_radius(uneq, 1, 2, r) ==
        doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("interference transform: limits and monotonicity") {
  const NetworkConfig cfg = default_config();
  LaplaceQuery q;
  q.serving_tier = 1;
  q.interfering_tier = 1;
  q.serving_distance = 200.0;
  q.exclusion_radius = 200.0;
  q.active_prob = 1.0;

  q.s = 0.0;
  CHECK(laplace_interference(cfg, q) == 1.0);

  const double s_unit =
      4.0 * std::pow(200.0, 3.7) / cfg.tier1.tx_power_w;  // arg = -1 at r0
  q.s = s_unit;
  const double base = laplace_interference(cfg, q);
  CHECK(base > 0.0);
  CHECK(base < 1.0);

  q.s = 2.0 * s_unit;
  const double stronger = laplace_interference(cfg, q);
  CHECK(stronger < base);

  q.s = s_unit;
  q.exclusion_radius = 300.0;
  CHECK(laplace_interference(cfg, q) > base);

  q.exclusion_radius = 200.0;
  q.active_prob = 0.5;
  CHECK(laplace_interference(cfg, q) > base);

  NetworkConfig empty = default_config();
  empty.tier2.density = 0.0;
  LaplaceQuery q2 = q;
  q2.interfering_tier = 2;
  q2.s = 1.0;
  CHECK(laplace_interference(empty, q2) == 1.0);
}

TEST_CASE("interference transform matches direct annulus quadrature") {
  const NetworkConfig cfg = default_config();
  struct Case {
    int j;
    double r0, s_scale, pa;
  };
  const Case cases[] = {{1, 150.0, 0.8, 0.7}, {1, 300.0, 3.0, 1.0},
                        {2, 40.0, 1.5, 0.45}};
  for (const Case& c : cases) {
    const TierParams& tj = tier(cfg, c.j);
    const double m = double(tj.antennas);
    const double alpha = tj.pathloss_exponent;
    const double s = c.s_scale * m * std::pow(c.r0, alpha) / tj.tx_power_w;

    LaplaceQuery q;
    q.s = s;
    q.interfering_tier = c.j;
    q.exclusion_radius = c.r0;
    q.active_prob = c.pa;
    const double got = laplace_interference(cfg, q);

    auto shell = [&](double u) {
      const double r = c.r0 + u;
      const double snr = s * tj.tx_power_w * std::pow(r, -alpha) / m;
      return (1.0 - std::pow(1.0 + snr, -m)) * r;
    };
    const QuadResult inner = integrate_half_line(shell, c.r0);
    REQUIRE(inner.converged);
    const double want =
        std::exp(-2.0 * kPi * c.pa * tj.density * inner.value);
    CHECK(got == doctest::Approx(want).epsilon(1e-6));
    CHECK(got > 0.05);
    CHECK(got < 0.98);
  }
}

TEST_CASE("vanishing exclusion radius reproduces the closed no-exclusion form") {
  const NetworkConfig cfg = default_config();
  // Pick s so the no-exclusion transform sits mid-range.
  const double coef = gamma_fn(1.0 - 2.0 / 3.7) * gamma_fn(4.0 + 2.0 / 3.7) /
                      gamma_fn(4.0);
  const double target = 1.0;  // exponent magnitude
  const double sP4 =
      std::pow(target / (kPi * cfg.tier1.density * coef), 3.7 / 2.0);
  const double s = 4.0 * sP4 / cfg.tier1.tx_power_w;

  const double closed = laplace_no_exclusion(cfg, s, 1, 1.0);
  CHECK(closed == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));

  LaplaceQuery q;
  q.s = s;
  q.interfering_tier = 1;
  q.exclusion_radius = 1e-6;
  q.active_prob = 1.0;
  CHECK(laplace_interference(cfg, q) ==
        doctest::Approx(closed).epsilon(1e-6));
  // Zero radius dispatches to the closed form exactly.
  q.exclusion_radius = 0.0;
  CHECK(laplace_interference(cfg, q) == closed);
}

TEST_CASE("cache-miss interference dispatch") {
  const NetworkConfig cfg = default_config();
  const double s = 1e7;
  const double r = 180.0;
  CHECK(laplace_interference_cachemiss(cfg, s, 2, r, 0.3) ==
        laplace_no_exclusion(cfg, s, 2, 0.3));
  LaplaceQuery q;
  q.s = s;
  q.serving_tier = 1;
  q.interfering_tier = 1;
  q.serving_distance = r;
  q.exclusion_radius = r;
  q.active_prob = 0.9;
  CHECK(laplace_interference_cachemiss(cfg, s, 1, r, 0.9) ==
        laplace_interference(cfg, q));
}

TEST_CASE("shell antiderivative identity behind the exclusion kernel") {
  // d/dv [ v (1 - 2F1(-2/a, m; 1-2/a; -c v^(-a/2))) ]
  //   = 1 - (1 + c v^(-a/2))^(-m)
  struct Case {
    double alpha, m, c, v;
  };
  for (const Case& cs : {Case{3.7, 4.0, 2.0, 1.5}, Case{4.0, 1.0, 0.7, 0.8},
                         Case{3.7, 4.0, 40.0, 2.5}}) {
    auto g = [&cs](double v) {
      const double a = cs.alpha;
      return v * (1.0 - hyp2f1(-2.0 / a, cs.m, 1.0 - 2.0 / a,
                               -cs.c * std::pow(v, -a / 2.0)));
    };
    const double h = 1e-4 * cs.v;
    const double deriv = (g(cs.v + h) - g(cs.v - h)) / (2.0 * h);
    const double want =
        1.0 - std::pow(1.0 + cs.c * std::pow(cs.v, -cs.alpha / 2.0), -cs.m);
    CHECK(deriv == doctest::Approx(want).epsilon(2e-5));
  }
}

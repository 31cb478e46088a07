#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hetcache/rates_conventional.hpp"
#include "hetcache/units.hpp"
#include "reference_values.hpp"

using namespace hetcache;
namespace ref = hetcache::testref;

TEST_CASE("baseline per-user rates and area throughput") {
  const RateReport rep = ase_conventional(default_config(), Method::integral);
  CHECK(rep.mean_rate_tier1 ==
        doctest::Approx(ref::kConvMacroRateRatio50).epsilon(1e-6));
  CHECK(rep.mean_rate_tier2 ==
        doctest::Approx(ref::kConvPicoRateRatio50).epsilon(1e-6));
  CHECK(rep.ase_nats * ref::kMacroCellArea ==
        doctest::Approx(ref::kConvAsePerCellRatio50).epsilon(1e-6));
  CHECK(rep.method == Method::integral);
  CHECK_FALSE(rep.std_error.has_value());
}

TEST_CASE("single-tier oracle") {
  NetworkConfig cfg = default_config();
  cfg.tier2.density = 0.0;
  cfg.tier1.antennas = 1;
  const RateReport rep = ase_conventional(cfg, Method::integral);
  CHECK(rep.mean_rate_tier1 ==
        doctest::Approx(ref::kSingleTierRate).epsilon(1e-6));
  CHECK(rep.mean_rate_tier2 == 0.0);

  // Forcing every node active removes the load thinning.
  TierStats st;
  st.assoc = {1.0, 0.0};
  st.active = {1.0, 1.0};
  CHECK(mean_rate_macro_integral(cfg, st) ==
        doctest::Approx(ref::kSingleTierRateAllActive).epsilon(1e-6));
}

TEST_CASE("pico rate saturates at the backhaul cap") {
  NetworkConfig cfg = default_config();
  const TierStats st = conventional_stats(cfg);
  const double capped = mean_rate_pico_integral(cfg, st);
  CHECK(capped <= cfg.backhaul_nats + 1e-12);
  CHECK(capped > 0.0);

  cfg.backhaul_nats *= 2.0;
  const double wider = mean_rate_pico_integral(cfg, st);
  CHECK(wider > capped);

  // Far beyond the SINR distribution's reach the cap stops binding (up to
  // the e^(-2x/alpha) coverage tail left above 50 nats).
  cfg.backhaul_nats = 50.0;
  const double open1 = mean_rate_pico_integral(cfg, st);
  cfg.backhaul_nats = 100.0;
  const double open2 = mean_rate_pico_integral(cfg, st);
  CHECK(open2 == doctest::Approx(open1).epsilon(1e-9));

  cfg.backhaul_nats = 0.0;
  CHECK(mean_rate_pico_integral(cfg, st) == 0.0);
}

TEST_CASE("closed forms track the integrals at moderate densities") {
  NetworkConfig cfg = default_config();
  for (double ratio : {10.0, 50.0, 100.0}) {
    cfg.tier2.density = ratio * cfg.tier1.density;
    const double exact = ase_conventional(cfg, Method::integral).ase_nats;
    const double approx = ase_conventional(cfg, Method::closed_form).ase_nats;
    CAPTURE(ratio);
    CHECK(std::fabs(approx - exact) / exact < 0.05);
  }
  // At equal densities the high-rate regime overshoots just above the
  // crossover and the macro approximation degrades to ~7%; keep it bounded.
  cfg.tier2.density = cfg.tier1.density;
  const double exact = ase_conventional(cfg, Method::integral).ase_nats;
  const double approx = ase_conventional(cfg, Method::closed_form).ase_nats;
  CHECK(std::fabs(approx - exact) / exact < 0.08);
}

TEST_CASE("area spectral efficiency grows with pico density") {
  NetworkConfig cfg = default_config();
  double prev = 0.0;
  for (double ratio : {10.0, 20.0, 50.0}) {
    cfg.tier2.density = ratio * cfg.tier1.density;
    const double ase = ase_conventional(cfg, Method::integral).ase_nats;
    CHECK(ase > prev);
    prev = ase;
  }
}

TEST_CASE("macro-only network") {
  NetworkConfig cfg = default_config();
  cfg.tier2.density = 0.0;
  const RateReport rep = ase_conventional(cfg, Method::integral);
  const TierStats st = conventional_stats(cfg);
  CHECK(rep.mean_rate_tier2 == 0.0);
  CHECK(rep.ase_nats ==
        doctest::Approx(st.active[0] * cfg.tier1.density * 4.0 *
                        rep.mean_rate_tier1));
  // Closed form degrades gracefully to the same structure.
  const RateReport closed = ase_conventional(cfg, Method::closed_form);
  CHECK(closed.mean_rate_tier2 == 0.0);
  CHECK(closed.ase_nats ==
        doctest::Approx(rep.ase_nats).epsilon(0.08));
}

TEST_CASE("noise shaves the interference-limited rate slightly") {
  NetworkConfig cfg = default_config();
  const double clean = ase_conventional(cfg, Method::integral).ase_nats;
  cfg.noise_power_w = units::thermal_noise_watts(20e6, 9.0);
  const double noisy = ase_conventional(cfg, Method::integral).ase_nats;
  CHECK(noisy < clean);
  CHECK((clean - noisy) / clean < 1e-2);
}

TEST_CASE("method gating") {
  NetworkConfig cfg = default_config();
  CHECK_THROWS_AS(ase_conventional(cfg, Method::monte_carlo),
                  std::invalid_argument);
  cfg.noise_power_w = 1e-13;
  CHECK_THROWS_AS(ase_conventional(cfg, Method::closed_form),
                  std::invalid_argument);
  cfg = default_config();
  cfg.tier2.pathloss_exponent = 4.2;
  CHECK_THROWS_AS(ase_conventional(cfg, Method::closed_form),
                  std::invalid_argument);
  CHECK(ase_conventional(cfg, Method::integral).ase_nats > 0.0);
  cfg = default_config();
  cfg.tier1.density = 0.0;
  CHECK_THROWS_AS(ase_conventional(cfg, Method::integral), ConfigError);
}

TEST_CASE("method names") {
  CHECK(std::string(method_name(Method::integral)) == "integral");
  CHECK(std::string(method_name(Method::closed_form)) == "closed_form");
  CHECK(std::string(method_name(Method::monte_carlo)) == "monte_carlo");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "hetcache/units.hpp"
#include "reference_values.hpp"

using namespace hetcache;

TEST_CASE("macro cell area matches the frozen reference") {
  CHECK(units::kMacroCellArea ==
        doctest::Approx(testref::kMacroCellArea).epsilon(1e-12));
}

TEST_CASE("dBm to watts") {
  CHECK(units::dbm_to_watts(0.0) == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(units::dbm_to_watts(30.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(units::dbm_to_watts(21.0) / units::dbm_to_watts(46.0) ==
        doctest::Approx(testref::kPowerRatio).epsilon(1e-12));
  for (double dbm : {-90.0, 0.0, 21.0, 46.0})
    CHECK(units::watts_to_dbm(units::dbm_to_watts(dbm)) ==
          doctest::Approx(dbm).epsilon(1e-12));
  CHECK_THROWS_AS(units::watts_to_dbm(0.0), std::domain_error);
  CHECK_THROWS_AS(units::watts_to_dbm(-1.0), std::domain_error);
}

TEST_CASE("density unit round trip") {
  CHECK(units::per_macro_cell_to_per_m2(1.0) ==
        doctest::Approx(1.0 / testref::kMacroCellArea).epsilon(1e-12));
  for (double n : {0.5, 1.0, 50.0, 1234.5})
    CHECK(units::per_m2_to_per_macro_cell(units::per_macro_cell_to_per_m2(n)) ==
          doctest::Approx(n).epsilon(1e-12));
}

TEST_CASE("thermal noise floor") {
  // -174 dBm/Hz + 10log10(20e6) + 9 dB ~= -91.99 dBm.
  const double w = units::thermal_noise_watts(20e6, 9.0);
  CHECK(units::watts_to_dbm(w) ==
        doctest::Approx(-174.0 + 10.0 * std::log10(20e6) + 9.0).epsilon(1e-9));
  CHECK(units::thermal_noise_watts(40e6, 9.0) ==
        doctest::Approx(2.0 * w).epsilon(1e-12));
}

TEST_CASE("rate conversions") {
  using units::RateUnit;
  // 10 Mbps over 20 MHz = 0.5 bit/s/Hz.
  CHECK(units::convert_rate(10e6, RateUnit::bits_per_s,
                            RateUnit::bits_per_s_per_hz, 20e6) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(units::convert_rate(10e6, RateUnit::bits_per_s,
                            RateUnit::nats_per_s_per_hz, 20e6) ==
        doctest::Approx(testref::kBackhaulNats).epsilon(1e-12));
  CHECK(units::convert_rate(1.0, RateUnit::nats_per_s_per_hz,
                            RateUnit::nats_per_s_per_hz) == 1.0);
  CHECK(units::convert_rate(units::convert_rate(0.7, RateUnit::nats_per_s_per_hz,
                                                RateUnit::bits_per_s, 20e6),
                            RateUnit::bits_per_s, RateUnit::nats_per_s_per_hz,
                            20e6) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK_THROWS_AS(units::convert_rate(1.0, RateUnit::bits_per_s,
                                      RateUnit::nats_per_s_per_hz),
                  std::invalid_argument);
  CHECK(units::nats_to_bits(units::bits_to_nats(3.25)) ==
        doctest::Approx(3.25).epsilon(1e-12));
  CHECK(units::bits_to_nats(1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

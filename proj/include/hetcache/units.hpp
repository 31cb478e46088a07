#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hetcache::units {

// Reference cell used for the "n per macro cell" density idiom: a disc of
// radius 500 m, area pi * 500^2 m^2.
inline constexpr double kMacroCellRadius = 500.0;
inline constexpr double kMacroCellArea =
    std::numbers::pi * kMacroCellRadius * kMacroCellRadius;

inline double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

inline double watts_to_dbm(double watts) {
  if (watts <= 0.0) throw std::domain_error("watts_to_dbm: power must be positive");
  return 10.0 * std::log10(watts * 1e3);
}

inline double per_macro_cell_to_per_m2(double n) { return n / kMacroCellArea; }
inline double per_m2_to_per_macro_cell(double d) { return d * kMacroCellArea; }

// Thermal noise floor (-174 dBm/Hz) over `bandwidth_hz`, plus receiver noise figure.
inline double thermal_noise_watts(double bandwidth_hz, double noise_figure_db) {
  const double dbm = -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
  return dbm_to_watts(dbm);
}

enum class RateUnit { nats_per_s_per_hz, bits_per_s_per_hz, bits_per_s };

// Exact ln(2) scaling between nat and bit spectral efficiencies; bandwidth
// scaling only when an absolute bit rate is requested.
inline double convert_rate(double value, RateUnit from, RateUnit to,
                           double bandwidth_hz = 0.0) {
  if (from == to) return value;
  const bool needs_bw = from == RateUnit::bits_per_s || to == RateUnit::bits_per_s;
  if (needs_bw && bandwidth_hz <= 0.0)
    throw std::invalid_argument("convert_rate: bits_per_s requires a positive bandwidth");
  // Normalize to bits/s/Hz, then convert out.
  double bps_hz = value;
  switch (from) {
    case RateUnit::nats_per_s_per_hz: bps_hz = value / std::numbers::ln2; break;
    case RateUnit::bits_per_s_per_hz: break;
    case RateUnit::bits_per_s:        bps_hz = value / bandwidth_hz; break;
  }
  switch (to) {
    case RateUnit::nats_per_s_per_hz: return bps_hz * std::numbers::ln2;
    case RateUnit::bits_per_s_per_hz: return bps_hz;
    case RateUnit::bits_per_s:        return bps_hz * bandwidth_hz;
  }
  throw std::invalid_argument("convert_rate: unknown unit pair");
}

inline double nats_to_bits(double nats) { return nats / std::numbers::ln2; }
inline double bits_to_nats(double bits) { return bits * std::numbers::ln2; }

}  // namespace hetcache::units

#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace hetcache {

// One base-station tier of the two-tier network.
struct TierParams {
  double density = 0.0;            // nodes per m^2
  double tx_power_w = 0.0;
  int antennas = 1;
  double pathloss_exponent = 0.0;  // must exceed 2
};

// Zipf-popularity file catalog with a top-N cache at every helper.
// cache_files may be fractional: solvers treat cache capacity as continuous.
struct ZipfCatalog {
  long long catalog_size = 0;  // number of files
  double skew = 0.0;
  double cache_files = 0.0;    // files cached per helper, in [0, catalog_size]
};

enum class NetworkMode { conventional, cached };

struct NetworkConfig {
  TierParams tier1;  // macro tier
  TierParams tier2;  // pico tier (conventional) or cache helper tier
  double user_density = 0.0;   // per m^2
  double noise_power_w = 0.0;  // 0 disables thermal noise
  double backhaul_nats = 0.0;  // pico rate cap, nats/s/Hz; ignored in cached mode
  double bandwidth_hz = 20e6;  // only for unit conversion
  NetworkMode mode = NetworkMode::conventional;
  ZipfCatalog catalog;         // cached mode only
};

// Per-tier quantities normalized by the serving tier's values.
// Index 0 holds tier 1, index 1 holds tier 2; the serving entry is 1 exactly.
struct NormalizedParams {
  std::array<double, 2> mhat{};
  std::array<double, 2> phat{};
  std::array<double, 2> ahat{};
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool ok() const { return violations.empty(); }
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const TierParams& tier(const NetworkConfig& cfg, int k);

ValidationReport validate(const NetworkConfig& cfg);

// Throws ConfigError listing every violation from validate().
void require_valid(const NetworkConfig& cfg);

NormalizedParams normalize(const NetworkConfig& cfg, int serving_tier);

bool equal_pathloss(const NetworkConfig& cfg);

// Baseline parameter set used throughout: macro density 1 per macro-cell
// area (radius 500 m), 50 users per macro cell, 46/21 dBm, 4/1 antennas,
// pathloss 3.7, 10 Mbps pico backhaul over 20 MHz, 1e5-file catalog with
// skew 0.8 and 1000 files cached.
NetworkConfig default_config();

// JSON ingestion.  Starts from default_config() and overrides any key
// present; unknown keys produce warnings.  Layout:
//   {
//     "mode": "conventional" | "cached",
//     "tier1": {"density_per_macro_cell": 1.0,      // or "density_per_m2"
//               "power_dbm": 46, "antennas": 4, "alpha": 3.7},
//     "tier2": {...},
//     "user_density_per_macro_cell": 50,            // or "user_density_per_m2"
//     "backhaul_mbps": 10,
//     "bandwidth_mhz": 20,
//     "noise": {"enabled": false, "figure_db": 9},
//     "catalog": {"size": 100000, "skew": 0.8,
//                 "cache_files": 1000}               // or "eta"
//   }
NetworkConfig config_from_json(const std::string& json_text,
                               std::vector<std::string>* warnings = nullptr);
NetworkConfig load_config_file(const std::string& path,
                               std::vector<std::string>* warnings = nullptr);

}  // namespace hetcache

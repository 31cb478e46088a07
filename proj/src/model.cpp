#include "hetcache/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hetcache/units.hpp"
#include "json.hpp"

namespace hetcache {

using namespace units;

const TierParams& tier(const NetworkConfig& cfg, int k) {
  if (k == 1) return cfg.tier1;
  if (k == 2) return cfg.tier2;
  throw std::out_of_range("tier index must be 1 or 2");
}

ValidationReport validate(const NetworkConfig& cfg) {
  ValidationReport rep;
  auto bad = [&rep](const std::string& msg) { rep.violations.push_back(msg); };

  if (!(cfg.tier1.density > 0.0)) bad("tier-1 density must be positive");
  if (cfg.tier2.density < 0.0) bad("tier-2 density must be nonnegative");
  for (int k = 1; k <= 2; ++k) {
    const TierParams& t = tier(cfg, k);
    const std::string tag = "tier-" + std::to_string(k) + " ";
    if (!(t.tx_power_w > 0.0)) bad(tag + "transmit power must be positive");
    if (t.antennas < 1) bad(tag + "antenna count must be at least 1");
    if (!(t.pathloss_exponent > 2.0))
      bad(tag + "pathloss exponent must exceed 2");
  }
  if (cfg.tier2.antennas != 1) bad("tier-2 antennas must equal 1");
  if (cfg.user_density < 0.0) bad("user density must be nonnegative");
  if (cfg.backhaul_nats < 0.0) bad("backhaul capacity must be nonnegative");
  if (!(cfg.bandwidth_hz > 0.0)) bad("bandwidth must be positive");
  if (cfg.noise_power_w < 0.0) bad("noise power must be nonnegative");
  if (cfg.mode == NetworkMode::cached) {
    if (cfg.catalog.catalog_size < 1) bad("catalog size must be at least 1");
    if (cfg.catalog.skew < 0.0) bad("catalog skew must be nonnegative");
    if (cfg.catalog.cache_files < 0.0 ||
        cfg.catalog.cache_files > double(cfg.catalog.catalog_size))
      bad("cache size must lie in [0, catalog size]");
  }

  if (cfg.user_density < cfg.tier1.antennas * cfg.tier1.density)
    rep.warnings.push_back(
        "user density below antennas-per-macro times macro density; "
        "the full-load assumption behind the rate model is strained");
  return rep;
}

void require_valid(const NetworkConfig& cfg) {
  const ValidationReport rep = validate(cfg);
  if (rep.ok()) return;
  std::string msg = "invalid configuration:";
  for (const std::string& v : rep.violations) msg += "\n  - " + v;
  throw ConfigError(msg);
}

NormalizedParams normalize(const NetworkConfig& cfg, int serving_tier) {
  const TierParams& serving = tier(cfg, serving_tier);
  NormalizedParams out;
  for (int j = 1; j <= 2; ++j) {
    const TierParams& t = tier(cfg, j);
    out.mhat[j - 1] = double(t.antennas) / serving.antennas;
    out.phat[j - 1] = t.tx_power_w / serving.tx_power_w;
    out.ahat[j - 1] = t.pathloss_exponent / serving.pathloss_exponent;
  }
  out.mhat[serving_tier - 1] = 1.0;
  out.phat[serving_tier - 1] = 1.0;
  out.ahat[serving_tier - 1] = 1.0;
  return out;
}

bool equal_pathloss(const NetworkConfig& cfg) {
  return cfg.tier1.pathloss_exponent == cfg.tier2.pathloss_exponent;
}

NetworkConfig default_config() {
  NetworkConfig cfg;
  cfg.tier1 = {per_macro_cell_to_per_m2(1.0), dbm_to_watts(46.0), 4, 3.7};
  cfg.tier2 = {per_macro_cell_to_per_m2(50.0), dbm_to_watts(21.0), 1, 3.7};
  cfg.user_density = per_macro_cell_to_per_m2(50.0);
  cfg.noise_power_w = 0.0;
  cfg.backhaul_nats = convert_rate(10e6, RateUnit::bits_per_s,
                                   RateUnit::nats_per_s_per_hz, 20e6);
  cfg.bandwidth_hz = 20e6;
  cfg.mode = NetworkMode::conventional;
  cfg.catalog = {100000, 0.8, 1000.0};
  return cfg;
}

namespace {

using nlohmann::json;

void warn_unknown(const json& obj, std::initializer_list<const char*> known,
                  const std::string& scope, std::vector<std::string>* warnings) {
  if (!warnings) return;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool found = false;
    for (const char* k : known)
      if (it.key() == k) { found = true; break; }
    if (!found) warnings->push_back("unknown config key " + scope + it.key());
  }
}

// Reads a quantity configurable either per macro-cell area or per m^2.
// Returns true when either key was present.
bool read_density(const json& obj, const std::string& per_cell_key,
                  const std::string& per_m2_key, double* out) {
  const bool has_cell = obj.contains(per_cell_key);
  const bool has_m2 = obj.contains(per_m2_key);
  if (has_cell && has_m2)
    throw ConfigError("config sets both " + per_cell_key + " and " + per_m2_key);
  if (has_cell) *out = per_macro_cell_to_per_m2(obj.at(per_cell_key).get<double>());
  if (has_m2) *out = obj.at(per_m2_key).get<double>();
  return has_cell || has_m2;
}

void read_tier(const json& obj, const std::string& scope, TierParams* t,
               std::vector<std::string>* warnings) {
  warn_unknown(obj, {"density_per_macro_cell", "density_per_m2", "power_dbm",
                     "antennas", "alpha"},
               scope, warnings);
  read_density(obj, "density_per_macro_cell", "density_per_m2", &t->density);
  if (obj.contains("power_dbm"))
    t->tx_power_w = dbm_to_watts(obj.at("power_dbm").get<double>());
  if (obj.contains("antennas")) t->antennas = obj.at("antennas").get<int>();
  if (obj.contains("alpha"))
    t->pathloss_exponent = obj.at("alpha").get<double>();
}

}  // namespace

NetworkConfig config_from_json(const std::string& json_text,
                               std::vector<std::string>* warnings) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be a JSON object");

  NetworkConfig cfg = default_config();
  try {
    warn_unknown(root,
                 {"mode", "tier1", "tier2", "user_density_per_macro_cell",
                  "user_density_per_m2", "backhaul_mbps", "bandwidth_mhz",
                  "noise", "catalog"},
                 "", warnings);

    if (root.contains("mode")) {
      const std::string mode = root.at("mode").get<std::string>();
      if (mode == "conventional") cfg.mode = NetworkMode::conventional;
      else if (mode == "cached") cfg.mode = NetworkMode::cached;
      else throw ConfigError("mode must be \"conventional\" or \"cached\"");
    }
    if (root.contains("tier1"))
      read_tier(root.at("tier1"), "tier1.", &cfg.tier1, warnings);
    if (root.contains("tier2"))
      read_tier(root.at("tier2"), "tier2.", &cfg.tier2, warnings);
    read_density(root, "user_density_per_macro_cell", "user_density_per_m2",
                 &cfg.user_density);
    if (root.contains("bandwidth_mhz"))
      cfg.bandwidth_hz = root.at("bandwidth_mhz").get<double>() * 1e6;
    if (root.contains("backhaul_mbps"))
      cfg.backhaul_nats =
          convert_rate(root.at("backhaul_mbps").get<double>() * 1e6,
                       RateUnit::bits_per_s, RateUnit::nats_per_s_per_hz,
                       cfg.bandwidth_hz);
    if (root.contains("noise")) {
      const json& noise = root.at("noise");
      warn_unknown(noise, {"enabled", "figure_db"}, "noise.", warnings);
      const bool enabled =
          noise.contains("enabled") && noise.at("enabled").get<bool>();
      const double nf = noise.contains("figure_db")
                            ? noise.at("figure_db").get<double>()
                            : 9.0;
      cfg.noise_power_w =
          enabled ? thermal_noise_watts(cfg.bandwidth_hz, nf) : 0.0;
    }
    if (root.contains("catalog")) {
      const json& cat = root.at("catalog");
      warn_unknown(cat, {"size", "skew", "cache_files", "eta"}, "catalog.",
                   warnings);
      if (cat.contains("size"))
        cfg.catalog.catalog_size = cat.at("size").get<long long>();
      if (cat.contains("skew")) cfg.catalog.skew = cat.at("skew").get<double>();
      const bool has_files = cat.contains("cache_files");
      const bool has_eta = cat.contains("eta");
      if (has_files && has_eta)
        throw ConfigError("config sets both catalog.cache_files and catalog.eta");
      if (has_files) cfg.catalog.cache_files = cat.at("cache_files").get<double>();
      if (has_eta)
        cfg.catalog.cache_files =
            cat.at("eta").get<double>() * double(cfg.catalog.catalog_size);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config value: ") + e.what());
  }
  return cfg;
}

NetworkConfig load_config_file(const std::string& path,
                               std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json(buf.str(), warnings);
}

}  // namespace hetcache

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "hetcache/model.hpp"

namespace hetcache {

// One realized network: a square window with toroidal distances, so every
// point sees a statistically identical neighborhood and no guard ring is
// needed.
struct DropSample {
  double side = 0.0;
  std::array<std::vector<double>, 2> bs_x, bs_y;  // per tier
  std::vector<double> user_x, user_y;
  std::vector<std::int64_t> request;  // cached mode: 1-based file index
  std::vector<std::uint8_t> is_hit;   // cached mode: request held by helpers

  // Filled by associate():
  std::vector<std::int32_t> serving_tier;  // 1 or 2; 0 when the tier is empty
  std::vector<std::int32_t> serving_bs;    // index within the serving tier
  std::vector<double> serving_dist;

  // Filled by schedule():
  std::array<std::vector<std::uint8_t>, 2> bs_active;   // >= 1 attached user
  std::array<std::vector<std::int32_t>, 2> sched_user;  // flattened
  std::array<std::vector<std::int32_t>, 2> sched_bs;    // serving BS per entry
};

// Precomputed request sampler: inverse-CDF lookup over the Zipf catalog plus
// the top-N cache membership rule (fractional sizes randomize the marginal
// file).
class ZipfSampler {
 public:
  explicit ZipfSampler(const ZipfCatalog& catalog);
  std::int64_t sample(std::mt19937_64& eng) const;
  bool cached(std::int64_t file, std::mt19937_64& eng) const;

 private:
  std::vector<double> cdf_;
  long long whole_ = 0;
  double frac_ = 0.0;
};

// Deterministic per-drop stream: (seed, drop index) fully determine every
// draw, so drops can run in any order on any worker count.
std::mt19937_64 make_drop_engine(std::uint64_t seed, std::uint64_t drop);

// Uniform on (0, 1]; never returns 0, so -log stays finite.
inline double uniform_pos(std::mt19937_64& eng) {
  return double((eng() >> 11) + 1) * 0x1.0p-53;
}

DropSample sample_drop(const NetworkConfig& cfg, double side,
                       std::mt19937_64& eng,
                       const ZipfSampler* requests = nullptr);

// Max-average-power association (cache-miss users restricted to tier 1).
void associate(DropSample& drop, const NetworkConfig& cfg);

// Macro BSs schedule up to M_1 attached users, small BSs exactly one.
void schedule(DropSample& drop, const NetworkConfig& cfg,
              std::mt19937_64& eng);

// Rates (nats/s/Hz) for the given users, each treated as scheduled by its
// serving BS: exponential signal gain, per-interferer gamma gains over all
// other active BSs, conventional-mode tier-2 rates capped at the backhaul.
// Gains are drawn in listing order.
std::vector<double> realize_rates(const DropSample& drop,
                                  const NetworkConfig& cfg,
                                  const std::vector<std::int32_t>& users,
                                  std::mt19937_64& eng);

struct ClassMean {
  double mean = 0.0;
  double std_error = 0.0;
  long drops = 0;  // drops containing at least one user of the class
};

struct SimEstimate {
  double ase_nats = 0.0;  // nats/s/Hz/m^2
  double ase_std_error = 0.0;
  ClassMean rate_tier1, rate_tier2;      // conventional per-user rates
  ClassMean rate_hit1, rate_hit2, rate_miss;  // cached-mode classes
  std::array<ClassMean, 2> active_frac{};
  int drops = 0;
  std::uint64_t seed = 0;
};

struct SimOptions {
  int drops = 500;
  std::uint64_t seed = 1;
  double expected_macro_count = 100.0;  // sets the window side; minimum 50
  // When set, per-class means average over every user's would-be rate (the
  // typical-user ensemble the analytic formulas describe) instead of only
  // scheduled users. ASE always sums scheduled users.
  bool typical_user_rates = false;
};

SimEstimate estimate(const NetworkConfig& cfg, const SimOptions& opt);

}  // namespace hetcache

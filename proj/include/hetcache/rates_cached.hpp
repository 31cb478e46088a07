#pragma once

#include <array>

#include "hetcache/model.hpp"
#include "hetcache/rates_conventional.hpp"

namespace hetcache {

// Probability that a requested file is in the helpers' top-N cache.
// Fractional cache sizes interpolate linearly on the marginal file.
double hit_probability(const ZipfCatalog& catalog);

// Association picture once requests split into cache hits and misses.
struct CacheSplit {
  double hit_prob = 0.0;               // p_h
  std::array<double, 2> hit_assoc{};   // tier association of a hit user
  std::array<double, 2> assoc{};       // overall per-tier association
  double macro_hit_share = 0.0;        // P(macro-served user is a hit user)
};

CacheSplit cache_split(const NetworkConfig& cfg);

struct CachedStats {
  CacheSplit split;
  std::array<double, 2> active{};  // p_a per tier under cached-mode load
};

CachedStats cached_stats(const NetworkConfig& cfg);

// Mean rate of a cache-hit user served by tier k (uncapped: content is
// local). Throws when tier k never serves hit users.
double mean_rate_hit_integral(const NetworkConfig& cfg, const CachedStats& st,
                              int k);

// Mean rate of a cache-miss user, served by its nearest macro while every
// active helper interferes without an exclusion region.
double mean_rate_miss_integral(const NetworkConfig& cfg,
                               const CachedStats& st);

// Closed-form counterparts (zero noise, equal pathloss exponents).
double mean_rate_hit_closed(const NetworkConfig& cfg, const CachedStats& st,
                            int k);
double mean_rate_miss_closed(const NetworkConfig& cfg, const CachedStats& st);

// Mean throughput of an active macro cell scheduling M_1 users whose
// hit/miss mix is binomial. The linear form is the production path; the
// explicit binomial sum exists to pin the identity in tests.
double macro_cell_throughput(const NetworkConfig& cfg, const CachedStats& st,
                             double rate_hit1, double rate_miss);
double macro_cell_throughput_binomial(const NetworkConfig& cfg,
                                      const CachedStats& st, double rate_hit1,
                                      double rate_miss);

// ASE = p_a,1 lambda_1 * (macro cell throughput) + p_a,2 lambda_2 * R_hit,2.
RateReport ase_cached(const NetworkConfig& cfg,
                      Method method = Method::integral);

}  // namespace hetcache

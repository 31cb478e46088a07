#pragma once

#include <array>

#include "hetcache/model.hpp"

namespace hetcache {

// Association and activity probabilities for both tiers.
struct TierStats {
  std::array<double, 2> assoc{};   // P(user attaches to tier k)
  std::array<double, 2> active{};  // P(a tier-k BS has at least one user)
};

// Probability that the typical user attaches to tier k under max-average-
// receive-power association, by adaptive quadrature (valid for unequal
// pathloss exponents).
double association_prob(const NetworkConfig& cfg, int k);

// Closed ratio lambda_k / sum_j lambda_j (P_j/P_k)^(2/alpha); requires equal
// pathloss exponents.
double association_prob_closed(const NetworkConfig& cfg, int k);

// PDF of the serving distance conditioned on attachment to tier k.
double serving_distance_pdf(const NetworkConfig& cfg, int k, double r);

// Probability a tier-k BS is active given the tier association probability,
// via the 3.5-parameter Poisson-Voronoi load approximation.
double active_prob(const NetworkConfig& cfg, int k, double assoc_prob);

// Both tiers' association and activity probabilities for conventional-mode
// traffic (every user eligible for both tiers).
TierStats conventional_stats(const NetworkConfig& cfg);

// Laplace transform E[exp(-s I_j)] of the interference from tier j's active
// members outside the exclusion radius, for a user served at distance r.
struct LaplaceQuery {
  double s = 0.0;
  int serving_tier = 1;
  int interfering_tier = 1;
  double serving_distance = 0.0;  // r, metres
  double exclusion_radius = 0.0;  // closest possible interferer of tier j
  double active_prob = 1.0;       // thinning of the interfering tier
};

// Closest possible tier-j interferer distance implied by max-power
// association when serving tier k holds at distance r.
double max_power_exclusion_radius(const NetworkConfig& cfg, int serving,
                                  int interfering, double r);

double laplace_interference(const NetworkConfig& cfg, const LaplaceQuery& q);

// Exclusion-free limit (interferers may be arbitrarily close).
double laplace_no_exclusion(const NetworkConfig& cfg, double s, int j,
                            double active_prob);

// Interference Laplace transform seen by a cache-miss user served by its
// nearest macro at distance r: tier 1 excluded inside r, tier 2 unexcluded.
double laplace_interference_cachemiss(const NetworkConfig& cfg, double s,
                                      int j, double r, double active_prob);

}  // namespace hetcache

#include "hetcache/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <stdexcept>

#include "hetcache/parallel.hpp"
#include "sim_kernel.hpp"

namespace hetcache {

namespace {

double torus_d2(double ux, double uy, double bx, double by, double side) {
  double dx = std::fabs(ux - bx);
  double dy = std::fabs(uy - by);
  if (dx > side - dx) dx = side - dx;
  if (dy > side - dy) dy = side - dy;
  return dx * dx + dy * dy;
}

// Uniform-grid bucket index over one tier's positions, queried for the
// toroidal nearest neighbour. Cells are scanned in growing Chebyshev rings;
// once the best squared distance is below (k * cell)^2 every unscanned cell
// is provably farther, so the scan stops.
class GridIndex {
 public:
  GridIndex(const std::vector<double>& xs, const std::vector<double>& ys,
            double side)
      : xs_(xs), ys_(ys), side_(side) {
    const std::int32_t n = std::int32_t(xs.size());
    ncells_ = std::max(1, int(std::sqrt(double(n))));
    cell_ = side / ncells_;
    offsets_.assign(std::size_t(ncells_) * ncells_ + 1, 0);
    std::vector<std::int32_t> cell_of(static_cast<std::size_t>(n));
    for (std::int32_t i = 0; i < n; ++i) {
      cell_of[std::size_t(i)] = cell_index(xs[std::size_t(i)], ys[std::size_t(i)]);
      ++offsets_[std::size_t(cell_of[std::size_t(i)]) + 1];
    }
    for (std::size_t c = 1; c < offsets_.size(); ++c) offsets_[c] += offsets_[c - 1];
    order_.resize(std::size_t(n));
    std::vector<std::int32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (std::int32_t i = 0; i < n; ++i)
      order_[std::size_t(cursor[std::size_t(cell_of[std::size_t(i)])]++)] = i;
  }

  // Requires a non-empty point set.
  std::pair<std::int32_t, double> nearest(double ux, double uy) const {
    std::int32_t best = -1;
    double best_d2 = std::numeric_limits<double>::infinity();
    auto scan = [&](int gx, int gy) {
      gx = wrap(gx);
      gy = wrap(gy);
      const std::size_t c = std::size_t(gy) * ncells_ + std::size_t(gx);
      for (std::int32_t s = offsets_[c]; s < offsets_[c + 1]; ++s) {
        const std::int32_t i = order_[std::size_t(s)];
        const double d2 =
            torus_d2(ux, uy, xs_[std::size_t(i)], ys_[std::size_t(i)], side_);
        if (d2 < best_d2) {
          best_d2 = d2;
          best = i;
        }
      }
    };
    const int cx = coord(ux), cy = coord(uy);
    for (int k = 0;; ++k) {
      if (k == 0) {
        scan(cx, cy);
      } else {
        for (int dx = -k; dx <= k; ++dx) {
          scan(cx + dx, cy - k);
          scan(cx + dx, cy + k);
        }
        for (int dy = -k + 1; dy <= k - 1; ++dy) {
          scan(cx - k, cy + dy);
          scan(cx + k, cy + dy);
        }
      }
      const double certain = double(k) * cell_;
      if (best >= 0 && best_d2 <= certain * certain) break;
      if (2 * k + 1 >= ncells_) break;  // every cell has been visited
    }
    return {best, best_d2};
  }

 private:
  int wrap(int g) const {
    g %= ncells_;
    return g < 0 ? g + ncells_ : g;
  }
  int coord(double v) const {
    int g = int(v / cell_);
    return g >= ncells_ ? ncells_ - 1 : (g < 0 ? 0 : g);
  }
  int cell_index(double x, double y) const {
    return coord(y) * ncells_ + coord(x);
  }

  const std::vector<double>& xs_;
  const std::vector<double>& ys_;
  double side_;
  int ncells_;
  double cell_;
  std::vector<std::int32_t> offsets_;
  std::vector<std::int32_t> order_;
};

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

ZipfSampler::ZipfSampler(const ZipfCatalog& catalog) {
  if (catalog.catalog_size <= 0)
    throw std::invalid_argument("catalog size must be positive");
  cdf_.resize(std::size_t(catalog.catalog_size));
  double acc = 0.0;
  for (std::size_t f = 0; f < cdf_.size(); ++f) {
    acc += std::pow(double(f + 1), -catalog.skew);
    cdf_[f] = acc;
  }
  for (double& c : cdf_) c /= acc;
  cdf_.back() = 1.0;
  whole_ = (long long)std::floor(catalog.cache_files);
  frac_ = catalog.cache_files - double(whole_);
}

std::int64_t ZipfSampler::sample(std::mt19937_64& eng) const {
  const double u = uniform_pos(eng);
  auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) --it;
  return std::int64_t(it - cdf_.begin()) + 1;
}

bool ZipfSampler::cached(std::int64_t file, std::mt19937_64& eng) const {
  if (file <= whole_) return true;
  if (file == whole_ + 1 && frac_ > 0.0) return uniform_pos(eng) <= frac_;
  return false;
}

std::mt19937_64 make_drop_engine(std::uint64_t seed, std::uint64_t drop) {
  return std::mt19937_64(
      mix64(mix64(seed) ^ (0x9E3779B97F4A7C15ULL * (drop + 1))));
}

DropSample sample_drop(const NetworkConfig& cfg, double side,
                       std::mt19937_64& eng, const ZipfSampler* requests) {
  if (!(side > 0.0)) throw std::invalid_argument("window side must be positive");
  if (cfg.tier1.density * side * side < 50.0)
    throw std::invalid_argument(
        "window too small: fewer than 50 macro BSs expected");
  DropSample d;
  d.side = side;
  const double area = side * side;
  for (int t = 0; t < 2; ++t) {
    const TierParams& tp = t == 0 ? cfg.tier1 : cfg.tier2;
    long long n = 0;
    if (tp.density > 0.0)
      n = std::poisson_distribution<long long>(tp.density * area)(eng);
    d.bs_x[std::size_t(t)].resize(std::size_t(n));
    d.bs_y[std::size_t(t)].resize(std::size_t(n));
    for (long long i = 0; i < n; ++i) {
      d.bs_x[std::size_t(t)][std::size_t(i)] = side * uniform_pos(eng);
      d.bs_y[std::size_t(t)][std::size_t(i)] = side * uniform_pos(eng);
    }
  }
  long long nu = 0;
  if (cfg.user_density > 0.0)
    nu = std::poisson_distribution<long long>(cfg.user_density * area)(eng);
  d.user_x.resize(std::size_t(nu));
  d.user_y.resize(std::size_t(nu));
  for (long long i = 0; i < nu; ++i) {
    d.user_x[std::size_t(i)] = side * uniform_pos(eng);
    d.user_y[std::size_t(i)] = side * uniform_pos(eng);
  }
  if (requests) {
    d.request.resize(std::size_t(nu));
    d.is_hit.resize(std::size_t(nu));
    for (long long i = 0; i < nu; ++i) {
      d.request[std::size_t(i)] = requests->sample(eng);
      d.is_hit[std::size_t(i)] =
          requests->cached(d.request[std::size_t(i)], eng) ? 1 : 0;
    }
  }
  return d;
}

void associate(DropSample& d, const NetworkConfig& cfg) {
  const std::size_t nu = d.user_x.size();
  const bool cached_mode = cfg.mode == NetworkMode::cached;
  if (cached_mode && d.is_hit.size() != nu)
    throw std::invalid_argument("cached mode requires sampled requests");
  d.serving_tier.assign(nu, 0);
  d.serving_bs.assign(nu, -1);
  d.serving_dist.assign(nu, 0.0);

  std::unique_ptr<GridIndex> index[2];
  for (int t = 0; t < 2; ++t)
    if (!d.bs_x[std::size_t(t)].empty())
      index[t] = std::make_unique<GridIndex>(d.bs_x[std::size_t(t)],
                                             d.bs_y[std::size_t(t)], d.side);
  const TierParams* tiers[2] = {&cfg.tier1, &cfg.tier2};

  for (std::size_t u = 0; u < nu; ++u) {
    double best_power = -1.0;
    for (int t = 0; t < 2; ++t) {
      if (!index[t]) continue;
      if (t == 1 && cached_mode && !d.is_hit[u]) continue;  // miss: macro only
      auto [bs, d2] = index[t]->nearest(d.user_x[u], d.user_y[u]);
      const double p = tiers[t]->tx_power_w *
                       std::pow(std::max(d2, 1e-12),
                                -0.5 * tiers[t]->pathloss_exponent);
      if (p > best_power) {
        best_power = p;
        d.serving_tier[u] = t + 1;
        d.serving_bs[u] = bs;
        d.serving_dist[u] = std::sqrt(d2);
      }
    }
  }
}

void schedule(DropSample& d, const NetworkConfig& cfg, std::mt19937_64& eng) {
  const TierParams* tiers[2] = {&cfg.tier1, &cfg.tier2};
  std::array<std::vector<std::vector<std::int32_t>>, 2> attached;
  for (int t = 0; t < 2; ++t) {
    const std::size_t n = d.bs_x[std::size_t(t)].size();
    d.bs_active[std::size_t(t)].assign(n, 0);
    d.sched_user[std::size_t(t)].clear();
    d.sched_bs[std::size_t(t)].clear();
    attached[std::size_t(t)].assign(n, {});
  }
  for (std::size_t u = 0; u < d.serving_tier.size(); ++u) {
    const int st = d.serving_tier[u];
    if (st > 0)
      attached[std::size_t(st - 1)][std::size_t(d.serving_bs[u])].push_back(
          std::int32_t(u));
  }
  for (int t = 0; t < 2; ++t) {
    const int cap = tiers[t]->antennas;
    auto& lists = attached[std::size_t(t)];
    for (std::size_t b = 0; b < lists.size(); ++b) {
      auto& lst = lists[b];
      if (lst.empty()) continue;
      d.bs_active[std::size_t(t)][b] = 1;
      const int n = int(lst.size());
      const int take = std::min(cap, n);
      // Partial Fisher-Yates: an unbiased sample even when the cap binds.
      for (int i = 0; i < take; ++i) {
        if (n > take) {
          const int j = std::uniform_int_distribution<int>(i, n - 1)(eng);
          std::swap(lst[std::size_t(i)], lst[std::size_t(j)]);
        }
        d.sched_user[std::size_t(t)].push_back(lst[std::size_t(i)]);
        d.sched_bs[std::size_t(t)].push_back(std::int32_t(b));
      }
    }
  }
}

std::vector<double> realize_rates(const DropSample& d,
                                  const NetworkConfig& cfg,
                                  const std::vector<std::int32_t>& users,
                                  std::mt19937_64& eng) {
  // Compact the active BSs so the kernel never touches silent ones; remember
  // where each original index landed for the exclusion lookup.
  std::array<std::vector<double>, 2> ax, ay;
  std::array<std::vector<std::int32_t>, 2> slot;
  for (int t = 0; t < 2; ++t) {
    const auto& act = d.bs_active[std::size_t(t)];
    slot[std::size_t(t)].assign(act.size(), -1);
    for (std::size_t b = 0; b < act.size(); ++b) {
      if (!act[b]) continue;
      slot[std::size_t(t)][b] = std::int32_t(ax[std::size_t(t)].size());
      ax[std::size_t(t)].push_back(d.bs_x[std::size_t(t)][b]);
      ay[std::size_t(t)].push_back(d.bs_y[std::size_t(t)][b]);
    }
  }
  detail::KernelTier kt[2];
  const TierParams* tiers[2] = {&cfg.tier1, &cfg.tier2};
  for (int t = 0; t < 2; ++t) {
    kt[t].x = ax[std::size_t(t)].data();
    kt[t].y = ay[std::size_t(t)].data();
    kt[t].count = std::int32_t(ax[std::size_t(t)].size());
    kt[t].power = tiers[t]->tx_power_w;
    kt[t].fading_m = tiers[t]->antennas;
    kt[t].alpha = tiers[t]->pathloss_exponent;
  }
  const double noise = cfg.noise_power_w;
  const bool cap_tier2 = cfg.mode == NetworkMode::conventional;

  std::vector<double> rates(users.size(), 0.0);
  for (std::size_t i = 0; i < users.size(); ++i) {
    const std::size_t u = std::size_t(users[i]);
    const int st = d.serving_tier[u];
    if (st == 0) continue;
    const std::int32_t s = slot[std::size_t(st - 1)][std::size_t(d.serving_bs[u])];
    if (s < 0) throw std::logic_error("serving BS is not active");
    double signal = 0.0;
    const double interference = detail::sinr_components(
        d.user_x[u], d.user_y[u], kt, st - 1, s, d.side, eng, &signal);
    double rate = std::log1p(signal / (noise + interference));
    if (st == 2 && cap_tier2) rate = std::min(rate, cfg.backhaul_nats);
    rates[i] = rate;
  }
  return rates;
}

namespace {

struct Welford {
  long n = 0;
  double mean = 0.0, m2 = 0.0;
  void add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / double(n);
    m2 += delta * (x - mean);
  }
  double std_error() const {
    return n > 1 ? std::sqrt(m2 / (double(n) * double(n - 1))) : 0.0;
  }
  ClassMean as_class_mean() const { return {mean, std_error(), n}; }
};

struct ClassAcc {
  double sum = 0.0;
  long n = 0;
  void add(double x) {
    sum += x;
    ++n;
  }
};

}  // namespace

SimEstimate estimate(const NetworkConfig& cfg, const SimOptions& opt) {
  require_valid(cfg);
  if (opt.drops <= 0) throw std::invalid_argument("drops must be positive");
  const double side =
      std::sqrt(std::max(opt.expected_macro_count, 1.0) / cfg.tier1.density);
  std::unique_ptr<ZipfSampler> sampler;
  if (cfg.mode == NetworkMode::cached)
    sampler = std::make_unique<ZipfSampler>(cfg.catalog);

  struct DropOut {
    double ase = 0.0;
    ClassAcc tier1, tier2, hit1, hit2, miss;
    std::array<long, 2> active{}, total{};
    long scheduled = 0;
  };
  std::vector<DropOut> outs(std::size_t(opt.drops));

  parallel_for(std::size_t(opt.drops), [&](std::size_t di) {
    auto eng = make_drop_engine(opt.seed, di);
    DropSample d = sample_drop(cfg, side, eng, sampler.get());
    associate(d, cfg);
    schedule(d, cfg, eng);

    DropOut& o = outs[di];
    for (int t = 0; t < 2; ++t) {
      o.total[std::size_t(t)] = long(d.bs_active[std::size_t(t)].size());
      for (auto a : d.bs_active[std::size_t(t)]) o.active[std::size_t(t)] += a;
    }

    const bool cached_mode = cfg.mode == NetworkMode::cached;
    auto tally = [&](std::int32_t u, double rate) {
      if (d.serving_tier[std::size_t(u)] == 1) {
        o.tier1.add(rate);
        if (cached_mode)
          (d.is_hit[std::size_t(u)] ? o.hit1 : o.miss).add(rate);
      } else {
        o.tier2.add(rate);
        if (cached_mode) o.hit2.add(rate);
      }
    };

    if (opt.typical_user_rates) {
      // Every attached user's would-be rate: the same ensemble the
      // analytical per-user means describe. ASE still sums only the
      // scheduled ones, reusing each user's single realized rate.
      std::vector<std::int32_t> eval;
      eval.reserve(d.serving_tier.size());
      for (std::size_t u = 0; u < d.serving_tier.size(); ++u)
        if (d.serving_tier[u] > 0) eval.push_back(std::int32_t(u));
      const std::vector<double> rates = realize_rates(d, cfg, eval, eng);
      std::vector<double> by_user(d.serving_tier.size(), 0.0);
      for (std::size_t i = 0; i < eval.size(); ++i) {
        by_user[std::size_t(eval[i])] = rates[i];
        tally(eval[i], rates[i]);
      }
      for (int t = 0; t < 2; ++t)
        for (std::int32_t su : d.sched_user[std::size_t(t)]) {
          o.ase += by_user[std::size_t(su)];
          ++o.scheduled;
        }
    } else {
      std::vector<std::int32_t> eval;
      eval.reserve(d.sched_user[0].size() + d.sched_user[1].size());
      for (int t = 0; t < 2; ++t)
        eval.insert(eval.end(), d.sched_user[std::size_t(t)].begin(),
                    d.sched_user[std::size_t(t)].end());
      const std::vector<double> rates = realize_rates(d, cfg, eval, eng);
      for (std::size_t i = 0; i < eval.size(); ++i) {
        o.ase += rates[i];
        ++o.scheduled;
        tally(eval[i], rates[i]);
      }
    }
    o.ase /= side * side;
  });

  Welford w_ase, w_t1, w_t2, w_h1, w_h2, w_miss;
  Welford w_act[2];
  long total_scheduled = 0;
  for (const DropOut& o : outs) {
    w_ase.add(o.ase);
    total_scheduled += o.scheduled;
    if (o.tier1.n) w_t1.add(o.tier1.sum / double(o.tier1.n));
    if (o.tier2.n) w_t2.add(o.tier2.sum / double(o.tier2.n));
    if (o.hit1.n) w_h1.add(o.hit1.sum / double(o.hit1.n));
    if (o.hit2.n) w_h2.add(o.hit2.sum / double(o.hit2.n));
    if (o.miss.n) w_miss.add(o.miss.sum / double(o.miss.n));
    for (int t = 0; t < 2; ++t)
      if (o.total[std::size_t(t)])
        w_act[t].add(double(o.active[std::size_t(t)]) /
                     double(o.total[std::size_t(t)]));
  }
  if (total_scheduled == 0)
    throw std::runtime_error("no users were scheduled in any drop");

  SimEstimate est;
  est.ase_nats = w_ase.mean;
  est.ase_std_error = w_ase.std_error();
  est.rate_tier1 = w_t1.as_class_mean();
  est.rate_tier2 = w_t2.as_class_mean();
  est.rate_hit1 = w_h1.as_class_mean();
  est.rate_hit2 = w_h2.as_class_mean();
  est.rate_miss = w_miss.as_class_mean();
  est.active_frac[0] = w_act[0].as_class_mean();
  est.active_frac[1] = w_act[1].as_class_mean();
  est.drops = opt.drops;
  est.seed = opt.seed;
  return est;
}

}  // namespace hetcache

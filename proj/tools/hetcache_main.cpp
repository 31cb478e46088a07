// Command-line front end: JSON config in, CSV experiment data out.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "hetcache/model.hpp"
#include "hetcache/parallel.hpp"
#include "hetcache/rates_cached.hpp"
#include "hetcache/rates_conventional.hpp"
#include "hetcache/simulator.hpp"
#include "hetcache/tradeoff.hpp"
#include "hetcache/units.hpp"

namespace {

using namespace hetcache;

constexpr const char* kVersion = "1.0.0";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::uint64_t fnv1a(std::string_view s, std::uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string timestamp_utc() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[40];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct CommonOpts {
  std::string config_path;
  std::string output;
  int workers = 0;
  std::uint64_t seed = 1;
};

struct LoadedConfig {
  NetworkConfig cfg;
  std::string raw;  // config bytes, hashed into the manifest
};

LoadedConfig load(const CommonOpts& o) {
  LoadedConfig lc;
  if (o.config_path.empty()) {
    lc.cfg = default_config();
    lc.raw = "(default)";
  } else {
    std::ifstream in(o.config_path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file: " + o.config_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    lc.raw = ss.str();
    std::vector<std::string> warnings;
    lc.cfg = config_from_json(lc.raw, &warnings);
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
  }
  if (o.workers > 0) set_worker_count(o.workers);
  return lc;
}

struct Manifest {
  std::uint64_t hash = 0;
  std::string command;
  std::uint64_t seed = 0;
  std::string method;
};

Manifest make_manifest(const LoadedConfig& lc, const std::string& command,
                       std::uint64_t seed, const std::string& method) {
  std::uint64_t h = 1469598103934665603ULL;
  h = fnv1a(lc.raw, h);
  h = fnv1a("\x1f", h);
  h = fnv1a(command, h);
  h = fnv1a("\x1f", h);
  h = fnv1a(std::to_string(seed), h);
  h = fnv1a("\x1f", h);
  h = fnv1a(method, h);
  return {h, command, seed, method};
}

// The "# generated" line is the only place a timestamp appears; everything
// else in the output is a pure function of config + command + seed.
void write_header(std::ostream& os, const Manifest& m,
                  const NetworkConfig& cfg) {
  char hash[24];
  std::snprintf(hash, sizeof hash, "%016llx", (unsigned long long)m.hash);
  os << "# manifest hash=" << hash << " seed=" << m.seed
     << " method=" << m.method << " version=" << kVersion << " command=\""
     << m.command << "\"\n";
  os << "# generated " << timestamp_utc() << "\n";
  os << "# tier1_density_per_m2=" << fmt(cfg.tier1.density)
     << " per_macro_cell=" << fmt(units::per_m2_to_per_macro_cell(cfg.tier1.density))
     << "\n";
  os << "# tier2_density_per_m2=" << fmt(cfg.tier2.density)
     << " per_macro_cell=" << fmt(units::per_m2_to_per_macro_cell(cfg.tier2.density))
     << "\n";
  os << "# user_density_per_m2=" << fmt(cfg.user_density)
     << " per_macro_cell=" << fmt(units::per_m2_to_per_macro_cell(cfg.user_density))
     << "\n";
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file: " + path);
  return file;
}

std::string with_suffix(const std::string& base, const std::string& suffix) {
  std::string stem = base;
  if (stem.size() > 4 && stem.rfind(".csv") == stem.size() - 4)
    stem.resize(stem.size() - 4);
  return stem + suffix + ".csv";
}

Method parse_method(const std::string& s) {
  if (s == "integral") return Method::integral;
  if (s == "closed_form" || s == "closed-form") return Method::closed_form;
  if (s == "monte_carlo" || s == "monte-carlo" || s == "mc")
    return Method::monte_carlo;
  throw ConfigError("unknown method: " + s);
}

struct GridSpec {
  double lo = 0.0, hi = 0.0;
  int n = 1;
  bool log_spaced = false;
};

GridSpec parse_grid(const std::string& s) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream ss(s);
  while (std::getline(ss, token, ':')) parts.push_back(token);
  if (parts.size() < 3 || parts.size() > 4)
    throw ConfigError("grid must be lo:hi:n[:log|:lin], got: " + s);
  GridSpec g;
  try {
    g.lo = std::stod(parts[0]);
    g.hi = std::stod(parts[1]);
    g.n = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw ConfigError("grid has a non-numeric field: " + s);
  }
  if (parts.size() == 4) {
    if (parts[3] == "log")
      g.log_spaced = true;
    else if (parts[3] != "lin")
      throw ConfigError("grid spacing must be log or lin, got: " + parts[3]);
  }
  if (g.n < 1) throw ConfigError("grid needs at least one point: " + s);
  return g;
}

SweepVar parse_sweep_var(const std::string& s) {
  if (s == "lambda2") return SweepVar::lambda2;
  if (s == "eta") return SweepVar::eta;
  if (s == "backhaul") return SweepVar::backhaul;
  if (s == "skew") return SweepVar::skew;
  throw ConfigError("unknown sweep variable: " + s +
                    " (expected lambda2|eta|backhaul|skew)");
}

const char* sweep_var_units(SweepVar v) {
  switch (v) {
    case SweepVar::lambda2:
      return "per_macro_cell";
    case SweepVar::eta:
      return "fraction_of_catalog";
    case SweepVar::backhaul:
      return "mbps";
    case SweepVar::skew:
      return "exponent";
  }
  return "";
}

const char* sweep_var_name(SweepVar v) {
  switch (v) {
    case SweepVar::lambda2:
      return "lambda2";
    case SweepVar::eta:
      return "eta";
    case SweepVar::backhaul:
      return "backhaul";
    case SweepVar::skew:
      return "skew";
  }
  return "";
}

// Raw CLI-facing sweep values -> the library's internal units.
double sweep_value_to_internal(SweepVar var, double raw,
                               const NetworkConfig& cfg) {
  switch (var) {
    case SweepVar::lambda2:
      return units::per_macro_cell_to_per_m2(raw);
    case SweepVar::backhaul:
      return units::convert_rate(raw * 1e6, units::RateUnit::bits_per_s,
                                 units::RateUnit::nats_per_s_per_hz,
                                 cfg.bandwidth_hz);
    case SweepVar::eta:
    case SweepVar::skew:
      return raw;
  }
  return raw;
}

// ---------------------------------------------------------------- ase ----

struct AseArgs {
  CommonOpts common;
  std::string mode = "config";
  std::string method = "integral";
  std::string sweep_arg;
  int drops = 500;
};

int run_ase_one(const LoadedConfig& lc, const AseArgs& a, NetworkMode mode,
                const std::string& out_path, const Manifest& manifest,
                Method method, SweepVar var, const std::vector<double>& raw,
                const std::vector<double>& internal) {
  NetworkConfig cfg = lc.cfg;
  cfg.mode = mode;

  SweepSpec spec;
  spec.var = var;
  spec.grid = internal;
  spec.method = method;
  spec.drops = a.drops;
  spec.seed = a.common.seed;
  const std::vector<SweepPoint> pts = sweep(cfg, spec);

  std::ofstream file;
  std::ostream& os = open_out(file, out_path);
  write_header(os, manifest, cfg);
  os << "# mode=" << (mode == NetworkMode::cached ? "cached" : "conventional")
     << " sweep=" << sweep_var_name(var) << " units=" << sweep_var_units(var)
     << "\n";
  os << "swept_value,ase_bps_hz_m2,ase_nats_hz_m2,method,stderr\n";

  int rc = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const SweepPoint& p = pts[i];
    if (p.failed) {
      std::cerr << "point " << sweep_var_name(var) << "=" << fmt(raw[i])
                << " failed: " << p.error << "\n";
      os << fmt(raw[i]) << ",,," << method_name(method) << ",\n";
      rc = 3;
      continue;
    }
    os << fmt(raw[i]) << "," << fmt(units::nats_to_bits(p.ase_nats)) << ","
       << fmt(p.ase_nats) << "," << method_name(method) << ",";
    if (method == Method::monte_carlo)
      os << fmt(units::nats_to_bits(p.std_error));
    os << "\n";
  }
  return rc;
}

int run_ase(const AseArgs& a, const std::string& command) {
  const LoadedConfig lc = load(a.common);
  const Method method = parse_method(a.method);
  const Manifest manifest =
      make_manifest(lc, command, a.common.seed, method_name(method));

  SweepVar var = SweepVar::lambda2;
  std::vector<double> raw;
  if (a.sweep_arg.empty()) {
    raw = {units::per_m2_to_per_macro_cell(lc.cfg.tier2.density)};
  } else {
    const std::size_t eq = a.sweep_arg.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--sweep must be var=lo:hi:n[:log], got: " +
                        a.sweep_arg);
    var = parse_sweep_var(a.sweep_arg.substr(0, eq));
    const GridSpec g = parse_grid(a.sweep_arg.substr(eq + 1));
    raw = make_grid(g.lo, g.hi, g.n, g.log_spaced);
  }
  std::vector<double> internal(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    internal[i] = sweep_value_to_internal(var, raw[i], lc.cfg);

  if (a.mode == "both") {
    if (a.common.output.empty() || a.common.output == "-")
      throw ConfigError("--mode both needs --output as a file prefix");
    const int rc1 =
        run_ase_one(lc, a, NetworkMode::conventional,
                    with_suffix(a.common.output, "_conventional"), manifest,
                    method, var, raw, internal);
    const int rc2 =
        run_ase_one(lc, a, NetworkMode::cached,
                    with_suffix(a.common.output, "_cached"), manifest, method,
                    var, raw, internal);
    return rc1 != 0 ? rc1 : rc2;
  }

  NetworkMode mode = lc.cfg.mode;
  if (a.mode == "conventional")
    mode = NetworkMode::conventional;
  else if (a.mode == "cached")
    mode = NetworkMode::cached;
  else if (a.mode != "config")
    throw ConfigError("--mode must be conventional|cached|both|config");
  return run_ase_one(lc, a, mode, a.common.output, manifest, method, var, raw,
                     internal);
}

// ----------------------------------------------------------- tradeoff ----

struct TradeoffArgs {
  CommonOpts common;
  std::string method = "closed_form";
  double target_ase = -1.0;           // bps/Hz/m^2
  double target_ase_per_cell = -1.0;  // bps/Hz per macro-cell area
  std::string density_grid = "1:100:25:log";
};

int run_tradeoff(const TradeoffArgs& a, const std::string& command) {
  const LoadedConfig lc = load(a.common);
  const Method method = parse_method(a.method);
  const bool has_abs = a.target_ase > 0.0;
  const bool has_cell = a.target_ase_per_cell > 0.0;
  if (has_abs == has_cell)
    throw ConfigError(
        "give exactly one of --target-ase or --target-ase-per-cell");
  const double target_bps =
      has_abs ? a.target_ase : a.target_ase_per_cell / units::kMacroCellArea;
  const double target_nats = units::bits_to_nats(target_bps);

  const GridSpec g = parse_grid(a.density_grid);
  const std::vector<double> raw = make_grid(g.lo, g.hi, g.n, g.log_spaced);

  const Manifest manifest =
      make_manifest(lc, command, a.common.seed, method_name(method));
  std::ofstream file;
  std::ostream& os = open_out(file, a.common.output);
  NetworkConfig cfg = lc.cfg;
  cfg.mode = NetworkMode::cached;
  write_header(os, manifest, cfg);
  os << "# target_ase_bps_hz_m2=" << fmt(target_bps)
     << " per_macro_cell=" << fmt(target_bps * units::kMacroCellArea)
     << " density_grid_per_macro_cell=" << a.density_grid << "\n";
  os << "# status may carry a +flagged suffix when the closed-form solution "
        "disagrees with the integral check by more than 5%\n";
  os << "lambda2_per_m2,eta,iterations,residual,status\n";

  int rc = 0;
  for (double r : raw) {
    NetworkConfig point = cfg;
    point.tier2.density = units::per_macro_cell_to_per_m2(r);
    try {
      const EtaSolution sol =
          solve_eta_for_target(point, target_nats, method);
      std::string status = solve_status_name(sol.status);
      if (sol.flagged) status += "+flagged";
      os << fmt(point.tier2.density) << "," << fmt(sol.eta) << ","
         << sol.iterations << "," << fmt(sol.residual) << "," << status
         << "\n";
    } catch (const std::exception& e) {
      std::cerr << "density " << fmt(r) << " per cell failed: " << e.what()
                << "\n";
      os << fmt(point.tier2.density) << ",,,,failed\n";
      rc = 3;
    }
  }
  return rc;
}

// ----------------------------------------------------- optimal density ----

struct OptArgs {
  CommonOpts common;
  std::string method = "closed_form";
  double budget = -1.0;           // files per m^2
  double budget_per_cell = -1.0;  // files per macro-cell area
  std::string delta_list = "0.6,0.8,1.0";
  std::string grid = "1:3000:48:log";
};

std::string delta_token(double d) {
  std::string s = fmt(d);
  for (char& c : s)
    if (c == '.') c = 'p';
  return s;
}

int run_optimal_density(const OptArgs& a, const std::string& command) {
  const LoadedConfig lc = load(a.common);
  const Method method = parse_method(a.method);
  const bool has_abs = a.budget > 0.0;
  const bool has_cell = a.budget_per_cell > 0.0;
  if (has_abs == has_cell)
    throw ConfigError("give exactly one of --budget or --budget-per-cell");
  const double budget_m2 =
      has_abs ? a.budget : a.budget_per_cell / units::kMacroCellArea;

  std::vector<double> deltas;
  {
    std::istringstream ss(a.delta_list);
    std::string token;
    while (std::getline(ss, token, ',')) {
      try {
        deltas.push_back(std::stod(token));
      } catch (const std::exception&) {
        throw ConfigError("bad skew value in --delta-list: " + token);
      }
    }
    if (deltas.empty()) throw ConfigError("--delta-list is empty");
  }
  const GridSpec g = parse_grid(a.grid);
  const std::string prefix =
      a.common.output.empty() ? std::string("optimal_density") : a.common.output;

  const Manifest manifest =
      make_manifest(lc, command, a.common.seed, method_name(method));

  std::ofstream sum_file;
  std::ostream& sum = open_out(sum_file, with_suffix(prefix, "_summary"));
  write_header(sum, manifest, lc.cfg);
  sum << "# budget_files_per_m2=" << fmt(budget_m2)
      << " per_macro_cell=" << fmt(budget_m2 * units::kMacroCellArea) << "\n";
  sum << "delta,lambda2_per_m2,lambda2_per_macro_cell,cache_files,"
         "ase_bps_hz_m2,ase_nats_hz_m2,boundary\n";

  int rc = 0;
  for (double d : deltas) {
    NetworkConfig cfg = lc.cfg;
    cfg.mode = NetworkMode::cached;
    cfg.catalog.skew = d;
    try {
      const DensityOptimum opt = optimal_density_under_budget(
          cfg, budget_m2, units::per_macro_cell_to_per_m2(g.lo),
          units::per_macro_cell_to_per_m2(g.hi), method, g.n);

      std::ofstream curve_file;
      std::ostream& curve = open_out(
          curve_file, with_suffix(prefix, "_delta_" + delta_token(d)));
      write_header(curve, manifest, cfg);
      curve << "# skew=" << fmt(d) << "\n";
      curve << "lambda2_per_m2,cache_files,ase_bps_hz_m2,ase_nats_hz_m2,"
               "status\n";
      for (const SweepPoint& p : opt.curve) {
        const double files =
            std::min(budget_m2 / p.x, double(cfg.catalog.catalog_size));
        if (p.failed) {
          std::cerr << "skew " << fmt(d) << " density " << fmt(p.x)
                    << " failed: " << p.error << "\n";
          curve << fmt(p.x) << "," << fmt(files) << ",,,failed\n";
          rc = 3;
        } else {
          curve << fmt(p.x) << "," << fmt(files) << ","
                << fmt(units::nats_to_bits(p.ase_nats)) << ","
                << fmt(p.ase_nats) << ",ok\n";
        }
      }

      sum << fmt(d) << "," << fmt(opt.lambda2) << ","
          << fmt(units::per_m2_to_per_macro_cell(opt.lambda2)) << ","
          << fmt(opt.cache_files) << ","
          << fmt(units::nats_to_bits(opt.ase_nats)) << ","
          << fmt(opt.ase_nats) << "," << (opt.boundary ? 1 : 0) << "\n";
      if (opt.boundary)
        std::cerr << "warning: optimum for skew " << fmt(d)
                  << " sits on the scanned density boundary\n";
    } catch (const std::exception& e) {
      std::cerr << "skew " << fmt(d) << " failed: " << e.what() << "\n";
      sum << fmt(d) << ",,,,,,failed\n";
      rc = 3;
    }
  }
  return rc;
}

// ------------------------------------------------------------ validate ----

struct ValidateArgs {
  CommonOpts common;
  std::string mode = "config";
  int drops = 500;
};

int run_validate(const ValidateArgs& a, const std::string& command) {
  const LoadedConfig lc = load(a.common);
  NetworkConfig cfg = lc.cfg;
  if (a.mode == "conventional")
    cfg.mode = NetworkMode::conventional;
  else if (a.mode == "cached")
    cfg.mode = NetworkMode::cached;
  else if (a.mode != "config")
    throw ConfigError("--mode must be conventional|cached|config");

  const Manifest manifest = make_manifest(lc, command, a.common.seed, "all");
  std::ofstream file;
  std::ostream& os = open_out(file, a.common.output);

  const RateReport ri = evaluate_ase(cfg, Method::integral);
  const RateReport rc_ = evaluate_ase(cfg, Method::closed_form);
  const RateReport rm =
      evaluate_ase(cfg, Method::monte_carlo, a.drops, a.common.seed);

  const double gap_closed =
      std::fabs(rc_.ase_nats - ri.ase_nats) / std::fabs(ri.ase_nats);
  const double gap_mc =
      std::fabs(rm.ase_nats - ri.ase_nats) / std::fabs(ri.ase_nats);
  const bool pass_closed = gap_closed <= 0.05;
  const bool pass_mc = gap_mc <= 0.10;

  char hash[24];
  std::snprintf(hash, sizeof hash, "%016llx", (unsigned long long)manifest.hash);
  os << "manifest hash=" << hash << " version=" << kVersion << "\n";
  os << "mode=" << (cfg.mode == NetworkMode::cached ? "cached" : "conventional")
     << " drops=" << a.drops << " seed=" << a.common.seed << "\n\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-12s %16s %16s %10s %10s %8s\n", "method",
                "ase_bps_hz_m2", "ase_nats_hz_m2", "gap", "tolerance",
                "verdict");
  os << line;
  std::snprintf(line, sizeof line, "%-12s %16.6e %16.6e %10s %10s %8s\n",
                "integral", units::nats_to_bits(ri.ase_nats), ri.ase_nats, "-",
                "-", "-");
  os << line;
  std::snprintf(line, sizeof line, "%-12s %16.6e %16.6e %9.3f%% %10s %8s\n",
                "closed_form", units::nats_to_bits(rc_.ase_nats), rc_.ase_nats,
                100.0 * gap_closed, "5%", pass_closed ? "pass" : "FAIL");
  os << line;
  std::snprintf(line, sizeof line, "%-12s %16.6e %16.6e %9.3f%% %10s %8s\n",
                "monte_carlo", units::nats_to_bits(rm.ase_nats), rm.ase_nats,
                100.0 * gap_mc, "10%", pass_mc ? "pass" : "FAIL");
  os << line;
  std::snprintf(line, sizeof line, "monte_carlo stderr = %.3e bps/Hz/m^2\n",
                units::nats_to_bits(rm.std_error.value_or(0.0)));
  os << line;
  return pass_closed && pass_mc ? 0 : 1;
}

void add_common(CLI::App* sub, CommonOpts& o) {
  sub->add_option("-c,--config", o.config_path,
                  "JSON config file (defaults to the built-in baseline)");
  sub->add_option("-o,--output", o.output,
                  "output file, or prefix for multi-file commands (default: "
                  "stdout)");
  sub->add_option("--workers", o.workers,
                  "worker threads (overrides HETCACHE_WORKERS)");
  sub->add_option("--seed", o.seed, "Monte Carlo seed");
}

}  // namespace

int main(int argc, char** argv) {
  std::string command;
  for (int i = 0; i < argc; ++i) {
    if (i) command += ' ';
    command += argv[i];
  }

  CLI::App app{"Area spectral efficiency of two-tier networks: "
               "backhaul-limited picocells vs cache helpers"};
  app.require_subcommand(1);
  int rc = 0;

  AseArgs ase_args;
  CLI::App* ase = app.add_subcommand(
      "ase", "ASE over a parameter sweep (CSV: one row per grid point)");
  add_common(ase, ase_args.common);
  ase->add_option("--mode", ase_args.mode,
                  "conventional|cached|both|config (default: config)");
  ase->add_option("--method", ase_args.method,
                  "integral|closed_form|monte_carlo (default: integral)");
  ase->add_option("--sweep", ase_args.sweep_arg,
                  "var=lo:hi:n[:log] with var in lambda2 (per macro cell), "
                  "eta (fraction), backhaul (Mbps), skew");
  ase->add_option("--drops", ase_args.drops, "Monte Carlo drops per point");
  ase->callback([&] { rc = run_ase(ase_args, command); });

  TradeoffArgs tr_args;
  CLI::App* tr = app.add_subcommand(
      "tradeoff",
      "cache fraction needed to hit a target ASE across helper densities");
  add_common(tr, tr_args.common);
  tr->add_option("--method", tr_args.method,
                 "integral|closed_form (default: closed_form)");
  tr->add_option("--target-ase", tr_args.target_ase, "target ASE, bps/Hz/m^2");
  tr->add_option("--target-ase-per-cell", tr_args.target_ase_per_cell,
                 "target ASE, bps/Hz per macro-cell area");
  tr->add_option("--density-grid", tr_args.density_grid,
                 "helper densities per macro cell, lo:hi:n[:log]");
  tr->callback([&] { rc = run_tradeoff(tr_args, command); });

  OptArgs opt_args;
  CLI::App* od = app.add_subcommand(
      "optimal-density",
      "best helper density under a fixed cache-memory budget per area");
  add_common(od, opt_args.common);
  od->add_option("--method", opt_args.method,
                 "integral|closed_form (default: closed_form)");
  od->add_option("--budget", opt_args.budget, "cache budget, files per m^2");
  od->add_option("--budget-per-cell", opt_args.budget_per_cell,
                 "cache budget, files per macro-cell area");
  od->add_option("--delta-list", opt_args.delta_list,
                 "comma-separated Zipf skews (default: 0.6,0.8,1.0)");
  od->add_option("--grid", opt_args.grid,
                 "density scan per macro cell, lo:hi:n[:log]");
  od->callback([&] { rc = run_optimal_density(opt_args, command); });

  ValidateArgs v_args;
  CLI::App* val = app.add_subcommand(
      "validate",
      "integral vs closed-form vs Monte Carlo ASE with tolerance verdicts");
  add_common(val, v_args.common);
  val->add_option("--mode", v_args.mode, "conventional|cached|config");
  val->add_option("--drops", v_args.drops, "Monte Carlo drops");
  val->callback([&] { rc = run_validate(v_args, command); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}

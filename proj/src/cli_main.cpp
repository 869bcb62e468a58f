// Copyright 2026 The dudekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// dudekit command-line front-end.
//
// Verbs:
//   sweep     evaluate metrics over a parameter grid (CSV out)
//   validate  compare the closed-form engine against the Monte Carlo
//             engine threshold by threshold (CSV out, exit 0 iff all
//             points pass)
//   search    grid argmax of an analytic objective over bias or eta
//   presets   list built-in scenario configs / dump one as config text
//
// All CSV output is deterministic: rerunning with the same inputs and
// seed produces byte-identical files.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dude/analytic.hpp"
#include "dude/config_io.hpp"
#include "dude/errors.hpp"
#include "dude/load.hpp"
#include "dude/model.hpp"
#include "dude/presets.hpp"
#include "dude/sim.hpp"

namespace {

using namespace dude;

// ---------------------------------------------------------------------------
// Small shared helpers

std::string format_prob(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string format_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      while (used < item.size() &&
             std::isspace(static_cast<unsigned char>(item[used]))) {
        ++used;
      }
      if (used != item.size()) throw std::invalid_argument(item);
      grid.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("grid entry '" + item + "' is not a number");
    }
  }
  if (grid.empty()) throw ConfigError("grid must contain at least one value");
  const bool inc = std::is_sorted(grid.begin(), grid.end(), std::less_equal<>());
  const bool dec =
      std::is_sorted(grid.begin(), grid.end(), std::greater_equal<>());
  if (grid.size() > 1 && !inc && !dec) {
    throw ConfigError("grid values must be strictly ordered");
  }
  // A strictly-equal pair passes neither comparator chain above only
  // when mixed with other directions; catch pure duplicates too.
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] == grid[i - 1]) {
      throw ConfigError("grid values must be strictly ordered");
    }
  }
  return grid;
}

// Resolves exactly one of --config / --preset into a NetworkConfig.
NetworkConfig load_config(const std::string& config_path,
                          const std::string& preset_name) {
  if (config_path.empty() == preset_name.empty()) {
    throw ConfigError("exactly one of --config or --preset is required");
  }
  if (!preset_name.empty()) return find_preset(preset_name).config;
  NetworkConfig cfg = parse_config(config_path);
  cfg.validate();
  return cfg;
}

class CsvSink {
 public:
  explicit CsvSink(const std::string& path) : path_(path) {
    if (path_ != "-") {
      file_.open(path_, std::ios::binary | std::ios::trunc);
      if (!file_) throw ConfigError("cannot open output file " + path_);
    }
  }
  void line(const std::string& s) {
    if (path_ == "-") {
      std::cout << s << '\n';
    } else {
      file_ << s << '\n';
    }
  }
  void close() {
    if (path_ != "-") {
      file_.close();
      if (!file_) throw ConfigError("failed writing output file " + path_);
    } else {
      std::cout.flush();
    }
  }

 private:
  std::string path_;
  std::ofstream file_;
};

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  std::string config_path, preset_name;
  std::string param;
  std::string grid_text;
  std::string engine = "analytic";
  std::string out = "-";
  std::string load_model = "pmf";
  uint64_t seed = 1;
  uint64_t drops = 10000;
  double window = 20.0;
  double ue_density = 0.0;  // 0 = from config
  double tau_db = 0.0;      // fixed SIR threshold for non-tau sweeps
};

// Returns the per-point config, or nullopt when the grid value cannot
// yield a valid configuration (the point is then reported as failed).
std::optional<NetworkConfig> apply_param(const NetworkConfig& base,
                                         const std::string& param, double v) {
  NetworkConfig cfg = base;
  if (param == "lambda_ratio") {
    cfg.femto.density = v * cfg.macro.density;
  } else if (param == "bias_db") {
    cfg.femto.bias = db_to_linear(v);
  } else if (param == "eta") {
    cfg.eta = v;
  } else if (param == "n_m") {
    if (v != std::floor(v) || v < 1.0 || v > 32.0) return std::nullopt;
    cfg.macro.antennas = static_cast<int>(v);
  }
  try {
    cfg.validate();
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return cfg;
}

const std::vector<std::string>& metrics_for(const std::string& param) {
  static const std::vector<std::string> kTau = {"coverage", "coverage_macro",
                                                "coverage_femto"};
  static const std::vector<std::string> kRho = {
      "rate_coverage", "rate_coverage_macro", "rate_coverage_femto"};
  static const std::vector<std::string> kAssoc = {
      "case1", "case2", "case3", "assoc_macro", "assoc_femto", "coverage"};
  if (param == "tau_db") return kTau;
  if (param == "rho") return kRho;
  return kAssoc;
}

void emit_failed(CsvSink& sink, const std::string& pv,
                 const std::string& engine,
                 const std::vector<std::string>& metrics, uint64_t seed) {
  for (const auto& m : metrics) {
    sink.line(pv + "," + engine + "," + m + ",failed,," +
              std::to_string(seed));
  }
}

void emit_row(CsvSink& sink, const std::string& pv, const std::string& engine,
              const std::string& metric, double value, double ci,
              uint64_t seed) {
  sink.line(pv + "," + engine + "," + metric + "," + format_prob(value) + "," +
            format_prob(ci) + "," + std::to_string(seed));
}

int cmd_sweep(const SweepArgs& a) {
  const NetworkConfig base = load_config(a.config_path, a.preset_name);
  const std::vector<double> grid = parse_grid(a.grid_text);
  const bool want_analytic = a.engine == "analytic" || a.engine == "both";
  const bool want_sim = a.engine == "sim" || a.engine == "both";
  const LoadMode load_mode =
      a.load_model == "mean" ? LoadMode::kMean : LoadMode::kPmf;
  const std::vector<std::string>& metrics = metrics_for(a.param);

  // Threshold sweeps leave the network fixed, so the Monte Carlo side
  // runs once with the whole grid as thresholds.
  std::optional<SimEstimate> shared_sim;
  const bool threshold_sweep = a.param == "tau_db" || a.param == "rho";
  SimOptions opt;
  opt.window_km = a.window;
  opt.n_drops = a.drops;
  opt.seed = a.seed;
  opt.ue_density_override = a.ue_density;
  std::string shared_sim_error;
  if (want_sim && threshold_sweep) {
    for (double v : grid) {
      if (a.param == "tau_db") {
        opt.tau_grid.push_back(db_to_linear(v));
      } else {
        opt.rho_grid.push_back(v);
      }
    }
    try {
      shared_sim = estimate(base, opt);
    } catch (const std::exception& e) {
      shared_sim_error = e.what();
    }
  }

  CsvSink sink(a.out);
  sink.line("param_value,engine,metric,value,ci_halfwidth,seed");
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    const double v = grid[gi];
    const std::string pv = format_param(v);
    std::optional<NetworkConfig> cfg =
        threshold_sweep ? std::optional<NetworkConfig>(base)
                        : apply_param(base, a.param, v);
    if (!cfg) {
      if (want_analytic) emit_failed(sink, pv, "analytic", metrics, a.seed);
      if (want_sim) emit_failed(sink, pv, "sim", metrics, a.seed);
      continue;
    }

    if (want_analytic) {
      try {
        const double tau =
            a.param == "tau_db" ? db_to_linear(v) : db_to_linear(a.tau_db);
        if (a.param == "rho") {
          emit_row(sink, pv, "analytic", "rate_coverage",
                   network_rate_coverage(*cfg, v, load_mode), 0.0, a.seed);
          emit_row(sink, pv, "analytic", "rate_coverage_macro",
                   rate_coverage(Tier::kMacro, *cfg, v, load_mode), 0.0,
                   a.seed);
          emit_row(sink, pv, "analytic", "rate_coverage_femto",
                   rate_coverage(Tier::kFemto, *cfg, v, load_mode), 0.0,
                   a.seed);
        } else if (a.param == "tau_db") {
          emit_row(sink, pv, "analytic", "coverage",
                   network_sir_coverage(*cfg, tau), 0.0, a.seed);
          emit_row(sink, pv, "analytic", "coverage_macro",
                   sir_coverage(Tier::kMacro, *cfg, tau), 0.0, a.seed);
          emit_row(sink, pv, "analytic", "coverage_femto",
                   sir_coverage(Tier::kFemto, *cfg, tau), 0.0, a.seed);
        } else {
          emit_row(sink, pv, "analytic", "case1",
                   case_probability(AssociationCase::kMacroBoth, *cfg), 0.0,
                   a.seed);
          emit_row(sink, pv, "analytic", "case2",
                   case_probability(AssociationCase::kMacroDlFemtoUl, *cfg),
                   0.0, a.seed);
          emit_row(sink, pv, "analytic", "case3",
                   case_probability(AssociationCase::kFemtoBoth, *cfg), 0.0,
                   a.seed);
          emit_row(sink, pv, "analytic", "assoc_macro",
                   tier_assoc_probability(Tier::kMacro, *cfg), 0.0, a.seed);
          emit_row(sink, pv, "analytic", "assoc_femto",
                   tier_assoc_probability(Tier::kFemto, *cfg), 0.0, a.seed);
          emit_row(sink, pv, "analytic", "coverage",
                   network_sir_coverage(*cfg, tau), 0.0, a.seed);
        }
      } catch (const std::exception&) {
        emit_failed(sink, pv, "analytic", metrics, a.seed);
      }
    }

    if (want_sim) {
      try {
        if (threshold_sweep) {
          if (!shared_sim) throw NumericError(shared_sim_error);
          const SimEstimate& est = *shared_sim;
          const uint64_t n = est.drops;
          if (a.param == "tau_db") {
            emit_row(sink, pv, "sim", "coverage", est.sir_coverage[gi],
                     est.sir_ci[gi], a.seed);
            for (int t = 0; t < 2; ++t) {
              const uint64_t s = est.sir_successes_tier[t][gi];
              const uint64_t nt = est.tier_drops[t];
              emit_row(sink, pv, "sim",
                       t == 0 ? "coverage_macro" : "coverage_femto",
                       nt ? static_cast<double>(s) / nt : 0.0,
                       wilson_half_width(s, nt), a.seed);
            }
          } else {
            emit_row(sink, pv, "sim", "rate_coverage", est.rate_coverage[gi],
                     est.rate_ci[gi], a.seed);
            for (int t = 0; t < 2; ++t) {
              const uint64_t s = est.rate_successes_tier[t][gi];
              const uint64_t nt = est.tier_drops[t];
              emit_row(sink, pv, "sim",
                       t == 0 ? "rate_coverage_macro" : "rate_coverage_femto",
                       nt ? static_cast<double>(s) / nt : 0.0,
                       wilson_half_width(s, nt), a.seed);
            }
          }
          (void)n;
        } else {
          SimOptions point = opt;
          point.tau_grid = {db_to_linear(a.tau_db)};
          const SimEstimate est = estimate(*cfg, point);
          for (int c = 0; c < 3; ++c) {
            emit_row(sink, pv, "sim", "case" + std::to_string(c + 1),
                     est.case_fraction[c],
                     wilson_half_width(est.case_counts[c], est.drops), a.seed);
          }
          for (int t = 0; t < 2; ++t) {
            emit_row(sink, pv, "sim", t == 0 ? "assoc_macro" : "assoc_femto",
                     static_cast<double>(est.tier_drops[t]) / est.drops,
                     wilson_half_width(est.tier_drops[t], est.drops), a.seed);
          }
          emit_row(sink, pv, "sim", "coverage", est.sir_coverage[0],
                   est.sir_ci[0], a.seed);
        }
      } catch (const std::exception&) {
        emit_failed(sink, pv, "sim", metrics, a.seed);
      }
    }
  }
  sink.close();
  return 0;
}

// ---------------------------------------------------------------------------
// validate

struct ValidateArgs {
  std::string config_path, preset_name;
  std::string tau_grid_text = "-10,-5,0,5,10,15,20";
  std::string out = "-";
  uint64_t seed = 1;
  uint64_t drops = 10000;
  double window = 20.0;
  double ue_density = 0.0;
  double tolerance = 0.05;
  // Self-test fault hook: scales the femto uplink weight seen by the
  // closed-form engine only, leaving the Monte Carlo engine untouched.
  // 1.0 is a no-op; anything else must make validation fail.
  double inject_weight_error = 1.0;
};

int cmd_validate(const ValidateArgs& a) {
  const NetworkConfig cfg = load_config(a.config_path, a.preset_name);
  NetworkConfig analytic_cfg = cfg;
  analytic_cfg.femto.bias *= a.inject_weight_error;
  analytic_cfg.validate();
  const std::vector<double> tau_db = parse_grid(a.tau_grid_text);

  SimOptions opt;
  opt.window_km = a.window;
  opt.n_drops = a.drops;
  opt.seed = a.seed;
  opt.ue_density_override = a.ue_density;
  for (double db : tau_db) opt.tau_grid.push_back(db_to_linear(db));
  const SimEstimate est = estimate(cfg, opt);

  CsvSink sink(a.out);
  sink.line("tau_db,analytic,mc,ci_halfwidth,abs_gap,pass");
  bool all_pass = true;
  for (std::size_t i = 0; i < tau_db.size(); ++i) {
    const std::string pv = format_param(tau_db[i]);
    double analytic = 0.0;
    bool ok = true;
    try {
      analytic = network_sir_coverage(analytic_cfg, opt.tau_grid[i]);
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) {
      sink.line(pv + ",failed," + format_prob(est.sir_coverage[i]) + "," +
                format_prob(est.sir_ci[i]) + ",,fail");
      all_pass = false;
      continue;
    }
    const double gap = std::fabs(analytic - est.sir_coverage[i]);
    const bool pass = gap <= a.tolerance + est.sir_ci[i];
    all_pass = all_pass && pass;
    sink.line(pv + "," + format_prob(analytic) + "," +
              format_prob(est.sir_coverage[i]) + "," +
              format_prob(est.sir_ci[i]) + "," + format_prob(gap) + "," +
              (pass ? "pass" : "fail"));
  }
  sink.close();
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  std::string config_path, preset_name;
  std::string objective = "sir_coverage";
  std::string variable = "bias_db";
  std::string grid_text;  // empty = documented default for the variable
  std::string out = "-";
  std::string load_model = "pmf";
  uint64_t seed = 1;
  double tau_db = 0.0;
  double rho = 1.0e5;
};

int cmd_search(const SearchArgs& a) {
  const NetworkConfig base = load_config(a.config_path, a.preset_name);
  std::string grid_text = a.grid_text;
  if (grid_text.empty()) {
    // Documented defaults: 1 dB steps for bias, 0.1 steps for eta.
    grid_text = a.variable == "bias_db"
                    ? "-5,-4,-3,-2,-1,0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15"
                    : "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1";
  }
  std::vector<double> grid = parse_grid(grid_text);
  std::sort(grid.begin(), grid.end());
  const LoadMode load_mode =
      a.load_model == "mean" ? LoadMode::kMean : LoadMode::kPmf;

  CsvSink sink(a.out);
  sink.line("param_value,engine,metric,value,ci_halfwidth,seed");
  bool have_best = false;
  double best_v = 0.0;
  double best_obj = 0.0;
  for (double v : grid) {
    const std::string pv = format_param(v);
    std::optional<NetworkConfig> cfg = apply_param(base, a.variable, v);
    double obj = 0.0;
    bool ok = cfg.has_value();
    if (ok) {
      try {
        obj = a.objective == "rate_coverage"
                  ? network_rate_coverage(*cfg, a.rho, load_mode)
                  : network_sir_coverage(*cfg, db_to_linear(a.tau_db));
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok) {
      sink.line(pv + ",analytic," + a.objective + ",failed,," +
                std::to_string(a.seed));
      continue;
    }
    emit_row(sink, pv, "analytic", a.objective, obj, 0.0, a.seed);
    // Ascending grid plus strict inequality breaks ties toward the
    // smaller parameter value.
    if (!have_best || obj > best_obj) {
      have_best = true;
      best_obj = obj;
      best_v = v;
    }
  }
  sink.close();
  if (!have_best) {
    std::cerr << "error: no grid point yielded a valid objective\n";
    return 1;
  }
  std::cout << "best " << a.variable << " = " << format_param(best_v)
            << " (objective " << a.objective << " = " << format_prob(best_obj)
            << ")\n";
  return 0;
}

// ---------------------------------------------------------------------------
// presets

int cmd_presets(const std::string& name) {
  if (!name.empty()) {
    std::cout << serialize_config(find_preset(name).config);
    return 0;
  }
  for (const Preset& p : presets()) {
    std::printf("%-8s %s\n", p.name.c_str(), p.summary.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dudekit: uplink coverage toolkit for two-tier networks with "
               "decoupled access"};
  app.require_subcommand(1);

  SweepArgs sw;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Evaluate metrics over a parameter grid, one CSV row per "
               "(grid point, engine, metric)");
  sweep->add_option("--config", sw.config_path, "Config file path");
  sweep->add_option("--preset", sw.preset_name, "Built-in preset name");
  sweep
      ->add_option("--param", sw.param,
                   "Swept parameter: lambda_ratio, bias_db, eta, tau_db, "
                   "rho, n_m")
      ->required()
      ->check(CLI::IsMember(
          {"lambda_ratio", "bias_db", "eta", "tau_db", "rho", "n_m"}));
  sweep->add_option("--grid", sw.grid_text, "Comma-separated grid values")
      ->required();
  sweep->add_option("--engine", sw.engine, "analytic, sim, or both")
      ->check(CLI::IsMember({"analytic", "sim", "both"}));
  sweep->add_option("--out", sw.out, "Output CSV path ('-' = stdout)");
  sweep->add_option("--seed", sw.seed, "Monte Carlo seed");
  sweep->add_option("--drops", sw.drops, "Monte Carlo drops per grid point");
  sweep->add_option("--window", sw.window, "Monte Carlo window side, km");
  sweep->add_option("--ue-density", sw.ue_density,
                    "Override user density for the Monte Carlo engine "
                    "(0 = use config)");
  sweep->add_option("--tau", sw.tau_db,
                    "Fixed SIR threshold in dB for non-threshold sweeps");
  sweep->add_option("--load-model", sw.load_model,
                    "Rate-coverage load model: pmf (exact) or mean")
      ->check(CLI::IsMember({"pmf", "mean"}));

  ValidateArgs va;
  CLI::App* validate = app.add_subcommand(
      "validate", "Compare closed-form vs Monte Carlo coverage; exit 0 iff "
                  "every threshold passes |gap| <= tolerance + CI");
  validate->add_option("--config", va.config_path, "Config file path");
  validate->add_option("--preset", va.preset_name, "Built-in preset name");
  validate->add_option("--tau-grid", va.tau_grid_text,
                       "Comma-separated SIR thresholds in dB");
  validate->add_option("--out", va.out, "Output CSV path ('-' = stdout)");
  validate->add_option("--seed", va.seed, "Monte Carlo seed");
  validate->add_option("--drops", va.drops, "Monte Carlo drops");
  validate->add_option("--window", va.window, "Monte Carlo window side, km");
  validate->add_option("--ue-density", va.ue_density,
                       "Override user density for the Monte Carlo engine");
  validate->add_option("--tolerance", va.tolerance,
                       "Allowed |analytic - MC| before adding the CI");
  validate->add_option("--inject-weight-error", va.inject_weight_error,
                       "Fault hook: scale the femto uplink weight in the "
                       "closed-form engine only (1.0 = off)");

  SearchArgs se;
  CLI::App* search = app.add_subcommand(
      "search", "Analytic grid argmax over bias_db or eta; ties go to the "
                "smaller value");
  search->add_option("--config", se.config_path, "Config file path");
  search->add_option("--preset", se.preset_name, "Built-in preset name");
  search->add_option("--objective", se.objective,
                     "sir_coverage (at --tau) or rate_coverage (at --rho)")
      ->check(CLI::IsMember({"sir_coverage", "rate_coverage"}));
  search->add_option("--variable", se.variable, "bias_db or eta")
      ->check(CLI::IsMember({"bias_db", "eta"}));
  search->add_option("--grid", se.grid_text,
                     "Comma-separated grid (default: -5..15 dB in 1 dB "
                     "steps for bias_db, 0..1 in 0.1 steps for eta)");
  search->add_option("--out", se.out, "Curve CSV path ('-' = stdout)");
  search->add_option("--seed", se.seed, "Recorded in the CSV seed column");
  search->add_option("--tau", se.tau_db, "SIR threshold in dB");
  search->add_option("--rho", se.rho, "Rate threshold in bits/s");
  search->add_option("--load-model", se.load_model,
                     "Rate-coverage load model: pmf (exact) or mean")
      ->check(CLI::IsMember({"pmf", "mean"}));

  std::string preset_to_dump;
  CLI::App* pre = app.add_subcommand(
      "presets", "List built-in presets, or dump one as config text");
  pre->add_option("--preset", preset_to_dump,
                  "Dump this preset as a parseable config file");

  try {
    app.parse(argc, argv);
    if (sweep->parsed()) return cmd_sweep(sw);
    if (validate->parsed()) return cmd_validate(va);
    if (search->parsed()) return cmd_search(se);
    return cmd_presets(preset_to_dump);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

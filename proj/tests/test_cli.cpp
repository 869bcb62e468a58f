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
// End-to-end checks of the command-line binary.  The binary under test
// is named by the DUDEKIT_BIN environment variable (the build system
// points it at the freshly built tool).  Expected numbers are computed
// in-process from the same library and the same config text, so every
// comparison exercises only the CLI layer: argument handling, config
// parsing, engine dispatch, and CSV formatting.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "dude/analytic.hpp"
#include "dude/config_io.hpp"
#include "dude/load.hpp"
#include "dude/model.hpp"
#include "dude/presets.hpp"

namespace {

using namespace dude;

std::string work_dir() {
  static const std::string dir = [] {
    const std::string d =
        (std::filesystem::temp_directory_path() /
         ("dudekit_cli_" + std::to_string(::getpid())))
            .string();
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text;
  REQUIRE(bool(f));
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("DUDEKIT_BIN");
  REQUIRE_MESSAGE(bin != nullptr,
                  "DUDEKIT_BIN must point at the built binary");
  static int counter = 0;
  const std::string tag = std::to_string(counter++);
  const std::string out_path = work_dir() + "/stdout_" + tag;
  const std::string err_path = work_dir() + "/stderr_" + tag;
  const std::string cmd = "\"" + std::string(bin) + "\" " + args + " > " +
                          out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  RunResult r;
  r.code = WEXITSTATUS(status);
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

bool has_line(const std::vector<std::string>& lines, const std::string& want) {
  return std::find(lines.begin(), lines.end(), want) != lines.end();
}

// The binary's own numeric formats, reproduced for exact-string rows.
std::string prob6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string param6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Mixed-tier config exercising the general analytic path: unequal
// exponents, partial power control, a biased multi-antenna macro tier.
const std::string kSweepConfig =
    "lambda_m = 1.5\n"
    "lambda_f = 5\n"
    "lambda_u = 3000\n"
    "p_m_dbm = 43\n"
    "p_f_dbm = 20\n"
    "p0_dbm_hz = -100\n"
    "n_m = 2\n"
    "n_f = 1\n"
    "bias_db = 4\n"
    "eta = 0.6\n"
    "alpha_m = 3.6\n"
    "alpha_f = 3.2\n"
    "w_hz = 10000000\n"
    "mode = DUDe\n";

// Light symmetric config for fast Monte Carlo invocations.
const std::string kLightConfig =
    "lambda_m = 2\n"
    "lambda_f = 2\n"
    "lambda_u = 3000\n"
    "p_m_dbm = 43\n"
    "p_f_dbm = 20\n"
    "p0_dbm_hz = -100\n"
    "n_m = 1\n"
    "n_f = 1\n"
    "bias_db = 0\n"
    "eta = 0\n"
    "alpha_m = 3.5\n"
    "alpha_f = 3.5\n"
    "w_hz = 10000000\n"
    "mode = DUDe\n";

// Antenna-asymmetric config whose coverage reacts strongly to the
// uplink weights, making the fault-injection hook visible above the
// Monte Carlo noise floor.
const std::string kValidateConfig =
    "lambda_m = 2\n"
    "lambda_f = 6\n"
    "lambda_u = 3000\n"
    "p_m_dbm = 43\n"
    "p_f_dbm = 20\n"
    "p0_dbm_hz = -100\n"
    "n_m = 4\n"
    "n_f = 1\n"
    "bias_db = 0\n"
    "eta = 0\n"
    "alpha_m = 3.5\n"
    "alpha_f = 3.5\n"
    "w_hz = 10000000\n"
    "mode = DUDe\n";

std::string config_path(const std::string& name, const std::string& text) {
  const std::string path = work_dir() + "/" + name;
  write_file(path, text);
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("presets list and dump as parseable config text") {
  const RunResult list = run_cli("presets");
  CHECK(list.code == 0);
  for (const Preset& p : presets()) {
    CHECK(list.out.find(p.name) != std::string::npos);
  }

  const RunResult dump = run_cli("presets --preset fig4a");
  CHECK(dump.code == 0);
  const NetworkConfig parsed = parse_config_text(dump.out, "fig4a-dump");
  const NetworkConfig& ref = find_preset("fig4a").config;
  CHECK(parsed.macro.density == doctest::Approx(ref.macro.density));
  CHECK(parsed.femto.density == doctest::Approx(ref.femto.density));
  CHECK(parsed.macro.power_mw ==
        doctest::Approx(ref.macro.power_mw).epsilon(1e-10));
  CHECK(parsed.macro.antennas == ref.macro.antennas);
  CHECK(parsed.femto.antennas == ref.femto.antennas);
  CHECK(parsed.eta == doctest::Approx(ref.eta));
  CHECK(parsed.mode == ref.mode);

  const RunResult bad = run_cli("presets --preset nosuch");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("threshold sweep rows equal in-process evaluations exactly") {
  const std::string cfg_file = config_path("sweep.cfg", kSweepConfig);
  const NetworkConfig cfg = parse_config_text(kSweepConfig, "sweep.cfg");
  const std::string csv = work_dir() + "/sweep_tau.csv";
  const RunResult r = run_cli("sweep --config " + cfg_file +
                              " --param tau_db --grid -3,2,7 --out " + csv);
  CHECK(r.code == 0);
  const std::vector<std::string> lines = split_lines(slurp(csv));
  REQUIRE(!lines.empty());
  CHECK(lines[0] == "param_value,engine,metric,value,ci_halfwidth,seed");
  // 1 header + 3 grid points * 3 metrics, analytic engine only.
  CHECK(lines.size() == 10);
  for (double db : {-3.0, 2.0, 7.0}) {
    const double tau = db_to_linear(db);
    const std::string pv = param6(db);
    CHECK(has_line(lines, pv + ",analytic,coverage," +
                              prob6(network_sir_coverage(cfg, tau)) +
                              ",0.000000,1"));
    CHECK(has_line(lines, pv + ",analytic,coverage_macro," +
                              prob6(sir_coverage(Tier::kMacro, cfg, tau)) +
                              ",0.000000,1"));
    CHECK(has_line(lines, pv + ",analytic,coverage_femto," +
                              prob6(sir_coverage(Tier::kFemto, cfg, tau)) +
                              ",0.000000,1"));
  }
}

TEST_CASE("association sweep rows equal in-process evaluations exactly") {
  const std::string cfg_file = config_path("assoc.cfg", kLightConfig);
  const NetworkConfig base = parse_config_text(kLightConfig, "assoc.cfg");
  const std::string csv = work_dir() + "/sweep_ratio.csv";
  const RunResult r =
      run_cli("sweep --config " + cfg_file +
              " --param lambda_ratio --grid 1,3,5 --tau 5 --out " + csv);
  CHECK(r.code == 0);
  const std::vector<std::string> lines = split_lines(slurp(csv));
  for (double ratio : {1.0, 3.0, 5.0}) {
    NetworkConfig cfg = base;
    cfg.femto.density = ratio * cfg.macro.density;
    const std::string pv = param6(ratio);
    CHECK(has_line(
        lines,
        pv + ",analytic,case1," +
            prob6(case_probability(AssociationCase::kMacroBoth, cfg)) +
            ",0.000000,1"));
    CHECK(has_line(
        lines,
        pv + ",analytic,case2," +
            prob6(case_probability(AssociationCase::kMacroDlFemtoUl, cfg)) +
            ",0.000000,1"));
    CHECK(has_line(
        lines,
        pv + ",analytic,assoc_femto," +
            prob6(tier_assoc_probability(Tier::kFemto, cfg)) +
            ",0.000000,1"));
    CHECK(has_line(lines,
                   pv + ",analytic,coverage," +
                       prob6(network_sir_coverage(cfg, db_to_linear(5.0))) +
                       ",0.000000,1"));
  }
}

TEST_CASE("rate sweep under the mean-load model matches the library") {
  const std::string cfg_file = config_path("rate.cfg", kLightConfig);
  const NetworkConfig cfg = parse_config_text(kLightConfig, "rate.cfg");
  const std::string csv = work_dir() + "/sweep_rho.csv";
  const RunResult r =
      run_cli("sweep --config " + cfg_file +
              " --param rho --grid 50000,200000 --load-model mean --out " +
              csv);
  CHECK(r.code == 0);
  const std::vector<std::string> lines = split_lines(slurp(csv));
  for (double rho : {50000.0, 200000.0}) {
    CHECK(has_line(lines,
                   param6(rho) + ",analytic,rate_coverage," +
                       prob6(network_rate_coverage(cfg, rho, LoadMode::kMean)) +
                       ",0.000000,1"));
  }
}

TEST_CASE("sweep output is byte-identical across reruns and sinks") {
  const std::string cfg_file = config_path("det.cfg", kLightConfig);
  const std::string common = "sweep --config " + cfg_file +
                             " --param tau_db --grid -5,0,5 --engine both "
                             "--drops 400 --window 8 --ue-density 30 --seed 9";
  const std::string csv_a = work_dir() + "/det_a.csv";
  const std::string csv_b = work_dir() + "/det_b.csv";
  CHECK(run_cli(common + " --out " + csv_a).code == 0);
  CHECK(run_cli(common + " --out " + csv_b).code == 0);
  const std::string a = slurp(csv_a);
  CHECK(!a.empty());
  CHECK(a == slurp(csv_b));

  // '-' routes the same bytes to stdout.
  const RunResult to_stdout = run_cli(common + " --out -");
  CHECK(to_stdout.code == 0);
  CHECK(to_stdout.out == a);

  // Monte Carlo rows carry a real confidence halfwidth; the closed-form
  // rows pin theirs at zero.
  bool saw_sim = false;
  for (const std::string& line : split_lines(a)) {
    if (line.find(",sim,coverage,") == std::string::npos) continue;
    saw_sim = true;
    std::istringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 6);
    const double value = std::stod(fields[3]);
    const double ci = std::stod(fields[4]);
    CHECK(value >= 0.0);
    CHECK(value <= 1.0);
    CHECK(ci > 0.0);
  }
  CHECK(saw_sim);
}

TEST_CASE("invalid grid points become failed rows without aborting") {
  const std::string cfg_file = config_path("failrows.cfg", kLightConfig);
  const std::string csv = work_dir() + "/eta_rows.csv";
  const RunResult r = run_cli("sweep --config " + cfg_file +
                              " --param eta --grid 0.5,1.5 --out " + csv);
  CHECK(r.code == 0);
  const std::vector<std::string> lines = split_lines(slurp(csv));
  CHECK(has_line(lines, "1.5,analytic,case1,failed,,1"));
  CHECK(has_line(lines, "1.5,analytic,coverage,failed,,1"));
  // The valid point still produced numeric rows.
  bool good = false;
  for (const std::string& line : lines) {
    if (line.rfind("0.5,analytic,case1,0.", 0) == 0) good = true;
  }
  CHECK(good);

  // Non-integer antenna counts are likewise per-point failures.
  const RunResult r2 = run_cli("sweep --config " + cfg_file +
                               " --param n_m --grid 2.5 --out -");
  CHECK(r2.code == 0);
  CHECK(has_line(split_lines(r2.out), "2.5,analytic,case1,failed,,1"));

  // A Monte Carlo engine failure (window far too small for the
  // densities) reports failed rows for every grid point, exit 0.
  const RunResult r3 =
      run_cli("sweep --config " + cfg_file +
              " --param tau_db --grid 0,5 --engine sim --window 2 --out -");
  CHECK(r3.code == 0);
  CHECK(has_line(split_lines(r3.out), "0,sim,coverage,failed,,1"));
  CHECK(has_line(split_lines(r3.out), "5,sim,coverage,failed,,1"));
}

TEST_CASE("validate passes honestly and fails under fault injection") {
  const std::string cfg_file = config_path("validate.cfg", kValidateConfig);
  const std::string csv = work_dir() + "/validate.csv";
  const std::string common = "validate --config " + cfg_file +
                             " --drops 2000 --window 10 --ue-density 60 "
                             "--seed 3 ";
  const RunResult pass = run_cli(common + "--tolerance 0.12 --out " + csv);
  CHECK(pass.code == 0);
  const std::vector<std::string> lines = split_lines(slurp(csv));
  REQUIRE(lines.size() == 8);  // header + 7 default thresholds
  CHECK(lines[0] == "tau_db,analytic,mc,ci_halfwidth,abs_gap,pass");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ss(lines[i]);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 6);
    CHECK(fields[5] == "pass");
    // The reported gap is the |analytic - mc| of the same row.
    const double analytic = std::stod(fields[1]);
    const double mc = std::stod(fields[2]);
    const double gap = std::stod(fields[4]);
    CHECK(gap == doctest::Approx(std::fabs(analytic - mc)).epsilon(1e-3));
  }

  // Scaling the closed-form engine's femto uplink weight by 100 must
  // break agreement at some threshold: exit 1 and at least one fail row.
  const RunResult fail = run_cli(common +
                                 "--tolerance 0.005 --inject-weight-error 100 "
                                 "--out -");
  CHECK(fail.code == 1);
  bool saw_fail = false;
  for (const std::string& line : split_lines(fail.out)) {
    if (line.size() >= 5 && line.substr(line.size() - 5) == ",fail") {
      saw_fail = true;
    }
  }
  CHECK(saw_fail);
}

TEST_CASE("search reports the grid argmax with first-wins ties") {
  const std::string cfg_file = config_path("search.cfg", kLightConfig);
  const NetworkConfig base = parse_config_text(kLightConfig, "search.cfg");

  // Degenerate one-point grid: the answer is the point.
  NetworkConfig at7 = base;
  at7.femto.bias = db_to_linear(7.0);
  const double obj7 = network_sir_coverage(at7, 1.0);
  const RunResult one = run_cli("search --config " + cfg_file +
                                " --variable bias_db --grid 7 --tau 0 --out " +
                                work_dir() + "/search_one.csv");
  CHECK(one.code == 0);
  CHECK(one.out == "best bias_db = 7 (objective sir_coverage = " +
                       prob6(obj7) + ")\n");

  // Two-point eta grid: expectation computed from the library, ties
  // resolved toward the smaller value by the ascending strict compare.
  NetworkConfig e0 = base;
  e0.eta = 0.0;
  NetworkConfig e1 = base;
  e1.eta = 1.0;
  const double c0 = network_sir_coverage(e0, 1.0);
  const double c1 = network_sir_coverage(e1, 1.0);
  const double best_eta = c1 > c0 ? 1.0 : 0.0;
  const RunResult two = run_cli("search --config " + cfg_file +
                                " --variable eta --grid 0,1 --tau 0 --out " +
                                work_dir() + "/search_two.csv");
  CHECK(two.code == 0);
  CHECK(two.out.rfind("best eta = " + param6(best_eta), 0) == 0);

  // A grid with no valid point is an error, not a silent answer.
  const RunResult none = run_cli("search --config " + cfg_file +
                                 " --variable eta --grid 1.2,1.5");
  CHECK(none.code == 1);
  CHECK(none.err.find("no grid point") != std::string::npos);
}

TEST_CASE("config and usage errors exit with distinct codes") {
  const std::string cfg_file = config_path("errors.cfg", kLightConfig);

  // Missing config file: config error, code 2.
  const RunResult missing =
      run_cli("sweep --config /nonexistent.cfg --param tau_db --grid 0");
  CHECK(missing.code == 2);
  CHECK(missing.err.find("error:") != std::string::npos);

  // Malformed config line: diagnostic names file and line.
  const std::string bad_cfg = work_dir() + "/bad.cfg";
  write_file(bad_cfg, "lambda_m = 1\nlambda_f\n");
  const RunResult malformed =
      run_cli("sweep --config " + bad_cfg + " --param tau_db --grid 0");
  CHECK(malformed.code == 2);
  CHECK(malformed.err.find(":2:") != std::string::npos);

  // Config source must be exactly one of --config/--preset.
  const RunResult both = run_cli("sweep --config " + cfg_file +
                                 " --preset fig2 --param tau_db --grid 0");
  CHECK(both.code == 2);
  const RunResult neither = run_cli("sweep --param tau_db --grid 0");
  CHECK(neither.code == 2);

  // Grid text errors: empty token, duplicate value.
  CHECK(run_cli("sweep --config " + cfg_file +
                " --param tau_db --grid 1,,2").code == 2);
  CHECK(run_cli("sweep --config " + cfg_file +
                " --param tau_db --grid 1,1").code == 2);

  // Argument-parser errors are nonzero but not config errors.
  const RunResult unknown_verb = run_cli("frobnicate");
  CHECK(unknown_verb.code != 0);
  CHECK(unknown_verb.code != 2);
  const RunResult missing_param =
      run_cli("sweep --config " + cfg_file + " --grid 0");
  CHECK(missing_param.code != 0);
  const RunResult bad_member =
      run_cli("sweep --config " + cfg_file +
              " --param tau_db --grid 0 --engine turbo");
  CHECK(bad_member.code != 0);
}

}  // TEST_SUITE

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
// Benchmark: OpenMP drop estimator vs its serial reference twin.
//
// Runs the same (config, options) through dude::estimate (parallel) and
// dude::estimate_serial, times both, verifies the integer tallies are
// bit-identical, and prints throughput and speedup.  Exits nonzero if
// the two engines disagree on any tally.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "dude/model.hpp"
#include "dude/presets.hpp"
#include "dude/sim.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

bool tallies_equal(const dude::SimEstimate& a, const dude::SimEstimate& b) {
  return a.drops == b.drops && a.sir_successes == b.sir_successes &&
         a.sir_successes_tier == b.sir_successes_tier &&
         a.rate_successes == b.rate_successes &&
         a.rate_successes_tier == b.rate_successes_tier &&
         a.tier_drops == b.tier_drops && a.case_counts == b.case_counts &&
         a.violation_count == b.violation_count && a.load_sum == b.load_sum &&
         a.resample_total == b.resample_total;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark the parallel drop estimator against its serial twin"};

  std::string preset_name = "fig4d";
  uint64_t drops = 20000;
  uint64_t seed = 1;
  double window = 12.0;
  double ue_density = 250.0;
  int repeats = 3;
  app.add_option("--preset", preset_name, "Named scenario (see `dudekit presets`)");
  app.add_option("--drops", drops, "Drops per timed run");
  app.add_option("--seed", seed, "Base RNG seed");
  app.add_option("--window", window, "Window side length, km");
  app.add_option("--ue-density", ue_density,
                 "User density override (0 keeps the preset value)");
  app.add_option("--repeats", repeats, "Timed repetitions (best is reported)");

  CLI11_PARSE(app, argc, argv);

  dude::NetworkConfig cfg;
  try {
    cfg = dude::find_preset(preset_name).config;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  dude::SimOptions opt;
  opt.window_km = window;
  opt.n_drops = drops;
  opt.seed = seed;
  opt.ue_density_override = ue_density;
  opt.tau_grid = {0.1, 1.0, 10.0};
  opt.rho_grid = {1.0e5};

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("preset=%s drops=%llu window=%g km threads=%d repeats=%d\n",
              preset_name.c_str(), static_cast<unsigned long long>(drops),
              window, threads, repeats);

  double best_par = 1e300, best_ser = 1e300;
  dude::SimEstimate par, ser;
  try {
    for (int r = 0; r < repeats; ++r) {
      auto t = std::chrono::steady_clock::now();
      par = dude::estimate(cfg, opt);
      best_par = std::min(best_par, seconds_since(t));

      t = std::chrono::steady_clock::now();
      ser = dude::estimate_serial(cfg, opt);
      best_ser = std::min(best_ser, seconds_since(t));
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  const bool same = tallies_equal(par, ser);
  std::printf("parallel : %8.3f s  (%8.0f drops/s)\n", best_par,
              static_cast<double>(drops) / best_par);
  std::printf("serial   : %8.3f s  (%8.0f drops/s)\n", best_ser,
              static_cast<double>(drops) / best_ser);
  std::printf("speedup  : %.2fx\n", best_ser / best_par);
  std::printf("tallies  : %s\n", same ? "identical" : "MISMATCH");
  if (!par.sir_coverage.empty()) {
    std::printf("coverage(tau=0 dB) = %.4f +/- %.4f\n", par.sir_coverage[1],
                par.sir_ci[1]);
  }
  return same ? 0 : 1;
}

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

#ifndef DUDE_SIM_HPP_
#define DUDE_SIM_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "dude/model.hpp"

namespace dude {

// One snapshot of the network: station and user positions drawn inside
// a square window centered at the origin.
struct Realization {
  double half_width = 0.0;  // km; window spans [-half_width, half_width]^2
  std::vector<std::array<double, 2>> macro_bs;
  std::vector<std::array<double, 2>> femto_bs;
  std::vector<std::array<double, 2>> ues;
  // Stream identity: everything random about this snapshot and its
  // fading/scheduling follows from (seed, drop, salt).
  uint64_t seed = 0;
  uint64_t drop = 0;
  uint16_t salt = 0;
  int resample_attempts = 0;  // empty-process redraws before this one
};

// Outcome of one drop for the tagged (typical, scheduled) user.
struct DropResult {
  AssociationCase tagged_case = AssociationCase::kMacroBoth;
  Tier serving_tier = Tier::kMacro;
  double serving_distance = 0.0;  // km
  double sir = 0.0;               // linear, > 0 (may be +inf with no interferer)
  uint64_t load = 1;              // users on the tagged station, >= 1
  double rate = 0.0;              // (W / load) log2(1 + SIR), bits/s
};

// How channel gains are drawn.
enum class FadingMode {
  kDistribution,     // signal ~ Gamma(N, 1), interference terms ~ Exp(1)
  kExplicitVectors,  // complex Gaussian vectors combined by the receiver
  kUnit,             // all gains exactly 1 (deterministic-channel tests)
};

struct SimOptions {
  double window_km = 20.0;  // full window side length
  uint64_t n_drops = 100000;
  uint64_t seed = 1;
  FadingMode fading = FadingMode::kDistribution;
  // Replaces cfg.ue_density when > 0.  The closed forms assume every
  // station has a user to schedule, so cross-engine comparisons use a
  // user density high enough to saturate the stations.
  double ue_density_override = 0.0;
  // Tagged links whose endpoints fall within this fraction of the
  // window border are redrawn (edge-effect control).
  double guard_fraction = 0.2;
  int max_resample = 64;  // redraw budget per drop (empty process/guard)
  std::vector<double> tau_grid;  // SIR thresholds, linear
  std::vector<double> rho_grid;  // rate thresholds, bits/s
};

// Aggregated estimates.  The primary state is integer tallies, which
// makes the result bit-identical for a given (seed, n_drops) no matter
// how drops are spread over threads; the floating-point curves are
// derived from the tallies afterwards.
struct SimEstimate {
  uint64_t drops = 0;
  std::vector<uint64_t> sir_successes;           // per tau, network-wide
  std::array<std::vector<uint64_t>, 2> sir_successes_tier;  // [macro, femto]
  std::vector<uint64_t> rate_successes;          // per rho
  std::array<std::vector<uint64_t>, 2> rate_successes_tier;
  std::array<uint64_t, 2> tier_drops{};          // serving-tier counts
  std::array<uint64_t, 3> case_counts{};         // both-macro, mixed, both-femto
  // Mixed-direction drops whose uplink landed on the macro tier; only a
  // macro-leaning uplink rule can produce them, and AssociationCase has
  // no value for that pair.
  uint64_t violation_count = 0;
  uint64_t load_sum = 0;  // tagged-station loads
  uint64_t resample_total = 0;

  // Derived from the tallies (95% Wilson intervals):
  std::vector<double> sir_coverage, sir_ci;
  std::vector<double> rate_coverage, rate_ci;
  std::array<double, 3> case_fraction{};
  double mean_load = 0.0;
};

// Draws one snapshot.  Deterministic given (cfg, window, seed, drop);
// a tier with zero stations (or zero users) is redrawn under a bumped
// salt, with the retry count recorded.  Throws ConfigError when the
// window is too small for ~50 expected stations in the sparser tier.
Realization realize(const NetworkConfig& cfg, double window_km,
                    uint64_t seed, uint64_t drop);

// Associates every user, schedules one user per station, and evaluates
// the tagged link.  The tagged user is the one nearest the window
// center and is conditioned to be its station's scheduled user.  Throws
// AssociationViolation when the tagged user lands on the mixed pair a
// macro-leaning uplink rule produces (see classify); the estimators
// tally that case instead of throwing.
DropResult run_drop(const Realization& r, const NetworkConfig& cfg,
                    FadingMode fading = FadingMode::kDistribution);

// Runs opt.n_drops independent drops and aggregates.  `estimate` fans
// the drops out across OpenMP threads when available; `estimate_serial`
// is the plain-loop reference twin.  Both produce identical tallies for
// identical (cfg, opt).
SimEstimate estimate(const NetworkConfig& cfg, const SimOptions& opt);
SimEstimate estimate_serial(const NetworkConfig& cfg, const SimOptions& opt);

// 95% Wilson score half-width for s successes in n trials.
double wilson_half_width(uint64_t successes, uint64_t trials);

}  // namespace dude

#endif  // DUDE_SIM_HPP_

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
// Internal helpers shared by the closed-form translation units.  Not
// part of the public interface.

#ifndef DUDE_SRC_SCENE_HPP_
#define DUDE_SRC_SCENE_HPP_

#include "dude/laplace.hpp"
#include "dude/model.hpp"

namespace dude {
namespace internal {

// Everything the per-tier formulas need, resolved once: serving tier K
// versus interfering tier J, uplink weight ratio, and both uplink
// association probabilities.
struct TierScene {
  Tier tier = Tier::kMacro;
  double lambda_k = 0.0, lambda_j = 0.0;
  double alpha_k = 0.0, alpha_j = 0.0;
  double zeta = 0.0;  // w_J / w_K
  double eta = 0.0;
  int n_k = 1;
  double a_k = 0.0, a_j = 0.0;
};

TierScene resolve_scene(const NetworkConfig& cfg, Tier tier);

// P[the weight-adjusted nearest a-tier station beats the nearest b-tier
// station]: 2 pi lambda_a Int_0^inf X exp(-pi [lambda_b w^(2/alpha_b)
// X^(2 alpha_a/alpha_b) + lambda_a X^2]) dX, evaluated by quadrature
// with no equal-exponent shortcut (the closed form for that case lives
// in the tests as an oracle).
double weighted_win_probability(double lambda_a, double alpha_a,
                                double lambda_b, double alpha_b,
                                double weight);

// LaplaceExponent built from an already resolved scene, skipping the
// association-probability quadratures the public factory performs.
LaplaceExponent make_exponent_from_scene(const TierScene& scene, double x,
                                         IntegrationLimits limits);

// SIR coverage with the scene already resolved; the public entry point
// wraps this, and threshold sweeps reuse one scene across many calls.
double sir_coverage_from_scene(const TierScene& scene, double tau,
                               IntegrationLimits limits);

// Truncation radius: exp(-u^2) factors make integrands negligible past
// u = 8 in the unit-scaled variable (e^-64 ~ 1.6e-28).
inline constexpr double kGaussTail = 8.0;

}  // namespace internal
}  // namespace dude

#endif  // DUDE_SRC_SCENE_HPP_

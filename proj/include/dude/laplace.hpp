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

#ifndef DUDE_LAPLACE_HPP_
#define DUDE_LAPLACE_HPP_

#include <vector>

#include "dude/model.hpp"

namespace dude {

// Outer limits used by the distance averages inside the interference
// functional when power control is active (eta > 0).  The two variants
// bracket how much interferer-distance mass is counted:
//
//   kInfinite      - each interfering user's link distance is averaged
//                    over its full distribution;
//   kServingCapped - the averages are cut off at caps derived from the
//                    tagged user's own serving distance (the serving
//                    distance itself for same-tier interferers, and its
//                    weight-converted image for cross-tier ones).
//
// Exact cell geometry lies between these approximations; which one
// tracks simulation better is an empirical question, settled by a
// recorded calibration against the Monte Carlo engine (see README).
// With eta == 0 the functional needs no distance average at all and both
// variants coincide.
enum class IntegrationLimits { kInfinite, kServingCapped };

// Default variant used by the coverage APIs, fixed by the calibration
// mentioned above.
inline constexpr IntegrationLimits kDefaultIntegrationLimits =
    IntegrationLimits::kInfinite;

// Log-Laplace transform ("exponent") of the uplink interference seen at
// the station serving a tagged user of the given tier at distance x:
// f(s) with L_I(s) = exp(f(s)).  The object captures everything the
// evaluation needs so that repeated derivative queries (and queries at
// many s values) amortize the setup.
struct LaplaceExponent {
  Tier tier = Tier::kMacro;
  double x = 0.0;  // tagged user's serving distance, km
  IntegrationLimits limits = kDefaultIntegrationLimits;

  // Resolved scenario parameters (serving tier K, interfering tier J).
  double lambda_k = 0.0, lambda_j = 0.0;
  double alpha_k = 0.0, alpha_j = 0.0;
  double zeta = 0.0;  // uplink weight ratio w_J / w_K
  double eta = 0.0;
  double a_k = 0.0, a_j = 0.0;  // uplink tier association probabilities

  // Fully compensating power control (eta == 1) with kInfinite limits
  // makes the exponent independent of both x and the integration
  // variable, leaving two fixed distance moments; they are precomputed
  // here and reused across all derivative orders and s values.
  bool moments_ready = false;
  double moment_k = 0.0;  // E[X_K^2]
  double moment_j = 0.0;  // E[X_J^(2 alpha_J / alpha_K)]
};

// Builds the exponent for a tagged user of `tier` served at distance
// x km under `cfg`.  Throws ConfigError for invalid configurations or
// non-positive x.
LaplaceExponent make_laplace_exponent(
    const NetworkConfig& cfg, Tier tier, double x,
    IntegrationLimits limits = kDefaultIntegrationLimits);

// Derivatives [f(s), f'(s), ..., f^(n)(s)] of the exponent at s >= 0.
// Signs follow complete monotonicity of exp(f): f(s) <= 0, f'(s) <= 0,
// and f^(k) carries the sign (-1)^k.
//
// Evaluation routes:
//   eta == 0  - closed hypergeometric forms; no quadrature at all (the
//               interferer transmit powers are constant, so the distance
//               averages disappear), and `limits` has no effect;
//   eta  > 0  - one adaptive quadrature per order against each tier's
//               serving-distance density, with hypergeometric kernels,
//               over the limits selected by `le.limits`;
//   eta == 1 with kInfinite - the quadratures collapse to the cached
//               x-independent moments.
std::vector<double> laplace_exponent_derivs(const LaplaceExponent& le,
                                            double s, int n);

// Success probability of an n_antennas-branch combining receiver at
// threshold-scaled argument s: sum_{n=0}^{N-1} (-s)^n/n! L^(n)(s) with
// L = exp(f).  Every term is a probability mass and must be
// non-negative; terms below -kProbabilityTol raise NumericError, and the
// total is clamped to [0, 1] only within the same tolerance.
double mrc_success_probability(const LaplaceExponent& le, double s,
                               int n_antennas);

// Absolute slack allowed when clamping probability terms and totals;
// covers quadrature noise amplified through the derivative assembly.
inline constexpr double kProbabilityTol = 1e-6;

}  // namespace dude

#endif  // DUDE_LAPLACE_HPP_

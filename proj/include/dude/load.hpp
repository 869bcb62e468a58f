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

#ifndef DUDE_LOAD_HPP_
#define DUDE_LOAD_HPP_

#include <vector>

#include "dude/laplace.hpp"
#include "dude/model.hpp"

namespace dude {

// Distribution of the number of users sharing the station that serves a
// tagged user (the tagged user included).  Built on the standard
// 3.5-shaped cell-area approximation: with mean per-station user mass
// mu = lambda_U A_K / lambda_K,
//
//   P(load = n) = 3.5^3.5 Gamma(n+3.5) mu^(n-1)
//                 / (Gamma(3.5) (n-1)! (mu+3.5)^(n+3.5)),  n >= 1.
//
// The pmf sums exactly to one; its mean is 1 + (9/7) mu.  `mean_load`
// instead carries the customary linear approximation 1 + 1.28 mu, which
// the mean-load rate mode uses; the ~0.5% gap between the two constants
// is a property of the source approximations and is intentionally not
// reconciled.
struct LoadModel {
  double mu = 0.0;         // lambda_U A_K / lambda_K
  double mean_load = 0.0;  // 1 + 1.28 mu
  // pmf[i] = P(load == i + 1); truncated once the cumulative mass
  // reaches 1 - 1e-8 (not renormalized).
  std::vector<double> pmf;
};

LoadModel load_pmf(Tier t, const NetworkConfig& cfg);

// How rate coverage averages over the serving station's load.
enum class LoadMode {
  kPmf,   // exact average against the truncated load pmf
  kMean,  // single evaluation at the linearized mean load
};

// Rate coverage P((W / load) log2(1 + SIR) > rho) of a user served by
// tier t, at rate threshold rho in bit/s.
double rate_coverage(Tier t, const NetworkConfig& cfg, double rho,
                     LoadMode mode,
                     IntegrationLimits limits = kDefaultIntegrationLimits);

// Association-probability-weighted rate coverage over both tiers.
double network_rate_coverage(const NetworkConfig& cfg, double rho,
                             LoadMode mode,
                             IntegrationLimits limits =
                                 kDefaultIntegrationLimits);

}  // namespace dude

#endif  // DUDE_LOAD_HPP_

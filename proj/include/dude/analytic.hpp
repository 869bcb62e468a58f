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

#ifndef DUDE_ANALYTIC_HPP_
#define DUDE_ANALYTIC_HPP_

#include <functional>

#include "dude/laplace.hpp"
#include "dude/model.hpp"

namespace dude {

// Probability that a random user falls in the given joint
// downlink/uplink association region.  The three regions partition the
// plane, so the values sum to 1 for any valid configuration; under a
// macro-leaning uplink rule (ul_leans_femto == false) the middle value
// is the probability of the downlink-femto/uplink-macro mix, the pair
// that actually occurs there.
double case_probability(AssociationCase c, const NetworkConfig& cfg);

// Probability that the uplink of a random user is served by tier t.
double tier_assoc_probability(Tier t, const NetworkConfig& cfg);

// Probability density of the distance (km) between a user and its
// uplink station, conditioned on that station belonging to tier t.
// The returned callable is self-contained and stays valid after cfg
// changes.
std::function<double(double)> serving_distance_pdf(Tier t,
                                                   const NetworkConfig& cfg);

// Uplink SIR coverage P(SIR > tau) of a user served by tier t, at linear
// threshold tau >= 0.
double sir_coverage(Tier t, const NetworkConfig& cfg, double tau,
                    IntegrationLimits limits = kDefaultIntegrationLimits);

// Association-probability-weighted coverage over both tiers.
double network_sir_coverage(const NetworkConfig& cfg, double tau,
                            IntegrationLimits limits =
                                kDefaultIntegrationLimits);

}  // namespace dude

#endif  // DUDE_ANALYTIC_HPP_

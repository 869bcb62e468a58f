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

#ifndef DUDE_COROLLARIES_HPP_
#define DUDE_COROLLARIES_HPP_

#include "dude/model.hpp"

namespace dude {

// Network SIR coverage through one of the specialized closed forms that
// exist in restricted parameter regimes.  Each id assembles its formula
// independently of the general evaluator, so agreement between the two
// is a meaningful consistency check, not a tautology.
//
//   id  extra hypotheses (beyond a valid config)           character
//   --  -------------------------------------------------  ------------
//   1   eta == 0                                           no quadrature
//                                                          over distance
//                                                          averages
//   2   eta == 1                                           two fixed
//                                                          moments
//   3   equal path-loss exponents, equal uplink weights    single-tier
//       (zeta == 1); any eta                               collapse
//   4   as 3, plus equal antenna counts                    fully
//                                                          symmetric
//   5   eta == 0, zeta == 1, equal exponents               single
//                                                          kernel value
//   6   eta == 0, equal exponents, single-antenna tiers    elementary
//   7   as 6, plus zeta == 1                               density-free
//
// Throws HypothesisError naming the first violated condition, and
// ConfigError for ids outside 1..7.  Weight equalities are accepted
// within a relative slack of 1e-9.
double corollary_coverage(int id, const NetworkConfig& cfg, double tau);

}  // namespace dude

#endif  // DUDE_COROLLARIES_HPP_

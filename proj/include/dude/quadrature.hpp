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

#ifndef DUDE_QUADRATURE_HPP_
#define DUDE_QUADRATURE_HPP_

#include <functional>

namespace dude {

// How an improper upper endpoint is handled.
enum class IntegralTransform {
  // Integrate the finite interval as given.
  kNone,
  // Map [lo, inf) onto t in [0, 1) via x = lo + t/(1-t); requires
  // domain.hi to be +infinity.
  kSemiInfinite,
};

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  // Number of interval bisections allowed before giving up.
  int max_subdivisions = 4000;
  IntegralTransform transform = IntegralTransform::kNone;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;  // may be +infinity with kSemiInfinite
};

struct IntegrationResult {
  double value = 0.0;
  // Conservative bound on the absolute error, summed over subintervals.
  double error = 0.0;
  int subdivisions = 0;
};

// Globally adaptive Gauss-Kronrod 7/15 integration of f over the domain.
// The worst subinterval (largest Kronrod-vs-Gauss discrepancy) is bisected
// until the summed error estimate satisfies
//     error <= max(abs_tol, rel_tol * |value|)
// or the subdivision budget runs out, in which case a NumericError is
// thrown: a result that cannot honor its requested tolerance is treated
// as a failure, not returned silently.
IntegrationResult integrate(const std::function<double(double)>& f,
                            Interval domain, const QuadratureSpec& spec);

}  // namespace dude

#endif  // DUDE_QUADRATURE_HPP_

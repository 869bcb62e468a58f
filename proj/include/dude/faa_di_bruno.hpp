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

#ifndef DUDE_FAA_DI_BRUNO_HPP_
#define DUDE_FAA_DI_BRUNO_HPP_

#include <vector>

namespace dude {

// n-th derivative of exp(f(s)) from the derivatives of f at the same
// point.  f_derivs[j] must hold f^(j)(s) for j = 0..n (f_derivs[0] is
// f(s) itself; entries beyond index n are ignored).  Implements
//
//   d^n/ds^n exp(f) = exp(f) * sum over partitions of n of
//       n! / (prod_j b_j! (j!)^b_j) * prod_j (f^(j))^b_j
//
// where b_j is the multiplicity of part j.  Partition coefficients are
// computed in exact 64-bit arithmetic through n = 12 and in log space
// above that.  n = 0 returns exp(f_derivs[0]).
//
// Throws NumericError when n is negative, exceeds kMaxPartitionOrder, or
// f_derivs is shorter than n+1.
double faa_di_bruno_exp(int n, const std::vector<double>& f_derivs);

}  // namespace dude

#endif  // DUDE_FAA_DI_BRUNO_HPP_
